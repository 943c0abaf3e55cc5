# Identity Templates
# licensed under the GNU Public License, version 2

"""\
The template every identity derives from. It provides parameter registration,
label parsing and the report plumbing, so an identity module only has to say
how both sides are computed.
"""

__all__ = ['base']
