# Identities
# licensed under the GNU Public License, version 2

"""\
The verification engine: every identity between division polynomials is a class
derived from :py:class:`identities.templates.base.Identity`, registered by name in
:py:mod:`identities.__active__`, and checked by exact comparison of canonical forms.
"""

__all__ = ['chain',
           'engine',
           'pullback',
           'recurrences',
           'relations',
           'report',
           'suite']
