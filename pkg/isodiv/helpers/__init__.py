# isodiv - Helpers
# licensed under the GNU Public License, version 2

"""\
This module includes several helpful functions for isodiv to use.
Any functionality that could be used in multiple parts of the program should be defined here.

For example:
    - checking parameters: :py:func:`helpers.verify.positive_integer`
    - reading literals from the command line: :py:mod:`helpers.literals`
    - parsing the :file:`config.yml` file: :py:mod:`helpers.configparser`
"""

import os

__all__ = ['configparser', 'exceptions', 'literals', 'verify']

#: the repository root, where :file:`version` lives
ROOT_DIR = os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))


def get_version(filename: str = None) -> str:
    """\
    Returns the current isodiv version as a string that is read from a special version file

    :param filename: Name of the version file. If no name is supplied, the standard file
        ``/path/to/isodiv/version`` will be used

    :return: version string (as in the file)
    """
    if filename is None:
        filename = os.path.join(ROOT_DIR, 'version')
    with open(filename) as file:
        contents = file.read()
    return contents.strip()
