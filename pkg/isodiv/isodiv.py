# isodiv command line
# licensed under the GNU Public License, version 2
#
# This program is free software; you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation in version 2.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.

"""\
This module starts the isodiv command line.
The real work does not happen here, though: see :py:mod:`console`.
"""

import logging
import sys

import coloredlogs

from console import Console, ERROR
from helpers.configparser import get_configuration
from helpers.exceptions import InvalidConf

logger = logging.getLogger('isodiv.main')


def main(argv: list) -> int:
    try:
        user_config = get_configuration()
    except InvalidConf as error:
        coloredlogs.install(level='WARNING')
        logger.error(error)
        return ERROR
    coloredlogs.install(level=user_config.log_level)
    return Console(user_config).run(argv)


if __name__ == '__main__':
    sys.exit(main(sys.argv[1:]))
