# isodiv - Configuration File Parser
# licensed under the GNU Public License, version 2

from copy import deepcopy
import logging
import os

from orderedattrdict.yamlutils import from_yaml
from orderedattrdict import AttrDict as ConfigTree
import yaml

from helpers.exceptions import InvalidConf

# Load YAML always as AttrDict (aka ConfigTree)
yaml.add_constructor(u'tag:yaml.org,2002:map', from_yaml, Loader=yaml.SafeLoader)
yaml.add_constructor(u'tag:yaml.org,2002:omap', from_yaml, Loader=yaml.SafeLoader)

logger = logging.getLogger('isodiv.helpers.configparser')

#: the directory of :file:`defaults.yml` and :file:`config.yml`
CONFIG_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))

#: the sections every configuration must have
SECTIONS = ('Field', 'Curve', 'GChoices', 'Series', 'Nets', 'Suite', 'Output')


def update_settings_tree(base: ConfigTree, update: ConfigTree) -> ConfigTree:
    """
    For all attributes in ``update`` override the defaults set in ``base``
    or add them to the tree, if they did not exist in ``base``.

    :param base: default config tree
    :param update: "patch" for the default config tree

    :return: the updated tree
    """
    updated = deepcopy(base)
    for key in update:
        if type(update[key]) is ConfigTree and key in base and type(base[key]) is ConfigTree:
            updated[key] = update_settings_tree(base[key], update[key])
        else:
            updated[key] = update[key]
    return updated


def load_tree(filename: str) -> ConfigTree:
    """\
    :raises InvalidConf: if the file is no YAML map
    """
    try:
        with open(filename, 'r') as file:
            tree = yaml.safe_load(file)
    except yaml.YAMLError as error:
        raise InvalidConf("Cannot parse {}: {}".format(filename, error))
    if tree is None:
        return ConfigTree()
    if type(tree) is not ConfigTree:
        raise InvalidConf("{} must contain a map of settings".format(filename))
    logger.info("Successfully parsed {}".format(filename))
    return tree


def get_configuration(default_filename: str = 'defaults.yml', user_filename: str = 'config.yml') -> ConfigTree:
    """
    gets the current configuration, as specified by YAML files

    :param default_filename: name of the default settings file (relative to the program directory)
    :param user_filename: name of the user settings file (relative to the program directory); optional

    :return: settings tree
    :raises InvalidConf: if the defaults are missing or a section is malformed
    """
    default_path = os.path.join(CONFIG_DIR, default_filename)
    if not os.path.isfile(default_path):
        raise InvalidConf("The default configuration {} is missing".format(default_path))
    configuration = load_tree(default_path)

    user_path = os.path.join(CONFIG_DIR, user_filename)
    if os.path.isfile(user_path):
        configuration = update_settings_tree(base=configuration, update=load_tree(user_path))
    else:
        logger.debug("No user configuration at {}".format(user_path))

    for section in SECTIONS:
        if type(configuration.get(section)) is not ConfigTree:
            raise InvalidConf("The configuration has no section \"{}\"".format(section))
    if configuration.Output.format not in ('json', 'tsv', 'pretty'):
        raise InvalidConf("Output.format must be json, tsv or pretty (got: {})".format(configuration.Output.format))
    return configuration
