# Tests for helpers.configparser
# licensed under the GNU Public License, version 2

import os
import tempfile
import unittest

from helpers import configparser
from helpers.configparser import ConfigTree
from helpers.exceptions import *


class TestUpdateSettingsTree(unittest.TestCase):
    def test_nested_keys_are_merged(self):
        base = ConfigTree([('Suite', ConfigTree([('seed', 0), ('instances', 50)])), ('log_level', 'INFO')])
        update = ConfigTree([('Suite', ConfigTree([('instances', 5)]))])
        merged = configparser.update_settings_tree(base, update)
        self.assertEqual(merged.Suite.instances, 5)
        self.assertEqual(merged.Suite.seed, 0)
        self.assertEqual(base.Suite.instances, 50)

    def test_new_keys_are_added(self):
        merged = configparser.update_settings_tree(ConfigTree(), ConfigTree([('Output', ConfigTree())]))
        self.assertIn('Output', merged)


class TestConfiguration(unittest.TestCase):
    def test_defaults(self):
        conf = configparser.get_configuration(user_filename='no-such-file.yml')
        self.assertEqual(conf.Series.precision, 16)
        self.assertEqual(list(conf.Suite.primes), [13, 17, 29])
        self.assertEqual(conf.Nets.box, 4)
        self.assertIsNone(conf.GChoices.g1)

    def test_missing_defaults_fail(self):
        self.assertRaises(InvalidConf, configparser.get_configuration, 'no-such-file.yml')

    def test_malformed_files_fail(self):
        with tempfile.NamedTemporaryFile('w', suffix='.yml', delete=False) as file:
            file.write("- a list\n- of settings\n")
        try:
            self.assertRaises(InvalidConf, configparser.load_tree, file.name)
        finally:
            os.remove(file.name)

    def test_user_file(self):
        with tempfile.NamedTemporaryFile('w', suffix='.yml', dir=configparser.CONFIG_DIR, delete=False) as file:
            file.write("Output:\n  format: xml\n")
        try:
            self.assertRaises(InvalidConf, configparser.get_configuration,
                              user_filename=os.path.basename(file.name))
        finally:
            os.remove(file.name)


if __name__ == '__main__':
    unittest.main()
