# Tests for identities.engine
# licensed under the GNU Public License, version 2

import unittest

from algebra.field import FieldSpec
from curves.weierstrass import WeierstrassCurve
from divpoly.context import DivisionContext
from helpers.exceptions import *
from identities.__active__ import identities
from identities.engine import identity_class, run_identity, verify_rel_x
from identities.relations import RelationToX


class TestRegistry(unittest.TestCase):
    def test_names(self):
        self.assertEqual(sorted(identities), ['chain', 'pullback_lemma', 'rec1', 'rec2', 'rel_x', 'rel_x2',
                                              'second_chain'])
        for name, cls in identities.items():
            self.assertEqual(cls.name, name)

    def test_lookup(self):
        self.assertIs(identity_class('rel_x'), RelationToX)
        self.assertRaises(InvalidParameters, identity_class, 'rel_y')


class TestExtensionRetry(unittest.TestCase):
    def setUp(self):
        # no square root of -1 in F_11
        self.context = DivisionContext(WeierstrassCurve(FieldSpec('Fp', 11), 0, -1, 0))

    def test_retries_over_quadratic_extension(self):
        with self.assertLogs('isodiv.identities.engine', level='WARNING'):
            report = verify_rel_x(self.context, '1+i', 'i')
        self.assertTrue(report)
        self.assertTrue(report.retried)
        self.assertEqual(report.field, FieldSpec('Fp2', 11))
        self.assertTrue(report.as_dict()['retried'])

    def test_extension_session_is_reused(self):
        self.assertIs(self.context.base_change(FieldSpec('Fp2', 11)), self.context.base_change(FieldSpec('Fp2', 11)))

    def test_no_retry_without_permission(self):
        self.assertRaises(ExtensionRequired, verify_rel_x, self.context, '1+i', 'i', extension_ok=False)

    def test_integers_stay_in_the_prime_field(self):
        report = verify_rel_x(self.context, '3', '1')
        self.assertTrue(report)
        self.assertFalse(report.retried)
        self.assertEqual(report.field, FieldSpec('Fp', 11))

    def test_unknown_parameter(self):
        self.assertRaises(InvalidParameters, run_identity, 'rel_x', self.context,
                          {'alpha': '2', 'beta': '1', 'gamma': '3'})

    def test_parameters_must_be_a_map(self):
        self.assertRaises(InvalidParameters, run_identity, 'rel_x', self.context, ['2', '1'])


if __name__ == '__main__':
    unittest.main()
