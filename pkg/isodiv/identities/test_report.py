# Tests for identities.report
# licensed under the GNU Public License, version 2

import json
import unittest

from algebra.field import FieldSpec
from curves.curvefunc import CurveRationalFunction
from curves.weierstrass import WeierstrassCurve
from identities.report import IdentityReport


class TestIdentityReport(unittest.TestCase):
    def setUp(self):
        self.curve = WeierstrassCurve(FieldSpec('Q'), 0, -1, 0)
        self.x = CurveRationalFunction.x(self.curve)

    def test_equal(self):
        report = IdentityReport('rel_x', {'alpha': '2'}, self.x, self.x)
        self.assertTrue(report)
        self.assertIsNone(report.discrepancy)
        self.assertNotIn('discrepancy', report.as_dict())
        self.assertEqual(report.as_dict()['field'], 'Q')

    def test_ratio(self):
        report = IdentityReport('rel_x', {}, self.x, 2 * self.x)
        self.assertFalse(report)
        self.assertEqual(report.discrepancy, CurveRationalFunction.constant(self.curve, 1) / 2)
        self.assertIn('FAILS', report.pretty())
        self.assertIn('discrepancy', report.pretty())

    def test_difference_against_zero(self):
        zero = CurveRationalFunction.constant(self.curve, 0)
        report = IdentityReport('rec1', {}, self.x, zero)
        self.assertEqual(report.discrepancy, self.x)

    def test_json(self):
        report = IdentityReport('chain', {'alpha': '1', 'beta': '2'}, self.x, self.x, retried=True)
        data = json.loads(report.to_json())
        self.assertEqual(data['name'], 'chain')
        self.assertTrue(data['equal'])
        self.assertTrue(data['retried'])
        self.assertEqual(data['inputs'], {'alpha': '1', 'beta': '2'})
        self.assertEqual(data['lhs'], str(self.x))


if __name__ == '__main__':
    unittest.main()
