# Tests for identities.relations and identities.recurrences
# licensed under the GNU Public License, version 2

import unittest

from curves.curvefunc import CurveRationalFunction
from helpers.exceptions import *
from identities.engine import verify_rec1, verify_rec2, verify_rel_x, verify_rel_x2
from identities.relations import RelationToX, slope
from identities.test_chain import gaussian_context


class TestRelationToX(unittest.TestCase):
    def setUp(self):
        self.context = gaussian_context()
        self.curve = self.context.curve

    def test_classical(self):
        report = verify_rel_x(self.context, '2', '1')
        self.assertTrue(report)
        x = CurveRationalFunction.x(self.curve)
        self.assertEqual(report.rhs, x - self.context.isogeny('2').x_map)
        psi = [CurveRationalFunction.from_function(self.context.classical_psi(n)) for n in range(4)]
        self.assertEqual(report.lhs, psi[3] / psi[2] ** 2)

    def test_gaussian(self):
        self.assertTrue(verify_rel_x(self.context, '1+i', 'i'))
        self.assertTrue(verify_rel_x(self.context, '2+i', '1'))

    def test_velu_basis(self):
        self.assertTrue(verify_rel_x(self.context, 'velu2@(1,0)∘(1+i)', 'velu2@(1,0)'))

    def test_antisymmetric(self):
        forward = verify_rel_x(self.context, '1+i', '1')
        backward = verify_rel_x(self.context, '1', '1+i')
        self.assertEqual(forward.lhs, -backward.lhs)

    def test_equal_labels(self):
        self.assertRaises(DegenerateInput, verify_rel_x, self.context, '1+i', '1+i')
        self.assertRaises(DegenerateInput, verify_rel_x, self.context, '1+i', '-1-i')

    def test_no_common_basis(self):
        self.assertRaises(DegenerateInput, verify_rel_x, self.context, 'velu2@(1,0)', '1')


class TestSecondRelationToX(unittest.TestCase):
    def setUp(self):
        self.context = gaussian_context()

    def test_integers(self):
        self.assertTrue(verify_rel_x2(self.context, '3', '1', '1'))
        self.assertTrue(verify_rel_x2(self.context, '3', '2', '1'))

    def test_gaussian(self):
        self.assertTrue(verify_rel_x2(self.context, '1+i', 'i', '1'))

    def test_sigma_cancels_alpha(self):
        self.assertRaises(DegenerateInput, verify_rel_x2, self.context, '2', '1', '-2')

    def test_tangent_slope(self):
        identity = RelationToX(self.context, {'alpha': '2', 'beta': '1'})
        one = self.context.label('1')
        tangent = slope(identity, one, one)
        self.assertEqual(tangent, CurveRationalFunction.parse(self.context.curve, '(3*x^2 - 1)/(2*y)'))
        self.assertRaises(DegenerateInput, slope, identity, one, self.context.label('-1'))


class TestRecurrences(unittest.TestCase):
    def setUp(self):
        self.context = gaussian_context()

    def test_first(self):
        self.assertTrue(verify_rec1(self.context, '1+i', 'i', '1'))
        report = verify_rec1(self.context, '2', '1', '3')
        self.assertTrue(report)
        self.assertEqual(report.rhs, 0)

    def test_first_degenerate(self):
        self.assertRaises(DegenerateInput, verify_rec1, self.context, '1', '2', '-1')

    def test_second(self):
        self.assertTrue(verify_rec2(self.context, '3', '2', '1', '1'))
        self.assertTrue(verify_rec2(self.context, '1+i', 'i', '1', 'i'))

    def test_second_degenerate(self):
        self.assertRaises(DegenerateInput, verify_rec2, self.context, '3', '2', '1', '-1')


if __name__ == '__main__':
    unittest.main()
