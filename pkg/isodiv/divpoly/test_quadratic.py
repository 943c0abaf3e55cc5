# Tests for divpoly.quadratic
# licensed under the GNU Public License, version 2

import unittest

from algebra.field import FieldSpec
from curves.curvefunc import CurveRationalFunction
from curves.weierstrass import WeierstrassCurve
from divpoly.context import DivisionContext
from divpoly.quadratic import (quadratic_identity_check, quadratic_matrix, sqrt_hat_product,
                               sqrt_hat_product_by_roots)
from divpoly.test_psi import golden, load_goldens
from helpers.exceptions import *
from isogenies.homs import HomElement
from isogenies.isogeny import gaussian


class TestQuadraticIdentities(unittest.TestCase):
    def setUp(self):
        self.curve = WeierstrassCurve(FieldSpec('Q(i)'), 0, -1, 0)

    def label(self, text):
        return HomElement.parse(text, self.curve)

    def test_parallelogram(self):
        alpha, beta = self.label('1+i'), self.label('1')
        exponents = {alpha + beta: 1, alpha - beta: 1, alpha: -2, beta: -2}
        self.assertEqual(quadratic_matrix(exponents), (0, 0, 0))
        self.assertTrue(quadratic_identity_check(exponents))

    def test_cube(self):
        alpha, beta, gamma = self.label('1'), self.label('i'), self.label('1+2i')
        exponents = {}
        for label, n in ((alpha + beta + gamma, 1), (alpha + beta, -1), (alpha + gamma, -1), (beta + gamma, -1),
                         (alpha, 1), (beta, 1), (gamma, 1)):
            exponents[label] = exponents.get(label, 0) + n
        self.assertTrue(quadratic_identity_check(exponents))

    def test_failing(self):
        self.assertFalse(quadratic_identity_check({self.label('1+i'): 1, self.label('1'): -2}))
        self.assertEqual(quadratic_matrix({self.label('1+i'): 1, self.label('1'): -2}), (-1, 1, 1))

    def test_no_common_basis(self):
        exponents = {self.label('1'): 1, self.label('velu2@(1,0)'): -1}
        self.assertRaises(DegenerateInput, quadratic_identity_check, exponents)


class TestSqrtHatProduct(unittest.TestCase):
    def setUp(self):
        self.curve = WeierstrassCurve(FieldSpec('Q(i)'), 0, -1, 0)
        self.context = DivisionContext(self.curve, g_overrides={1: gaussian(self.curve, 1, 1)})

    def label(self, text):
        return self.context.label(text)

    def hat_product(self, exponents):
        product = self.context.psi_hat(0)
        for label, n in exponents.items():
            product = product * self.context.psi_hat_of(label) ** n
        return product

    def test_squares_to_hat_product(self):
        alpha, beta = self.label('1+i'), self.label('1')
        for exponents in ({alpha + beta: 1, alpha - beta: 1, alpha: -2, beta: -2},
                          {alpha + alpha: 1, alpha: -4},
                          {self.label('1+2i'): 1, self.label('-1-2i'): -1}):
            root = sqrt_hat_product(exponents, self.context.scaling)
            self.assertEqual(root.value ** 2, self.hat_product(exponents).value)

    def test_golden(self):
        context, entries = load_goldens()
        alpha, beta = context.label('1+i'), context.label('1')
        root = context.sqrt_hat_product({alpha + beta: 1, alpha - beta: 1, alpha: -2, beta: -2})
        hat = CurveRationalFunction.parse(context.curve, golden(entries, 'hat-index', '1'))
        self.assertEqual(root.value, hat.inverse())

    def test_by_roots_agrees_up_to_sign(self):
        alpha, beta = self.label('1+i'), self.label('1')
        for exponents in ({alpha + beta: 1, alpha - beta: 1, alpha: -2, beta: -2},
                          {alpha + alpha: 1, alpha: -4}):
            root = self.context.sqrt_hat_product(exponents)
            other = sqrt_hat_product_by_roots(self.hat_product(exponents))
            self.assertIn(other, (root.value, -root.value))

    def test_rejections(self):
        self.assertRaises(DegenerateInput, sqrt_hat_product, {self.label('1+i'): 1}, self.context.scaling)
        zero = self.label('1') - self.label('1')
        self.assertRaises(DegenerateInput, sqrt_hat_product, {zero: 1}, self.context.scaling)


if __name__ == '__main__':
    unittest.main()
