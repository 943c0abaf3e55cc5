# Tests for isogenies.homs
# licensed under the GNU Public License, version 2

import unittest

from algebra.field import FieldSpec
from algebra.polynomial import Polynomial
from curves.weierstrass import WeierstrassCurve
from helpers.exceptions import *
from isogenies.homs import HomElement
from isogenies.isogeny import compose, gaussian, negation, velu2


class TestParsing(unittest.TestCase):
    def setUp(self):
        self.curve = WeierstrassCurve(FieldSpec('Q(i)'), 0, -1, 0)

    def test_gaussian_literals(self):
        self.assertEqual(HomElement.parse('1+2i', self.curve).coordinates, (1, 2))
        self.assertEqual(HomElement.parse('-i', self.curve).coordinates, (0, -1))
        self.assertEqual(HomElement.parse('3', self.curve).coordinates, (3, 0))
        self.assertEqual(HomElement.parse('(1+i)∘(1-i)', self.curve).coordinates, (2, 0))

    def test_velu_literal(self):
        label = HomElement.parse('velu2@(1,0)∘(1+i)', self.curve)
        self.assertEqual(label.coordinates, (1, 1))
        self.assertEqual(label.prefix, velu2(self.curve, self.curve.point(1, 0)))
        self.assertEqual(label.degree, 4)
        self.assertEqual(str(label), 'velu2@(1,0)∘(1+i)')

    def test_integers_move_past_explicit_isogenies(self):
        label = HomElement.parse('2∘velu2@(0,0)', self.curve)
        self.assertEqual(label.coordinates, (2, 0))
        self.assertEqual(label.degree, 8)

    def test_malformed_literals(self):
        self.assertRaises(InvalidParameters, HomElement.parse, '1/2', self.curve)
        self.assertRaises(InvalidParameters, HomElement.parse, 'velu2@1', self.curve)
        self.assertRaises(InvalidParameters, HomElement.parse, '1+i∘', self.curve)
        self.assertRaises(InvalidIsogeny, HomElement.parse, 'velu2@(2,0)', self.curve)

    def test_gaussian_on_curve_without_cm(self):
        curve = WeierstrassCurve(FieldSpec('Q(i)'), 1, -1, 2)
        self.assertRaises(InvalidIsogeny, HomElement.parse, '1+i', curve)

    def test_gaussian_cannot_move_past_explicit_isogeny(self):
        self.assertRaises(InvalidIsogeny, HomElement.parse, 'i∘velu2@(0,0)', self.curve)


class TestArithmetic(unittest.TestCase):
    def setUp(self):
        self.curve = WeierstrassCurve(FieldSpec('Q(i)'), 0, -1, 0)
        self.alpha = HomElement.parse('1+2i', self.curve)
        self.beta = HomElement.parse('1', self.curve)

    def test_module_operations(self):
        self.assertEqual((self.alpha + self.beta).coordinates, (2, 2))
        self.assertEqual((self.alpha - self.beta).coordinates, (0, 2))
        self.assertEqual((2 * self.alpha).coordinates, (2, 4))
        self.assertTrue((self.beta - self.beta).is_zero)

    def test_degree_is_quadratic(self):
        self.assertEqual(self.alpha.degree, 5)
        self.assertEqual((self.alpha + self.beta).degree, 8)

    def test_different_bases_cannot_be_added(self):
        other = HomElement.parse('velu2@(1,0)', self.curve)
        self.assertRaises(InvalidIsogeny, lambda: self.alpha + other)

    def test_realization(self):
        self.assertEqual(self.alpha.to_isogeny(), gaussian(self.curve, 1, 2))
        self.assertEqual((-self.beta).to_isogeny(), negation(self.curve))
        label = HomElement.parse('velu2@(1,0)∘(1+i)', self.curve)
        phi = velu2(self.curve, self.curve.point(1, 0))
        self.assertEqual(label.to_isogeny(), compose(phi, gaussian(self.curve, 1, 1)))
        self.assertEqual(label.to_isogeny().kernel_polynomial(),
                         Polynomial.parse(self.curve.spec, 'x*(x-i)^2'))

    def test_zero_has_no_isogeny(self):
        self.assertRaises(DegenerateInput, (self.beta - self.beta).to_isogeny)


class TestSeparability(unittest.TestCase):
    def test_agrees_with_degree_over_prime_field(self):
        curve = WeierstrassCurve(FieldSpec('Fp', 13), 0, -1, 0)
        for text in ('3+2i', '3-2i', '2+3i', '2-3i', '2+i', '1+i'):
            label = HomElement.parse(text, curve)
            if label.is_separable:
                self.assertEqual(label.to_isogeny().degree, label.degree, text)
            else:
                self.assertRaises(InvalidIsogeny, label.to_isogeny)

    def test_characteristic_zero(self):
        curve = WeierstrassCurve(FieldSpec('Q(i)'), 0, -1, 0)
        self.assertTrue(HomElement(curve, 3, 2).is_separable)
        self.assertFalse(HomElement(curve, 0, 0).is_separable)

    def test_inert_prime(self):
        curve = WeierstrassCurve(FieldSpec('Fp', 11), 0, -1, 0)
        self.assertFalse(HomElement(curve, 11, 22).is_separable)
        self.assertTrue(HomElement(curve, 11, 1).is_separable)


if __name__ == '__main__':
    unittest.main()
