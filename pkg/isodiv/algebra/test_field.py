# Tests for algebra.field
# licensed under the GNU Public License, version 2

import unittest
from fractions import Fraction

from algebra.field import FieldSpec
from helpers.exceptions import *


class TestFieldSpec(unittest.TestCase):
    def test_parse_literals(self):
        self.assertEqual(str(FieldSpec.parse('Q')), 'Q')
        self.assertEqual(str(FieldSpec.parse('Q(i)')), 'Q(i)')
        self.assertEqual(str(FieldSpec.parse('Fp:13')), 'Fp:13')
        self.assertEqual(FieldSpec.parse('Fp2:11').order, 121)

    def test_composite_modulus_fails(self):
        self.assertRaises(InvalidField, FieldSpec.parse, 'Fp:15')

    def test_characteristic_two_fails(self):
        self.assertRaises(InvalidField, FieldSpec.parse, 'Fp:2')

    def test_unknown_kind_fails(self):
        self.assertRaises(InvalidParameters, FieldSpec.parse, 'Z')

    def test_imaginary_unit_of_prime_fields(self):
        self.assertEqual(FieldSpec.parse('Fp:13').parse_element('i'), 5)
        self.assertIsNone(FieldSpec.parse('Fp:11').sqrt_minus_one())
        self.assertRaises(InvalidParameters, FieldSpec.parse('Fp:11').parse_element, 'i')

    def test_extension_generator_squares_to_non_residue(self):
        spec = FieldSpec.parse('Fp2:11')
        s = spec.generator()
        self.assertEqual(s * s, -1)


class TestFieldElementArithmetic(unittest.TestCase):
    def setUp(self):
        self.Q = FieldSpec('Q')
        self.Qi = FieldSpec('Q(i)')

    def test_gaussian_inverse(self):
        z = self.Qi.parse_element('1+2i')
        self.assertEqual(z.inverse(), self.Qi.element(Fraction(1, 5), Fraction(-2, 5)))

    def test_zero_inverse_fails(self):
        self.assertRaises(ZeroDivisionError, self.Q.zero.inverse)

    def test_subfield_coercion(self):
        total = self.Q(2) + self.Qi.generator()
        self.assertEqual(total.spec, self.Qi)
        self.assertEqual(total, self.Qi.element(2, 1))

    def test_subfield_on_the_left(self):
        small, large = FieldSpec('Fp', 13), FieldSpec('Fp2', 13)
        s = large.generator()
        self.assertEqual(small(2) + s, large.element(2, 1))
        self.assertEqual(small(2) - s, large.element(2, -1))
        self.assertEqual((small(3) * s).spec, large)
        self.assertEqual(small(1) / s * s, large.one)
        self.assertEqual(self.Q(1) - self.Qi.generator(), self.Qi.element(1, -1))

    def test_mixed_prime_fields_fail(self):
        a = FieldSpec('Fp', 11)(3)
        b = FieldSpec('Fp', 13)(3)
        self.assertRaises(InvalidField, lambda: a + b)

    def test_fractions_reduce_mod_p(self):
        spec = FieldSpec('Fp', 7)
        self.assertEqual(spec(Fraction(1, 2)), 4)

    def test_negative_power(self):
        self.assertEqual(self.Q(2) ** -2, Fraction(1, 4))


class TestFieldElementRoots(unittest.TestCase):
    def test_rational_sqrt(self):
        Q = FieldSpec('Q')
        self.assertEqual(Q(4).sqrt(), 2)
        self.assertIsNone(Q(2).sqrt())
        self.assertEqual(Q(Fraction(9, 4)).sqrt(), Fraction(3, 2))

    def test_gaussian_sqrt(self):
        Qi = FieldSpec('Q(i)')
        self.assertEqual(Qi.parse_element('2i').sqrt(), Qi.parse_element('1+i'))
        self.assertEqual(Qi(-4).sqrt(), Qi.parse_element('2i'))

    def test_prime_field_sqrt_is_canonical(self):
        self.assertEqual(FieldSpec('Fp', 11)(3).sqrt(), 5)
        self.assertIsNone(FieldSpec('Fp', 11)(2).sqrt())

    def test_extension_sqrt_of_non_residue(self):
        spec = FieldSpec('Fp2', 11)
        root = spec(2).sqrt()
        self.assertIsNotNone(root)
        self.assertEqual(root * root, 2)

    def test_cube_roots(self):
        self.assertEqual(FieldSpec('Q')(Fraction(27, 8)).nth_root(3), Fraction(3, 2))
        self.assertEqual(FieldSpec('Fp', 7)(6).nth_root(3), 3)
        self.assertIsNone(FieldSpec('Q')(2).nth_root(3))


class TestFieldElementPrinting(unittest.TestCase):
    def test_gaussian_literals(self):
        Qi = FieldSpec('Q(i)')
        for literal in ('1+2i', '2i/5', '-i', '1/5', '-1/5-2i'):
            self.assertEqual(str(Qi.parse_element(literal)), literal)

    def test_sort_order(self):
        Q = FieldSpec('Q')
        ordered = sorted([Q(-1), Q(2), Q(0), Q(1)], key=lambda e: e.sort_key())
        self.assertEqual(ordered, [0, 1, -1, 2])


if __name__ == '__main__':
    unittest.main()
