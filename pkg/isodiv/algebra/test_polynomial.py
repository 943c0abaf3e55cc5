# Tests for algebra.polynomial
# licensed under the GNU Public License, version 2

import unittest

from algebra.field import FieldSpec
from algebra.polynomial import Polynomial, gcd


class TestPolynomialArithmetic(unittest.TestCase):
    def setUp(self):
        self.Q = FieldSpec('Q')
        self.x = Polynomial.x(self.Q)

    def test_gcd_is_monic(self):
        x = self.x
        self.assertEqual(gcd(x ** 2 - 1, x ** 3 - x), x ** 2 - 1)
        self.assertEqual(gcd(2 * x - 2, x ** 2 - 1), x - 1)

    def test_divmod(self):
        x = self.x
        self.assertEqual(divmod(x ** 3 - x, x), (x ** 2 - 1, Polynomial(self.Q)))
        self.assertEqual((x ** 2 + 1) % (x - 1), 2)

    def test_division_by_zero_fails(self):
        self.assertRaises(ZeroDivisionError, divmod, self.x, Polynomial(self.Q))

    def test_exact_division(self):
        x = self.x
        self.assertEqual((x ** 2 - 1).exact_div(x + 1), x - 1)
        self.assertRaises(ArithmeticError, (x ** 2 + 1).exact_div, x + 1)

    def test_degree_of_zero(self):
        self.assertEqual(Polynomial(self.Q).degree, -1)
        self.assertEqual(Polynomial.constant(self.Q, 3).degree, 0)

    def test_derivative(self):
        x = self.x
        self.assertEqual((x ** 3 - x).derivative(), 3 * x ** 2 - 1)

    def test_homogenize(self):
        x = self.x
        self.assertEqual((x ** 2 + 1).homogenize(x, x + 1), 2 * x ** 2 + 2 * x + 1)

    def test_evaluation_at_extension_point(self):
        Qi = FieldSpec('Q(i)')
        self.assertEqual((self.x ** 2 + 1)(Qi.generator()), 0)

    def test_sqrt(self):
        x = self.x
        self.assertEqual((x ** 2 + 2 * x + 1).sqrt(), x + 1)
        self.assertEqual((4 * x ** 4).sqrt(), 2 * x ** 2)
        self.assertIsNone((x ** 2 + 1).sqrt())
        self.assertIsNone((x ** 3).sqrt())

    def test_multiplicity(self):
        x = self.x
        self.assertEqual(((x - 1) ** 2 * (x + 2)).multiplicity(self.Q(1)), 2)
        self.assertEqual((x + 2).multiplicity(self.Q(1)), 0)


class TestPolynomialRoots(unittest.TestCase):
    def test_rational_roots_are_ordered(self):
        Q = FieldSpec('Q')
        x = Polynomial.x(Q)
        self.assertEqual((x ** 3 - x).roots(), [0, 1, -1])
        self.assertEqual((x ** 2 + 1).roots(), [])

    def test_gaussian_roots(self):
        Qi = FieldSpec('Q(i)')
        x = Polynomial.x(Qi)
        i = Qi.generator()
        self.assertEqual((x ** 2 + 1).roots(), [i, -i])

    def test_prime_field_roots(self):
        x = Polynomial.x(FieldSpec('Fp', 13))
        self.assertEqual((x ** 2 + 1).roots(), [5, 8])

    def test_extension_roots(self):
        spec = FieldSpec('Fp2', 11)
        x = Polynomial.x(spec)
        s = spec.generator()
        self.assertEqual((x ** 2 + 1).roots(), [s, -s])
        self.assertEqual(len((x ** 2 - s).roots()), 2)
        for root in (x ** 2 - s).roots():
            self.assertEqual(root * root, s)


class TestPolynomialPrinting(unittest.TestCase):
    def test_classical_division_polynomial(self):
        Q = FieldSpec('Q')
        self.assertEqual(str(Polynomial.parse(Q, '3x^4 - 6x^2 - 1')), '3*x^4 - 6*x^2 - 1')

    def test_gaussian_coefficients(self):
        Qi = FieldSpec('Q(i)')
        self.assertEqual(str(Polynomial.parse(Qi, '2i*x')), '2i*x')
        self.assertEqual(str(Polynomial.parse(Qi, '(1+2i)*x - 1')), '(1+2i)*x - 1')

    def test_negation_over_prime_fields(self):
        self.assertEqual(str(Polynomial.parse(FieldSpec('Q'), '-x')), '-x')
        self.assertEqual(str(Polynomial.parse(FieldSpec('Fp', 13), '-x')), '12*x')

    def test_parse_matches_arithmetic(self):
        Q = FieldSpec('Q')
        x = Polynomial.x(Q)
        self.assertEqual(Polynomial.parse(Q, '(x-1)^2'), x ** 2 - 2 * x + 1)


if __name__ == '__main__':
    unittest.main()
