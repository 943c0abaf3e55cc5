# Tests for curves.curvefunc
# licensed under the GNU Public License, version 2

import unittest

from algebra.field import FieldSpec
from algebra.polynomial import Polynomial
from curves.curvefunc import (POLE, CurveFunction, CurveRationalFunction, Divisor, divisor_of,
                              sqrt_two_torsion_supported)
from curves.weierstrass import WeierstrassCurve
from helpers.exceptions import *


class TestCurveFunctionArithmetic(unittest.TestCase):
    def setUp(self):
        self.curve = WeierstrassCurve(FieldSpec('Q'), 0, -1, 0)
        self.x = CurveFunction.x(self.curve)
        self.y = CurveFunction.y(self.curve)

    def test_curve_relation(self):
        x, y = self.x, self.y
        self.assertEqual(y * y, x ** 3 - x)

    def test_difference_of_squares(self):
        x, y = self.x, self.y
        self.assertEqual((x + y) * (x - y), x ** 2 - x ** 3 + x)

    def test_exact_division(self):
        x, y = self.x, self.y
        self.assertEqual((x ** 3 - x).exact_div(y), y)
        self.assertRaises(ArithmeticError, (x + 1).exact_div, y)

    def test_quotient_is_canonical(self):
        quotient = self.y / self.x
        self.assertEqual(quotient.denominator, Polynomial.x(self.curve.spec))
        self.assertEqual(str(quotient), 'y / x')

    def test_division_by_zero_fails(self):
        self.assertRaises(ZeroDivisionError, lambda: self.y / (self.x - self.x))


class TestCurveRationalFunction(unittest.TestCase):
    def setUp(self):
        self.curve = WeierstrassCurve(FieldSpec('Q(i)'), 0, -1, 0)
        self.x = CurveRationalFunction.x(self.curve)
        self.y = CurveRationalFunction.y(self.curve)
        self.i = self.curve.spec.generator()

    def test_field_operations(self):
        h = (self.x - 1) / (self.y + self.x)
        self.assertEqual(h * h.inverse(), 1)
        self.assertEqual(h ** -2 * h ** 2, 1)
        self.assertEqual((h + self.x) - self.x, h)

    def test_denominators_cancel(self):
        self.assertEqual(self.y * self.y / (self.x ** 2 - 1), self.x)

    def test_round_trip(self):
        h = CurveRationalFunction.parse(self.curve, '(x-i)^2/(2i*x)')
        self.assertEqual(str(h), '(-i/2*x^2 - x + i/2) / x')
        self.assertEqual(CurveRationalFunction.parse(self.curve, str(h)), h)

    def test_y_parts_print(self):
        h = CurveRationalFunction.parse(self.curve, '-2*y*(x^2+1)')
        self.assertEqual(str(h), 'y*(-2*x^2 - 2)')
        self.assertEqual(str(-2 * self.y), '-2*y')

    def test_evaluation(self):
        P = self.curve.point(self.i, self.i - 1)
        self.assertEqual((self.x - 1)(self.curve.point(0, 0)), -1)
        self.assertEqual((2 * self.i * self.x)(P), -2)
        self.assertIs((1 / self.x)(self.curve.point(0, 0)), POLE)
        self.assertIs(self.x(self.curve.infinity), POLE)
        self.assertEqual((1 / self.x)(self.curve.infinity), 0)

    def test_zero_over_zero_fails(self):
        self.assertRaises(Indeterminate, (self.y / self.x).evaluate, self.curve.point(0, 0))

    def test_orders(self):
        origin = self.curve.point(0, 0)
        self.assertEqual(self.y.ord_at(origin), 1)
        self.assertEqual(self.x.ord_at(self.curve.infinity), -2)
        self.assertEqual((self.x - 1).ord_at(self.curve.point(1, 0)), 2)
        self.assertEqual((self.y / self.x).ord_at(origin), -1)

    def test_zero_has_no_order(self):
        self.assertRaises(DegenerateInput, (self.x - self.x).ord_at, self.curve.infinity)

    def test_expansions(self):
        self.assertEqual(self.y.expand_at_O(4).leading_term(), (-3, -1))
        self.assertEqual((2 * self.i * self.x).expand_at_O(4).leading_term(), (-2, 2 * self.i))
        self.assertEqual((-self.x / self.y).expand_at_O(4).leading_term(), (1, 1))

    def test_exact_leading_term_matches_expansion(self):
        for h in (self.x - 1, self.y / (self.x ** 2 + 3), (self.x - self.i) ** 2 / (2 * self.i * self.x)):
            self.assertEqual(h.leading_term(), h.expand_at_O(3).leading_term())

    def test_norm(self):
        self.assertEqual(self.y.norm(), -(self.x ** 3 - self.x))


class TestSubstitution(unittest.TestCase):
    def setUp(self):
        self.curve = WeierstrassCurve(FieldSpec('Q(i)'), 0, -1, 0)
        self.spec = self.curve.spec
        self.one = Polynomial.constant(self.spec, 1)
        self.X = Polynomial.x(self.spec)

    def test_gaussian_unit(self):
        x = CurveRationalFunction.x(self.curve)
        y = CurveRationalFunction.y(self.curve)
        i = self.spec.generator()
        self.assertEqual(x.substitute(self.curve, -self.X, self.one, self.one * i, self.one), -x)
        self.assertEqual(y.substitute(self.curve, -self.X, self.one, self.one * i, self.one), i * y)

    def test_two_isogeny_map(self):
        target = WeierstrassCurve(self.spec, 0, -11, -14)
        X = self.X
        h = CurveRationalFunction.x(target) - 1
        pulled = h.substitute(self.curve, X ** 2 - X + 2, X - 1, X ** 2 - 2 * X - 1, (X - 1) ** 2)
        expected = CurveRationalFunction(self.curve, X ** 2 - 2 * X + 3, None, X - 1)
        self.assertEqual(pulled, expected)

    def test_substitution_is_multiplicative(self):
        target = WeierstrassCurve(self.spec, 0, -11, -14)
        X = self.X
        maps = (X ** 2 - X + 2, X - 1, X ** 2 - 2 * X - 1, (X - 1) ** 2)
        a = CurveRationalFunction.parse(target, '(x + 2y) / (x^2 - 3)')
        b = CurveRationalFunction.parse(target, 'y - x + i')
        self.assertEqual((a * b).substitute(self.curve, *maps),
                         a.substitute(self.curve, *maps) * b.substitute(self.curve, *maps))


class TestDivisors(unittest.TestCase):
    def test_tangent_line(self):
        curve = WeierstrassCurve(FieldSpec('Q'), 0, 0, 1)
        h = CurveRationalFunction.parse(curve, 'y - 2x + 1')
        expected = Divisor({curve.infinity: -3, curve.point(2, 3): 2, curve.point(0, -1): 1})
        self.assertEqual(divisor_of(h), expected)
        self.assertEqual(h.ord_at(curve.point(2, 3)), 2)
        self.assertEqual(divisor_of(h).degree, 0)

    def test_x_coordinate(self):
        curve = WeierstrassCurve(FieldSpec('Q'), 0, -1, 0)
        divisor = divisor_of(CurveRationalFunction.x(curve))
        self.assertEqual(divisor, Divisor({curve.point(0, 0): 2, curve.infinity: -2}))
        self.assertTrue(divisor.point_sum(curve).is_infinity)

    def test_irrational_zeros_fail(self):
        curve = WeierstrassCurve(FieldSpec('Q'), 0, -1, 0)
        self.assertRaises(ExtensionRequired, divisor_of, CurveRationalFunction.parse(curve, 'x^2 - 2'))
        self.assertRaises(ExtensionRequired, divisor_of, CurveRationalFunction.parse(curve, 'x - 2'))


class TestTwoTorsionSquareRoots(unittest.TestCase):
    def setUp(self):
        self.curve = WeierstrassCurve(FieldSpec('Q(i)'), 0, -1, 0)

    def parse(self, text):
        return CurveRationalFunction.parse(self.curve, text)

    def test_even_exponents(self):
        self.assertEqual(sqrt_two_torsion_supported(self.parse('x^2')), self.parse('x'))
        self.assertEqual(sqrt_two_torsion_supported(self.parse('4/(x-1)^2')), self.parse('2/(x-1)'))
        self.assertEqual(sqrt_two_torsion_supported(self.parse('-x^2')), self.parse('i*x'))

    def test_odd_exponents(self):
        self.assertEqual(sqrt_two_torsion_supported(self.parse('x^3 - x')), self.parse('y'))

    def test_mixed_parities(self):
        self.assertIsNone(sqrt_two_torsion_supported(self.parse('x*(x-1)')))
        self.assertIsNone(sqrt_two_torsion_supported(self.parse('y')))

    def test_squares_back(self):
        for text in ('x^2*(x+1)^4', 'x*(x^2-1)^3 / 9', '(x-1)^-2*(x+1)^2*x^4'):
            h = self.parse(text)
            root = sqrt_two_torsion_supported(h)
            self.assertEqual(root * root, h)

    def test_other_support_fails(self):
        self.assertRaises(DegenerateInput, sqrt_two_torsion_supported, self.parse('x - 2'))
        self.assertRaises(DegenerateInput, sqrt_two_torsion_supported, self.parse('x + y'))

    def test_missing_scalar_root(self):
        curve = WeierstrassCurve(FieldSpec('Q'), 0, -1, 0)
        self.assertIsNone(sqrt_two_torsion_supported(CurveRationalFunction.parse(curve, '2x^2')))


if __name__ == '__main__':
    unittest.main()
