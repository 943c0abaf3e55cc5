# Tests for divpoly.kernel
# licensed under the GNU Public License, version 2

import unittest

from algebra.field import FieldSpec
from curves.curvefunc import CurveRationalFunction
from curves.weierstrass import WeierstrassCurve
from divpoly.kernel import KernelSymbol, KernelSymbolSum, NormalizedFunction, expected_lead, kernel_function
from divpoly.psi import psi_symbols
from divpoly.scaling import TARGET, convention_solve, default_g_choices
from helpers.exceptions import *
from isogenies.isogeny import compose, gaussian, identity, multiplication_by, velu2


class TestKernelSymbolSum(unittest.TestCase):
    def setUp(self):
        self.curve = WeierstrassCurve(FieldSpec('Q(i)'), 0, -1, 0)
        self.phi = velu2(self.curve, self.curve.point(1, 0))
        self.beta = gaussian(self.curve, 1, 1)

    def test_arithmetic(self):
        s = KernelSymbolSum.single(self.phi) + KernelSymbolSum.unit(self.curve, -2)
        self.assertEqual(s.degree, 0)
        self.assertEqual((s - s), KernelSymbolSum(self.curve))
        self.assertFalse(s - s)
        self.assertEqual((3 * s).degree, 0)
        self.assertEqual(len((2 * s).terms), 2)
        self.assertEqual(-s + s, KernelSymbolSum(self.curve))

    def test_terms_merge(self):
        s = KernelSymbolSum.single(self.phi) + KernelSymbolSum.single(self.phi)
        self.assertEqual(s.terms, {KernelSymbol(self.phi): 2})
        self.assertNotEqual(KernelSymbol(self.phi), KernelSymbol(self.phi, frame=2))

    def test_kernel_sum_and_principality(self):
        s = KernelSymbolSum.single(self.beta) + KernelSymbolSum.unit(self.curve, -2)
        self.assertEqual(s.kernel_sum(), self.curve.point(0, 0))
        self.assertFalse(s.is_principal())
        self.assertTrue((2 * s).is_principal())

    def test_pullback(self):
        s = KernelSymbolSum.single(self.phi) + KernelSymbolSum.unit(self.curve, -2)
        pulled = s.pullback(self.beta)
        self.assertEqual(pulled.terms, {KernelSymbol(compose(self.phi, self.beta)): 1,
                                        KernelSymbol(self.beta, 0): -2})
        self.assertEqual(pulled.degree, 0)

    def test_sources_must_agree(self):
        other = WeierstrassCurve(FieldSpec('Q(i)'), 0, 1, 0)
        self.assertRaises(InvalidCurve, lambda: KernelSymbolSum.single(self.phi) + KernelSymbolSum.unit(other))
        self.assertRaises(InvalidCurve, KernelSymbolSum.single(self.phi).pullback, identity(other))

    def test_printing(self):
        s = KernelSymbolSum.single(self.phi) - KernelSymbolSum.unit(self.curve, 2)
        self.assertEqual(str(s), '-2*K[1|ω] + K[velu2@(1,0)]')
        self.assertEqual(str(KernelSymbolSum(self.curve)), '0')


class TestKernelFunction(unittest.TestCase):
    def setUp(self):
        self.spec = FieldSpec('Q(i)')
        self.curve = WeierstrassCurve(self.spec, 0, -1, 0)
        self.scaling = convention_solve(self.curve, default_g_choices(self.curve, {1: gaussian(self.curve, 1, 1)}))
        self.phi = velu2(self.curve, self.curve.point(1, 0))
        self.beta = gaussian(self.curve, 1, 1)

    def parse(self, text):
        return CurveRationalFunction.parse(self.curve, text)

    def test_trivial_sum(self):
        self.assertEqual(kernel_function(KernelSymbolSum(self.curve), self.scaling), 1)

    def test_y_from_doubling(self):
        s = KernelSymbolSum.single(multiplication_by(self.curve, 2), frame=0) + KernelSymbolSum.unit(self.curve, -4)
        self.assertEqual(kernel_function(s, self.scaling), self.parse('-2*y'))

    def test_lead_matches(self):
        s = psi_symbols(compose(self.phi, self.beta), self.scaling)
        function = kernel_function(s, self.scaling)
        self.assertEqual(function.lead[1], expected_lead(s, self.scaling))
        self.assertEqual(function.lead[0], -4)

    def test_multiplicative(self):
        s = psi_symbols(self.phi, self.scaling)
        t = psi_symbols(self.beta, self.scaling)
        product = kernel_function(s, self.scaling) * kernel_function(t, self.scaling)
        self.assertEqual(kernel_function(s + t, self.scaling), product)
        self.assertEqual(product.symbols, s + t)
        quotient = kernel_function(s, self.scaling) / kernel_function(t, self.scaling)
        self.assertEqual(kernel_function(s - t, self.scaling), quotient)
        self.assertEqual(kernel_function(3 * s, self.scaling), kernel_function(s, self.scaling) ** 3)

    def test_target_scale(self):
        s = psi_symbols(self.phi, self.scaling)
        rescaled = self.scaling.with_target_scale(self.phi.target, 3)
        self.assertEqual(kernel_function(s, rescaled).value, 3 * kernel_function(s, self.scaling).value)

    def test_not_principal(self):
        s = KernelSymbolSum.single(self.beta) + KernelSymbolSum.unit(self.curve, -2)
        self.assertRaises(NonPrincipal, kernel_function, s, self.scaling)
        self.assertRaises(NonPrincipal, kernel_function, KernelSymbolSum.single(self.beta), self.scaling)

    def test_normalized_function_equality(self):
        function = kernel_function(KernelSymbolSum(self.curve), self.scaling)
        self.assertIsInstance(function, NormalizedFunction)
        self.assertEqual(function, CurveRationalFunction.constant(self.curve, 1))
        self.assertEqual(str(function), '1')


if __name__ == '__main__':
    unittest.main()
