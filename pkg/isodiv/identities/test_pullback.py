# Tests for identities.pullback
# licensed under the GNU Public License, version 2

import unittest
from fractions import Fraction

from curves.curvefunc import CurveRationalFunction
from curves.weierstrass import WeierstrassCurve
from divpoly.kernel import KernelSymbolSum
from helpers.exceptions import *
from identities.engine import verify_pullback_lemma
from identities.test_chain import gaussian_context
from isogenies.homs import HomElement
from isogenies.isogeny import gaussian, velu2


class TestPullbackLemma(unittest.TestCase):
    def setUp(self):
        self.context = gaussian_context()
        self.curve = self.context.curve

    def test_psi_two(self):
        report = verify_pullback_lemma(self.context, {'2': 1}, '3')
        self.assertTrue(report)
        two = CurveRationalFunction.from_function(self.context.classical_psi(2))
        self.assertEqual(report.rhs, two.pullback(self.context.isogeny('3')))

    def test_biased_products(self):
        self.assertTrue(verify_pullback_lemma(self.context, {'1+i': 2, 'velu2@(1,0)': -1}, '2+i'))
        self.assertTrue(verify_pullback_lemma(self.context, {'1+2i': 1}, '1+i'))

    def test_symbol_sum(self):
        phi = velu2(self.curve, self.curve.point(1, 0))
        symbols = 2 * KernelSymbolSum.single(phi) + KernelSymbolSum.unit(self.curve, -4)
        self.assertTrue(verify_pullback_lemma(self.context, symbols, 'i'))

    def test_zero_sum(self):
        report = verify_pullback_lemma(self.context, KernelSymbolSum(self.curve), '2')
        self.assertTrue(report)
        self.assertEqual(report.lhs, 1)

    def test_not_principal(self):
        symbols = KernelSymbolSum.single(gaussian(self.curve, 1, 1)) + KernelSymbolSum.unit(self.curve, -2)
        self.assertRaises(NonPrincipal, verify_pullback_lemma, self.context, symbols, '2')

    def test_beta_must_end_on_the_curve(self):
        self.assertRaises(DegenerateInput, verify_pullback_lemma, self.context, {'2': 1}, 'velu2@(1,0)')
        other = WeierstrassCurve(self.curve.spec, 0, Fraction(1, 4), 0)
        self.assertRaises(DegenerateInput, verify_pullback_lemma, self.context, {'2': 1}, HomElement(other, 3))

    def test_isogeny_from_another_curve(self):
        other = WeierstrassCurve(self.curve.spec, 0, Fraction(1, 4), 0)
        beta = velu2(other, other.point(0, 0))
        self.assertEqual(beta.target, self.curve)
        for symbols in ({'1+i': 2, 'velu2@(1,0)': -1}, {'2': 1, '1+2i': -1}):
            report = verify_pullback_lemma(self.context, symbols, beta)
            self.assertTrue(report, symbols)
            self.assertEqual(report.lhs.curve, other)
        self.assertTrue(verify_pullback_lemma(self.context, {'1+i': 1, '2': -1}, HomElement(other, 2, 0, beta)))

    def test_psi_factors_are_audited(self):
        context = gaussian_context()
        self.assertTrue(verify_pullback_lemma(context, {'1+i': 2, 'velu2@(1,0)': -1}, '2+i'))
        self.assertEqual(context.audit(), (2, 0))

    def test_rejects_other_values(self):
        self.assertRaises(InvalidParameters, verify_pullback_lemma, self.context, ['2'], '3')


if __name__ == '__main__':
    unittest.main()
