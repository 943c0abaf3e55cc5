# Tests for divpoly.scaling
# licensed under the GNU Public License, version 2

import unittest

from algebra.field import FieldSpec
from curves.weierstrass import WeierstrassCurve
from divpoly.kernel import KernelSymbolSum, kernel_function
from divpoly.scaling import (TARGET, DifferentialScaling, convention_constant, convention_solve,
                             default_g_choices)
from helpers.exceptions import *
from isogenies.isogeny import gaussian, identity, multiplication_by, velu2


def uniformizer_after(isogeny):
    """``T′∘φ = −(x′∘φ)/(y′∘φ)`` on the source of φ"""
    return -isogeny.x_map / isogeny.y_map


class TestConvention(unittest.TestCase):
    def setUp(self):
        self.spec = FieldSpec('Q(i)')
        self.curve = WeierstrassCurve(self.spec, 0, -1, 0)
        self.i = self.spec.generator()
        self.g1 = gaussian(self.curve, 1, 1)

    def test_default_choices_are_velu(self):
        choices = default_g_choices(self.curve)
        points, _ = self.curve.two_torsion()
        self.assertEqual(choices, tuple(velu2(self.curve, point) for point in points))
        self.assertEqual(convention_constant(self.curve, choices), 2)

    def test_override(self):
        choices = default_g_choices(self.curve, {1: self.g1})
        self.assertEqual(choices[0], self.g1)
        self.assertEqual(convention_constant(self.curve, choices), 1 - self.i)

    def test_override_with_wrong_kernel(self):
        self.assertRaises(InvalidParameters, default_g_choices, self.curve, {2: self.g1})
        self.assertRaises(InvalidParameters, default_g_choices, self.curve,
                          {1: multiplication_by(self.curve, 2)})

    def test_solved_scales(self):
        scaling = convention_solve(self.curve, default_g_choices(self.curve, {1: self.g1}))
        self.assertEqual(scaling.lam, 1)
        self.assertEqual(scaling.lams, (1, 1, 1 - self.i))

    def test_kappa_from_uniformizers(self):
        choices = default_g_choices(self.curve, {1: self.g1})
        t = uniformizer_after(identity(self.curve))
        h = uniformizer_after(multiplication_by(self.curve, 2)) * t * t
        for g in choices:
            h = h / uniformizer_after(g)
        series = h.expand_at_O(2)
        self.assertEqual(series.valuation, 0)
        self.assertEqual(series.leading, convention_constant(self.curve, choices))

    def test_convention_function_is_one(self):
        scaling = convention_solve(self.curve, default_g_choices(self.curve, {1: self.g1}))
        symbols = KernelSymbolSum.unit(self.curve, -2) - KernelSymbolSum.single(multiplication_by(self.curve, 2))
        for index, g in enumerate(scaling.g_choices, start=1):
            symbols = symbols + KernelSymbolSum.single(g, frame=index)
        self.assertEqual(kernel_function(symbols, scaling), 1)

    def test_needs_split_two_torsion(self):
        curve = WeierstrassCurve(FieldSpec('Q'), 0, 0, 2)
        self.assertRaises(ExtensionRequired, convention_solve, curve)


class TestDifferentialScaling(unittest.TestCase):
    def setUp(self):
        self.curve = WeierstrassCurve(FieldSpec('Q'), 0, -1, 0)
        self.scaling = convention_solve(self.curve)

    def test_frames(self):
        self.assertEqual(self.scaling.g(0).degree, 1)
        self.assertEqual(self.scaling.g(2), self.scaling.g_choices[1])
        self.assertEqual(self.scaling.frame_scale(0, self.curve), 1)
        self.assertEqual(self.scaling.frame_scale(3, self.curve), 2)
        self.assertRaises(InvalidParameters, self.scaling.g, 4)

    def test_target_scales(self):
        other = self.scaling.g(1).target
        rescaled = self.scaling.rescaled(lam=5).with_target_scale(other, 7)
        self.assertEqual(rescaled.frame_scale(TARGET, self.curve), 5)
        self.assertEqual(rescaled.frame_scale(TARGET, other), 7)
        self.assertEqual(self.scaling.frame_scale(TARGET, other), 1)
        self.assertNotEqual(rescaled, self.scaling)
        self.assertEqual(rescaled, self.scaling.rescaled(lam=5).with_target_scale(other, 7))

    def test_scales_must_be_nonzero(self):
        self.assertRaises(InvalidParameters, DifferentialScaling, self.curve, self.scaling.g_choices, 0)
        self.assertRaises(InvalidParameters, DifferentialScaling, self.curve, self.scaling.g_choices[:2])


if __name__ == '__main__':
    unittest.main()
