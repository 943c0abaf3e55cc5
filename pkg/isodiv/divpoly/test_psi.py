# Tests for divpoly.psi
# licensed under the GNU Public License, version 2

import os
import unittest
from fractions import Fraction

from algebra.field import FieldSpec
from curves.curvefunc import CurveRationalFunction
from curves.weierstrass import WeierstrassCurve
from divpoly.classical import DivisionPolynomials
from divpoly.context import DivisionContext
from divpoly.psi import audit_psi, psi_hat, psi_hat_of, psi_isogeny, psi_tilde
from divpoly.scaling import convention_solve, default_g_choices
from helpers.exceptions import *
from isogenies.homs import HomElement
from isogenies.isogeny import compose, gaussian, multiplication_by, velu2

GOLDENS = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'testdata', 'gaussian.golden')


def load_goldens(path: str = GOLDENS) -> tuple:
    """\
    reads a golden file: ``# key: value`` header lines naming the field, the curve
    coefficients A2, A4, A6 and g₁, then lines ``kind label [after label] = expression``

    :return: ``(context, entries)``, entries being ``(kind, labels, expression)``
    """
    header, entries = {}, []
    with open(path, encoding='utf-8') as golden:
        for line in golden:
            line = line.strip()
            if line.startswith('#'):
                key, colon, value = line[1:].partition(':')
                if colon:
                    header[key.strip()] = value.strip()
            elif line:
                left, _, expression = line.partition(' = ')
                kind, *labels = left.split()
                entries.append((kind, [label for label in labels if label != 'after'], expression))
    assert header['scaling'] == 'convention'
    spec = FieldSpec.parse(header['field'])
    curve = WeierstrassCurve(spec, *(Fraction(value) for value in header['curve'].split(',')))
    g1 = HomElement.parse(header['g1'], curve).to_isogeny()
    return DivisionContext(curve, g_overrides={1: g1}), entries


def golden(entries: list, kind: str, *labels) -> str:
    """the expression of one entry"""
    for entry_kind, entry_labels, expression in entries:
        if entry_kind == kind and entry_labels == list(labels):
            return expression
    raise KeyError((kind, labels))


class TestPsiGaussian(unittest.TestCase):
    """Ψ on y² = x³ − x over Q(i) with g₁ = [1+i]"""

    def setUp(self):
        self.spec = FieldSpec('Q(i)')
        self.curve = WeierstrassCurve(self.spec, 0, -1, 0)
        self.scaling = convention_solve(self.curve, default_g_choices(self.curve, {1: gaussian(self.curve, 1, 1)}))
        self.phi = velu2(self.curve, self.curve.point(1, 0))

    def psi(self, a, b):
        return psi_isogeny(gaussian(self.curve, a, b), self.scaling)

    def test_integers_are_classical(self):
        table = DivisionPolynomials(self.curve)
        for n in range(1, 6):
            self.assertEqual(self.psi(n, 0), CurveRationalFunction.from_function(table[n]))

    def test_hats(self):
        for index in range(4):
            self.assertEqual(psi_hat(self.curve, index, self.scaling).symbols.curve, self.curve)
        self.assertEqual(psi_hat_of(self.phi, self.scaling), psi_hat(self.curve, 2, self.scaling))
        self.assertRaises(InvalidParameters, psi_hat, self.curve, 4, self.scaling)

    def test_tilde(self):
        for isogeny in (self.phi, gaussian(self.curve, 1, 1), gaussian(self.curve, 2, 1),
                        compose(self.phi, gaussian(self.curve, 1, 1))):
            psi = psi_isogeny(isogeny, self.scaling)
            self.assertEqual(psi_tilde(isogeny, self.scaling) * psi_hat_of(isogeny, self.scaling), psi ** 2)
        three = multiplication_by(self.curve, 3)
        self.assertEqual(psi_tilde(three, self.scaling), psi_isogeny(three, self.scaling) ** 2)

    def test_audits(self):
        for isogeny in (self.phi, gaussian(self.curve, 1, 1), gaussian(self.curve, 1, 2),
                        gaussian(self.curve, 2, 2), multiplication_by(self.curve, 3),
                        compose(self.phi, gaussian(self.curve, 1, 1))):
            self.assertTrue(audit_psi(isogeny, self.scaling, psi_isogeny(isogeny, self.scaling)))

    def test_audit_rejects(self):
        psi = psi_isogeny(self.phi, self.scaling)
        self.assertFalse(audit_psi(self.phi, self.scaling, psi * psi))
        with self.assertLogs('isodiv.divpoly.psi', level='WARNING'):
            audit_psi(self.phi, self.scaling, psi_isogeny(gaussian(self.curve, 1, 1), self.scaling))

    def test_source_must_be_base(self):
        self.assertRaises(InvalidCurve, psi_isogeny, velu2(self.phi.target, self.phi.target.point(-2, 0)),
                          self.scaling)


class TestGoldenCatalog(unittest.TestCase):
    def setUp(self):
        self.context, self.entries = load_goldens()

    def expected(self, text):
        return CurveRationalFunction.parse(self.context.curve, text)

    def entries_of(self, kind):
        return [(labels, expression) for entry_kind, labels, expression in self.entries if entry_kind == kind]

    def test_psi(self):
        self.assertEqual(len(self.entries_of('psi')), 12)
        for labels, expression in self.entries_of('psi'):
            self.assertEqual(self.context.psi(labels[0]), self.expected(expression), labels[0])

    def test_hat_indices(self):
        for labels, expression in self.entries_of('hat-index'):
            self.assertEqual(self.context.psi_hat(int(labels[0])), self.expected(expression), labels[0])

    def test_hats(self):
        for labels, expression in self.entries_of('hat'):
            value = self.context.psi_hat_of(labels[0]).value
            if len(labels) == 2:
                value = value.pullback(self.context.isogeny(labels[1]))
            self.assertEqual(value, self.expected(expression), labels)

    def test_audited(self):
        for labels, _ in self.entries_of('psi'):
            self.context.psi(labels[0])
        self.assertEqual(self.context.audit(), (12, 0))


class TestPsiFinite(unittest.TestCase):
    def setUp(self):
        self.curve = WeierstrassCurve(FieldSpec('Fp', 13), 0, -1, 0)
        self.scaling = convention_solve(self.curve)

    def test_audits(self):
        for a, b in ((1, 1), (2, 1), (2, 2)):
            isogeny = gaussian(self.curve, a, b)
            self.assertTrue(audit_psi(isogeny, self.scaling, psi_isogeny(isogeny, self.scaling)))

    def test_zeros_are_the_kernel(self):
        isogeny = gaussian(self.curve, 2, 1)
        psi = psi_isogeny(isogeny, self.scaling).value
        for point in self.curve.points():
            if not point.is_infinity and point.y and isogeny(point).is_infinity:
                self.assertEqual(psi(point), 0)


if __name__ == '__main__':
    unittest.main()
