# isodiv - Classical Division Polynomials
# licensed under the GNU Public License, version 2

"""\
Classical division polynomials Ψₙ with divisor ``[n]*(𝒪) − n²(𝒪)``,
normalized so that ``Ψₙ = n·T^(1−n²) + ...`` at 𝒪. With ``T = −x/y`` this
puts the sign on the even terms: ``Ψ₂ = −2y``.
"""

import logging
from threading import RLock

from algebra.polynomial import Polynomial
from curves.curvefunc import CurveFunction
from curves.weierstrass import WeierstrassCurve
from helpers import verify

logger = logging.getLogger('isodiv.divpoly.classical')


class DivisionPolynomials:
    """\
    Memoized Ψₙ on one curve, computed with

        Ψ_{2m+1} = Ψ_{m+2}Ψ_m³ − Ψ_{m−1}Ψ_{m+1}³
        Ψ_{2m}   = (Ψ_{m+2}Ψ_{m−1}² − Ψ_{m−2}Ψ_{m+1}²)·Ψ_m / Ψ₂

    so each index costs a logarithmic number of table entries.
    """

    def __init__(self, curve: WeierstrassCurve):
        self.curve = curve
        self._table = {}
        self._lock = RLock()
        spec = curve.spec
        x = Polynomial.x(spec)
        b2, b4, b6, b8 = curve.b_invariants
        y = CurveFunction.y(curve)
        quartic = 3 * x ** 4 + b2 * x ** 3 + 3 * b4 * x ** 2 + 3 * b6 * x + b8
        sextic = (2 * x ** 6 + b2 * x ** 5 + 5 * b4 * x ** 4 + 10 * b6 * x ** 3 + 10 * b8 * x ** 2
                  + (b2 * b8 - b4 * b6) * x + (b4 * b8 - b6 * b6))
        self._table.update({
            0: CurveFunction.constant(curve, 0),
            1: CurveFunction.constant(curve, 1),
            2: -2 * y,
            3: CurveFunction(curve, quartic),
            4: -2 * y * sextic,
        })

    def __getitem__(self, n: int) -> CurveFunction:
        verify.integer(n, 'n')
        if n < 0:
            return -self[-n]
        with self._lock:
            if n not in self._table:
                self._table[n] = self._compute(n)
            return self._table[n]

    def _compute(self, n: int) -> CurveFunction:
        m = n // 2
        if n % 2:
            value = self[m + 2] * self[m] ** 3 - self[m - 1] * self[m + 1] ** 3
        else:
            value = (self[m + 2] * self[m - 1] ** 2 - self[m - 2] * self[m + 1] ** 2) * self[m]
            value = value.exact_div(self[2])
        logger.debug("Computed Ψ_{} on {}".format(n, self.curve))
        return value

    def __len__(self):
        return len(self._table)


def classical_psi(curve: WeierstrassCurve, n: int) -> CurveFunction:
    """Ψₙ on ``curve`` (with a fresh table; :py:class:`divpoly.context.DivisionContext` keeps one per session)"""
    return DivisionPolynomials(curve)[n]
