# isodiv - Division Context
# licensed under the GNU Public License, version 2

"""\
A :py:class:`DivisionContext` bundles a curve with its differential scaling and
memoizes isogenies, Ψₙ, Ψ_φ, Ψ̂ and Ψ̃ for one session.
"""

import logging
from threading import RLock

from curves.weierstrass import WeierstrassCurve
from divpoly.classical import DivisionPolynomials
from divpoly.kernel import KernelSymbolSum, NormalizedFunction, kernel_function
from divpoly.psi import audit_psi, psi_hat, psi_isogeny, psi_tilde
from divpoly.quadratic import sqrt_hat_product
from divpoly.scaling import DifferentialScaling, convention_solve, default_g_choices
from helpers.exceptions import InvalidCurve
from isogenies.homs import HomElement
from isogenies.isogeny import Isogeny, kernel_sum

logger = logging.getLogger('isodiv.divpoly.context')


class DivisionContext:
    """\
    :param curve: the base curve
    :param scaling: the differential scaling; solved from the convention if omitted
    :param g_overrides: map from index 1..3 to a replacement for the Vélu isogeny gᵢ
    """

    def __init__(self, curve: WeierstrassCurve, scaling: DifferentialScaling = None, g_overrides: dict = None):
        if scaling is None:
            scaling = convention_solve(curve, default_g_choices(curve, g_overrides))
        elif scaling.curve != curve:
            raise InvalidCurve.mismatch(curve, scaling.curve)
        self.curve = curve
        self.scaling = scaling
        self._lock = RLock()
        self._classical = DivisionPolynomials(curve)
        self._isogenies = {}
        self._psi = {}
        self._hat = {}
        self._tilde = {}
        self._extensions = {}
        self._audited = set()

    def rescaled(self, scaling: DifferentialScaling) -> 'DivisionContext':
        """a fresh context with another scaling (the Ψₙ table is shared)"""
        context = DivisionContext(self.curve, scaling)
        context._classical = self._classical
        return context

    def base_change(self, spec) -> 'DivisionContext':
        """\
        the same session over an extension field, with the same gᵢ (re-read from their labels)
        and the convention solved again
        """
        with self._lock:
            if spec not in self._extensions:
                curve = self.curve.base_change(spec)
                g_choices = tuple(HomElement.parse(str(g), curve).to_isogeny() for g in self.scaling.g_choices)
                logger.info("Moving {} to {}".format(self.curve, spec))
                self._extensions[spec] = DivisionContext(curve, convention_solve(curve, g_choices))
            return self._extensions[spec]

    # isogenies

    def isogeny(self, label) -> Isogeny:
        """the isogeny of a :py:class:`isogenies.homs.HomElement`, a literal, or an isogeny"""
        if isinstance(label, Isogeny):
            return label
        if isinstance(label, str):
            label = HomElement.parse(label, self.curve)
        with self._lock:
            if label not in self._isogenies:
                self._isogenies[label] = label.to_isogeny()
            return self._isogenies[label]

    def label(self, text: str) -> HomElement:
        return HomElement.parse(text, self.curve)

    def index(self, label) -> int:
        """ι of a label"""
        return kernel_sum(self.isogeny(label))[1]

    # division polynomials

    def classical_psi(self, n: int):
        return self._classical[n]

    def psi(self, label) -> NormalizedFunction:
        phi = self.isogeny(label)
        with self._lock:
            if phi not in self._psi:
                self._psi[phi] = psi_isogeny(phi, self.scaling)
                logger.debug("Ψ_{} = {}".format(phi, self._psi[phi]))
            return self._psi[phi]

    def psi_hat(self, index: int) -> NormalizedFunction:
        with self._lock:
            if index not in self._hat:
                self._hat[index] = psi_hat(self.curve, index, self.scaling)
            return self._hat[index]

    def psi_hat_of(self, label) -> NormalizedFunction:
        return self.psi_hat(self.index(label))

    def psi_tilde(self, label) -> NormalizedFunction:
        phi = self.isogeny(label)
        with self._lock:
            if phi not in self._tilde:
                self._tilde[phi] = psi_tilde(phi, self.scaling)
            return self._tilde[phi]

    def kernel_function(self, symbols: KernelSymbolSum) -> NormalizedFunction:
        return kernel_function(symbols, self.scaling)

    def sqrt_hat_product(self, exponents: dict) -> NormalizedFunction:
        return sqrt_hat_product(exponents, self.scaling)

    def audit(self, precision: int = 4) -> tuple:
        """\
        re-checks every cached Ψ_φ (and those of the extension sessions) with
        :py:func:`divpoly.psi.audit_psi`; a Ψ_φ already audited by an earlier call
        is not counted again

        :return: ``(audited, failed)``
        """
        with self._lock:
            cached = [(phi, psi) for phi, psi in self._psi.items() if phi not in self._audited]
            self._audited.update(phi for phi, _ in cached)
            extensions = list(self._extensions.values())
        failed = 0
        for phi, psi in cached:
            if not audit_psi(phi, self.scaling, psi, precision):
                failed += 1
        audited = len(cached)
        for extension in extensions:
            more, more_failed = extension.audit(precision)
            audited += more
            failed += more_failed
        return audited, failed

    def __repr__(self):
        return "<DivisionContext {} with {}>".format(self.curve, self.scaling)
