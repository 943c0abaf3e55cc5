# isodiv - Generalized Division Polynomials
# licensed under the GNU Public License, version 2

"""\
Division polynomials attached to isogenies φ: E → E′, as kernel functions:

    Ψ_φ = kernel function of (K_φ) + (K_{g_ι}) − (deg φ + deg g_ι)(K₁)
    Ψ̂ᵢ  = kernel function of 2(K_{gᵢ}) − 4(K₁),   Ψ̂₀ = 1
    Ψ̃_φ = kernel function of 2(K_φ) − 2·deg φ·(K₁)

with ι = ι(φ) the index of the kernel sum P_φ and g₀ the identity, so that
``div Ψ_φ = φ*(𝒪′) − deg φ·(𝒪) + (P_φ) − (𝒪)``.
"""

import logging

from algebra.polynomial import Polynomial
from curves.weierstrass import WeierstrassCurve
from divpoly.kernel import KernelSymbolSum, NormalizedFunction, kernel_function
from divpoly.scaling import TARGET, DifferentialScaling
from helpers import verify
from helpers.exceptions import InvalidCurve
from isogenies.isogeny import Isogeny, kernel_sum

logger = logging.getLogger('isodiv.divpoly.psi')


def _check_source(isogeny: Isogeny, scaling: DifferentialScaling):
    if isogeny.source != scaling.curve:
        raise InvalidCurve.mismatch(scaling.curve, isogeny.source)


def psi_symbols(phi: Isogeny, scaling: DifferentialScaling) -> KernelSymbolSum:
    """the symbol sum of Ψ_φ"""
    _check_source(phi, scaling)
    _, index = kernel_sum(phi)
    g = scaling.g(index)
    return (KernelSymbolSum.single(phi)
            + KernelSymbolSum.single(g, frame=index)
            + KernelSymbolSum.unit(phi.source, -(phi.degree + g.degree)))


def psi_isogeny(phi: Isogeny, scaling: DifferentialScaling) -> NormalizedFunction:
    """\
    Ψ_φ

    :raises ExtensionRequired: if φ is biased and E[2] is not split
    """
    return kernel_function(psi_symbols(phi, scaling), scaling)


def hat_symbols(curve: WeierstrassCurve, index: int, scaling: DifferentialScaling) -> KernelSymbolSum:
    verify.two_torsion_index(index)
    if index == 0:
        return KernelSymbolSum(curve)
    return KernelSymbolSum.single(scaling.g(index), 2, frame=index) + KernelSymbolSum.unit(curve, -4)


def psi_hat(curve: WeierstrassCurve, index: int, scaling: DifferentialScaling) -> NormalizedFunction:
    """\
    Ψ̂ᵢ, a constant multiple of ``x − eᵢ``

    :param index: 0..3; 0 gives the constant 1
    """
    return kernel_function(hat_symbols(curve, index, scaling), scaling)


def psi_hat_of(phi: Isogeny, scaling: DifferentialScaling) -> NormalizedFunction:
    """Ψ̂_φ = Ψ̂_{ι(φ)}"""
    _check_source(phi, scaling)
    return psi_hat(phi.source, kernel_sum(phi)[1], scaling)


def psi_tilde(phi: Isogeny, scaling: DifferentialScaling) -> NormalizedFunction:
    """Ψ̃_φ, with ``Ψ̃_φ·Ψ̂_φ = Ψ_φ²``"""
    _check_source(phi, scaling)
    symbols = KernelSymbolSum.single(phi, 2) + KernelSymbolSum.unit(phi.source, -2 * phi.degree)
    return kernel_function(symbols, scaling)


def audit_psi(phi: Isogeny, scaling: DifferentialScaling, psi: NormalizedFunction, precision: int = 4) -> bool:
    """\
    checks a computed Ψ_φ independently of its construction:

        - its norm ``Ψ_φ·(Ψ_φ∘[−1])`` is a constant multiple of ``D(x)·(x − x(P_φ))``,
          so the finite part of the divisor is ``φ*(𝒪′) + (P_φ) − 2(𝒪)``
        - its order at 𝒪 and at every rational two-torsion point is as the divisor dictates
        - its series expansion at 𝒪 starts with ``a_{g_ι}·a_φ`` times the differential scales
    """
    value = psi.value
    point, index = kernel_sum(phi)
    curve = phi.source
    expected_norm = phi.D
    if index:
        expected_norm = expected_norm * (Polynomial.x(curve.spec) - point.x)
    norm = value.norm()
    if norm.v or not (norm.u.degree == expected_norm.degree and norm.d.degree == 0):
        logger.warning("Norm of Ψ for {} is {}, expected a multiple of {}".format(phi, norm, expected_norm))
        return False
    if norm.u * expected_norm.leading != expected_norm * norm.u.leading:
        logger.warning("Norm of Ψ for {} is {}, expected a multiple of {}".format(phi, norm, expected_norm))
        return False
    g = scaling.g(index)
    expected_order = (1 if index == 0 else 0) - phi.degree
    if value.ord_at(curve.infinity) != expected_order:
        logger.warning("Ψ for {} has order {} at O, expected {}"
                       .format(phi, value.ord_at(curve.infinity), expected_order))
        return False
    two_torsion, _ = curve.two_torsion()
    for torsion in two_torsion:
        expected = phi.D.multiplicity(torsion.x) + (1 if torsion == point else 0)
        if value.ord_at(torsion) != expected:
            logger.warning("Ψ for {} has order {} at {}, expected {}"
                           .format(phi, value.ord_at(torsion), torsion, expected))
            return False
    lead = (g.lead * scaling.frame_scale(index, g.target)
            * phi.lead * scaling.frame_scale(TARGET, phi.target)
            / scaling.lam ** (phi.degree + g.degree))
    series = value.expand_at_O(precision)
    if series.valuation != expected_order or series.leading != lead:
        logger.warning("Ψ for {} expands as {}, expected lead {}".format(phi, series, lead))
        return False
    return True
