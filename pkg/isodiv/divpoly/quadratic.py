# isodiv - Quadratic Identities and Square Roots of Ψ̂ Products
# licensed under the GNU Public License, version 2

"""\
An exponent map ``e: label ↦ integer`` is a *quadratic identity* if
``Σ e_φ·q(φ) = 0`` for every quadratic form q. For labels ``prefix∘[a+bi]`` with a
common prefix this means ``Σ e_φ·v_φ·v_φᵀ = 0`` for the coordinate vectors
``v_φ = (a, b)``. For such maps the product ``∏ Ψ̂_φ^(e_φ)`` has a kernel function
as its square root.
"""

import logging

from curves.curvefunc import CurveRationalFunction, sqrt_two_torsion_supported
from divpoly.kernel import KernelSymbolSum, NormalizedFunction, kernel_function
from divpoly.scaling import DifferentialScaling
from helpers.exceptions import DegenerateInput, ExtensionRequired, InvalidCurve
from isogenies.isogeny import kernel_sum

logger = logging.getLogger('isodiv.divpoly.quadratic')


def _common_basis(exponents: dict):
    labels = [label for label, n in exponents.items() if n]
    if not labels:
        return None, None
    first = labels[0]
    for label in labels[1:]:
        if label.curve != first.curve or label.basis != first.basis:
            raise DegenerateInput("Labels {} and {} are not in a common basis".format(first, label))
    return first.curve, first.basis


def quadratic_matrix(exponents: dict) -> tuple:
    """``Σ e_φ·v_φ·v_φᵀ`` as ``(aa, ab, bb)``"""
    _common_basis(exponents)
    aa = sum(n * label.a * label.a for label, n in exponents.items())
    ab = sum(n * label.a * label.b for label, n in exponents.items())
    bb = sum(n * label.b * label.b for label, n in exponents.items())
    return aa, ab, bb


def quadratic_identity_check(exponents: dict) -> bool:
    """\
    :param exponents: map from :py:class:`isogenies.homs.HomElement` to integer
    :raises DegenerateInput: if the labels have no common basis
    """
    return quadratic_matrix(exponents) == (0, 0, 0)


def sqrt_hat_symbols(exponents: dict, scaling: DifferentialScaling) -> KernelSymbolSum:
    """``Σ e_φ·((K_{g_ι(φ)}) − 2(K₁))``, half the symbol sum of ``∏ Ψ̂_φ^(e_φ)``"""
    curve = scaling.curve
    symbols = KernelSymbolSum(curve)
    for label, n in exponents.items():
        if not n:
            continue
        if label.curve != curve:
            raise InvalidCurve.mismatch(curve, label.curve)
        if label.is_zero:
            raise DegenerateInput.zero_label(label, "a Ψ̂ product")
        index = kernel_sum(label.to_isogeny())[1]
        if index:
            symbols = symbols + n * (KernelSymbolSum.single(scaling.g(index), frame=index)
                                     + KernelSymbolSum.unit(curve, -2))
    return symbols


def sqrt_hat_product(exponents: dict, scaling: DifferentialScaling) -> NormalizedFunction:
    """\
    the kernel function whose square is ``∏ Ψ̂_φ^(e_φ)``

    :raises DegenerateInput: if the exponents are not a quadratic identity
    :raises NonPrincipal: if the half symbol sum is not principal
    """
    if not quadratic_identity_check(exponents):
        raise DegenerateInput("Exponents {} are not a quadratic identity"
                              .format(', '.join("{}: {}".format(label, n) for label, n in exponents.items())))
    root = kernel_function(sqrt_hat_symbols(exponents, scaling), scaling)
    logger.debug("√∏Ψ̂^e = {}".format(root))
    return root


def sqrt_hat_product_by_roots(product: NormalizedFunction) -> CurveRationalFunction:
    """\
    the same root taken directly from a Ψ̂ product, up to the sign of the scalar

    An independent oracle for :py:func:`sqrt_hat_product`: it reads the root off the
    roots eᵢ of the product instead of halving kernel symbols. Nothing in the
    identities calls it; the tests compare the two.

    :raises ExtensionRequired: if the product has no square root over the field
    """
    root = sqrt_two_torsion_supported(product.value)
    if root is None:
        raise ExtensionRequired("{} has no square root over {}".format(product, product.curve.spec),
                                field=product.curve.spec)
    return root
