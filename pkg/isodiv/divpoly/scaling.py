# isodiv - Differential Scalings
# licensed under the GNU Public License, version 2

"""\
Choices of invariant differentials. Every curve carries the normalized
differential ``dT/(1 + O(T))``; a :py:class:`DifferentialScaling` records by which
constant each differential of interest is multiplied:

    - ``lam``: ω on the base curve E
    - ``lams[i−1]``: ωᵢ on the target Eᵢ of the fixed isogeny gᵢ (i = 1, 2, 3)
    - ``target_scales``: ω′ on any other target curve (1 unless set)

The fixed isogenies ``g_choices`` have the kernels {𝒪, Pᵢ} in the fixed ordering of E[2].
"""

import logging

from algebra.field import FieldElement
from curves.weierstrass import WeierstrassCurve
from helpers import verify
from helpers.exceptions import ExtensionRequired, InvalidParameters
from isogenies.isogeny import Isogeny, identity, kernel_sum, multiplication_by, velu2

logger = logging.getLogger('isodiv.divpoly.scaling')

#: frame of a kernel symbol whose differential is ω′ on the target of its own isogeny
TARGET = None


class DifferentialScaling:
    """\
    :param curve: the base curve E
    :param g_choices: the isogenies g₁, g₂, g₃
    :param lam: scale of ω
    :param lams: scales of ω₁, ω₂, ω₃
    :param target_scales: scales of ω′ per target curve
    """

    def __init__(self, curve: WeierstrassCurve, g_choices: tuple, lam=1, lams=(1, 1, 1), target_scales: dict = None):
        spec = curve.spec
        self.curve = curve
        self.g_choices = tuple(g_choices)
        self.lam = spec(lam)
        self.lams = tuple(spec(value) for value in lams)
        self.target_scales = {target: spec(value) for target, value in (target_scales or {}).items()}
        if len(self.g_choices) != 3 or len(self.lams) != 3:
            raise InvalidParameters("A scaling needs three isogenies g_i and three scales")
        if not self.lam or not all(self.lams) or not all(self.target_scales.values()):
            raise InvalidParameters("Differential scales must be nonzero")

    def g(self, index: int) -> Isogeny:
        """gᵢ, with g₀ the identity"""
        verify.two_torsion_index(index)
        if index == 0:
            return identity(self.curve)
        return self.g_choices[index - 1]

    def frame_scale(self, frame, target: WeierstrassCurve) -> FieldElement:
        """the scale of the differential a kernel symbol is normalized with"""
        if frame is TARGET:
            return self.target_scale(target)
        verify.two_torsion_index(frame, 'frame')
        if frame == 0:
            return self.lam
        return self.lams[frame - 1]

    def target_scale(self, target: WeierstrassCurve) -> FieldElement:
        """ω′ on ``target``: ω itself on the base curve unless set explicitly"""
        if target in self.target_scales:
            return self.target_scales[target]
        if target == self.curve:
            return self.lam
        return self.curve.spec.one

    def rescaled(self, lam=None, lams=None) -> 'DifferentialScaling':
        return DifferentialScaling(self.curve, self.g_choices,
                                   self.lam if lam is None else lam,
                                   self.lams if lams is None else lams,
                                   self.target_scales)

    def with_target_scale(self, target: WeierstrassCurve, value) -> 'DifferentialScaling':
        scales = dict(self.target_scales)
        scales[target] = value
        return DifferentialScaling(self.curve, self.g_choices, self.lam, self.lams, scales)

    def _key(self) -> tuple:
        return (self.curve, self.g_choices, self.lam, self.lams,
                tuple(sorted(self.target_scales.items(), key=lambda item: str(item[0]))))

    def __eq__(self, other):
        return isinstance(other, DifferentialScaling) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __str__(self):
        return "λ = {}, λ₁ = {}, λ₂ = {}, λ₃ = {} (g = {})".format(
            self.lam, *self.lams, ', '.join(str(g) for g in self.g_choices))

    def __repr__(self):
        return "<DifferentialScaling {}>".format(self)


def default_g_choices(curve: WeierstrassCurve, overrides: dict = None) -> tuple:
    """\
    Vélu isogenies gᵢ with kernel {𝒪, Pᵢ}, replaced by ``overrides[i]`` where given

    :raises ExtensionRequired: if E[2] is not split
    :raises InvalidParameters: if an override does not have the kernel {𝒪, Pᵢ}
    """
    points, split = curve.two_torsion()
    if not split:
        raise ExtensionRequired("The two-torsion of {} is not rational".format(curve), field=curve.spec)
    overrides = overrides or {}
    choices = []
    for index, point in enumerate(points, start=1):
        g = overrides.get(index)
        if g is None:
            g = velu2(curve, point)
        elif g.source != curve or g.degree != 2 or kernel_sum(g)[1] != index:
            raise InvalidParameters("g{} = {} does not have the kernel {{O, {}}}".format(index, g, point))
        choices.append(g)
    return tuple(choices)


def convention_constant(curve: WeierstrassCurve, g_choices: tuple) -> FieldElement:
    """\
    κ, the value at 𝒪 of ``(t∘[2])·t² / ∏(tᵢ∘gᵢ)`` for the normalized parameters
    (the leading coefficients of the formal maps give ``κ = a_[2]/(a₁a₂a₃)``)
    """
    product = curve.spec.one
    for g in g_choices:
        product = product * g.lead
    return multiplication_by(curve, 2).lead / product


def convention_solve(curve: WeierstrassCurve, g_choices: tuple = None) -> DifferentialScaling:
    """\
    the scaling with λ = λ₁ = λ₂ = 1 and λ₃ = κ, under which the kernel function of
    ``(K_g₁) + (K_g₂) + (K_g₃) − (K_[2]) − 2(K₁)`` is the constant 1

    :raises ExtensionRequired: if E[2] is not split
    """
    if g_choices is None:
        g_choices = default_g_choices(curve)
    kappa = convention_constant(curve, g_choices)
    scaling = DifferentialScaling(curve, g_choices, 1, (1, 1, kappa))
    logger.info("Solved the differential convention on {}: κ = {}".format(curve, kappa))
    return scaling
