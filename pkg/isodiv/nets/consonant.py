# isodiv - Consonant Specialization
# licensed under the GNU Public License, version 2

"""\
Evaluating every Ψ_φ at one point P. For a fixed P the differentials can be chosen
so that ``Ψ̂ᵢ(P) = 1`` for i = 1, 2, 3; the collection ``Ψ_φ(P)`` is then called
*consonant* and satisfies the classical recurrences without Ψ̂ factors. No choice
works for all P at once, so the scaling is solved per point: with the current values
``hᵢ = Ψ̂ᵢ(P)``, rescale ``ω`` by t and ``ωᵢ`` by tᵢ where

    t⁶ = h₁h₂h₃,    tᵢ² = t⁴ / hᵢ,    t₁t₂t₃ = t³.
"""

import itertools
import logging

from curves.curvefunc import POLE
from curves.weierstrass import Point, WeierstrassCurve
from divpoly.context import DivisionContext
from divpoly.scaling import DifferentialScaling, convention_solve, default_g_choices
from helpers.exceptions import DegenerateInput, ExtensionRequired, InvalidField
from isogenies.homs import HomElement

logger = logging.getLogger('isodiv.nets.consonant')


def consonant_scaling(scaling: DifferentialScaling, point: Point) -> DifferentialScaling:
    """\
    :raises DegenerateInput: if P is 𝒪 or a two-torsion point
    :raises ExtensionRequired: if the roots t, tᵢ are not in the field
    """
    if point.is_two_torsion:
        raise DegenerateInput("The point {} lies on a zero of Ψ̂: it is 𝒪 or two-torsion".format(point))
    context = DivisionContext(scaling.curve, scaling)
    values = [context.psi_hat(index).value(point) for index in (1, 2, 3)]
    product = values[0] * values[1] * values[2]
    t = product.nth_root(6)
    if t is None:
        raise ExtensionRequired("Ψ̂₁Ψ̂₂Ψ̂₃(P) = {} has no sixth root in {}".format(product, scaling.curve.spec),
                                field=scaling.curve.spec)
    factors = []
    for value in values:
        root = (t ** 4 / value).sqrt()
        if root is None:
            raise ExtensionRequired("t⁴/Ψ̂(P) = {} has no square root in {}".format(t ** 4 / value,
                                                                                    scaling.curve.spec),
                                    field=scaling.curve.spec)
        factors.append(root)
    if factors[0] * factors[1] * factors[2] != t ** 3:
        factors[2] = -factors[2]
    lams = tuple(lam * factor for lam, factor in zip(scaling.lams, factors))
    return scaling.rescaled(lam=scaling.lam * t, lams=lams)


class ConsonantCollection:
    """\
    The values ``Ψ_φ(P)`` under a scaling with ``Ψ̂ᵢ(P) = 1``. Values of labels
    outside the initial list are computed on request.

    :param context: a session with the consonant scaling
    :param point: P
    """

    def __init__(self, context: DivisionContext, point: Point, labels=()):
        self.context = context
        self.point = point
        self.labels = [self.as_label(label) for label in labels]
        self.values = {}  #: map from label to Ψ_label(P)
        for index in (1, 2, 3):
            value = context.psi_hat(index).value(point)
            if value != 1:
                raise DegenerateInput("Ψ̂_{}(P) = {} after rescaling".format(index, value))
        for label in self.labels:
            self[label]

    @property
    def curve(self) -> WeierstrassCurve:
        return self.context.curve

    @property
    def scaling(self) -> DifferentialScaling:
        return self.context.scaling

    def as_label(self, label) -> HomElement:
        if isinstance(label, str):
            return self.context.label(label)
        return label

    def __getitem__(self, label):
        label = self.as_label(label)
        if label not in self.values:
            value = self.context.psi(label).value(self.point)
            if value is POLE:
                raise DegenerateInput("Ψ_{} has a pole at {}".format(label, self.point))
            self.values[label] = value
        return self.values[label]

    def __repr__(self):
        return "<ConsonantCollection at {} with {} values>".format(self.point, len(self.values))


def consonant_specialize(labels, point: Point, g_choices=None, extension_ok: bool = False) -> ConsonantCollection:
    """\
    :param labels: isogeny labels (literals or :py:class:`isogenies.homs.HomElement`) on the curve of P
    :param point: P
    :param g_choices: the isogenies gᵢ, or a map of overrides ``{i: gᵢ}``
    :param extension_ok: whether to move to F_{p²} when a root is missing
    :raises ExtensionRequired: if a root is missing and no extension is allowed
    """
    curve = point.curve
    if g_choices is None or isinstance(g_choices, dict):
        g_choices = default_g_choices(curve, g_choices)
    try:
        scaling = consonant_scaling(convention_solve(curve, g_choices), point)
    except ExtensionRequired:
        if not extension_ok:
            raise
        try:
            spec = curve.spec.quadratic_extension()
        except InvalidField:
            raise ExtensionRequired("No consonant scaling at {} over {}".format(point, curve.spec),
                                    field=curve.spec)
        logger.warning("No consonant scaling at {} over {}; moving to {}".format(point, curve.spec, spec))
        extended = curve.base_change(spec)
        g_choices = tuple(HomElement.parse(str(g), extended).to_isogeny() for g in g_choices)
        return consonant_specialize([str(label) for label in labels], point.base_change(spec), g_choices)
    collection = ConsonantCollection(DivisionContext(curve, scaling), point, labels)
    logger.info("Consonant collection at {}: {}".format(point, scaling))
    return collection


def find_consonant_point(curve: WeierstrassCurve, labels, bound: int = 4, g_choices=None) -> Point:
    """\
    scans the points of a curve over a finite field for one that admits a consonant
    scaling and keeps every ``Σ aᵢ·φᵢ(P)`` with ``0 < ‖a‖∞ ≤ bound`` away from 𝒪

    :raises ExtensionRequired: if no such point exists
    """
    if not curve.spec.is_finite:
        raise InvalidField("Points can only be scanned over finite fields, not {}".format(curve.spec))
    if g_choices is None or isinstance(g_choices, dict):
        g_choices = default_g_choices(curve, g_choices)
    scaling = convention_solve(curve, g_choices)
    context = DivisionContext(curve, scaling)
    isogenies = [context.isogeny(label) for label in labels]
    for point in curve.points():
        if point.is_two_torsion:
            continue
        images = [phi(point) for phi in isogenies]
        if not _nondegenerate(images, bound):
            continue
        try:
            consonant_scaling(scaling, point)
        except ExtensionRequired:
            continue
        logger.info("Consonant point {} on {}".format(point, curve))
        return point
    raise ExtensionRequired("No point of {} admits a consonant scaling for {}".format(
        curve, ', '.join(str(label) for label in labels)), field=curve.spec)


def _nondegenerate(images: list, bound: int) -> bool:
    target = images[0].curve
    for a in itertools.product(range(-bound, bound + 1), repeat=len(images)):
        if not any(a):
            continue
        total = target.infinity
        for n, image in zip(a, images):
            total = total + n * image
        if total.is_infinity:
            return False
    return True
