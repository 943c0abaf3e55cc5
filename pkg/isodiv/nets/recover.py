# isodiv - Recovering Elliptic Nets
# licensed under the GNU Public License, version 2

"""\
For φ₁ … φ_k: E → E′ and a point P, the consonant values ``W(a) = Ψ_{Σ aᵢφᵢ}(P)``
form the elliptic net of ``(E′, φ₁(P), …, φ_k(P))`` up to equivalence:

    W(a) = s·N(a)·∏ cᵢ^(aᵢ²)·∏_{i<j} c_ij^(aᵢaⱼ)

where N is the net of the image points normalized by ``N(eᵢ) = N(eᵢ+eⱼ) = 1`` and s
is the scale of ω′ on E′. The constants cᵢ, c_ij are read off ``W(eᵢ)`` and
``W(eᵢ+eⱼ)``; everything else is compared.
"""

import logging

from curves.weierstrass import Point
from helpers import verify
from helpers.exceptions import DegenerateInput, InvalidParameters
from identities.report import TableReport
from isogenies.homs import HomElement
from nets.consonant import consonant_specialize
from nets.net import MINIMAL_BOX, EllipticNet, vectors

logger = logging.getLogger('isodiv.nets.recover')

#: the radius of the compared box by rank
DEFAULT_BOUNDS = {1: 6, 2: 3}


def _labels(labels, curve) -> list:
    return [HomElement.parse(label, curve) if isinstance(label, str) else label for label in labels]


def _combination(labels: list, a: tuple) -> HomElement:
    total = None
    for n, label in zip(a, labels):
        if not n:
            continue
        term = n * label
        total = term if total is None else total + term
    return total


def check_hypotheses(labels: list, point: Point) -> list:
    """\
    :return: the images φᵢ(P)
    :raises DegenerateInput: if some φᵢ(P) is two-torsion or some (φᵢ ± φⱼ)(P) is 𝒪
    """
    images = [label.to_isogeny()(point) for label in labels]
    for label, image in zip(labels, images):
        if image.is_two_torsion:
            raise DegenerateInput("{}(P) = {} is a two-torsion point".format(label, image))
    for i in range(len(images)):
        for j in range(i + 1, len(images)):
            if (images[i] + images[j]).is_infinity or (images[i] - images[j]).is_infinity:
                raise DegenerateInput("({} ± {})(P) = O".format(labels[i], labels[j]))
    return images


def verify_recover(labels, point: Point, bound: int = None, g_choices=None, extension_ok: bool = False,
                   box: int = MINIMAL_BOX) -> TableReport:
    """\
    compares the consonant collection with the net of the image points on ``[−bound, bound]ᵏ``

    :param labels: φ₁ … φ_k (k = 1, 2) in a common basis
    :param point: P
    :param bound: radius of the compared box (6 for rank 1, 3 for rank 2 by default)
    :param g_choices: the isogenies gᵢ, or a map of overrides
    :param extension_ok: whether the consonant scaling may move to F_{p²}
    :param box: initial box of the net of the image points
    """
    labels = _labels(labels, point.curve)
    rank = len(labels)
    if rank not in DEFAULT_BOUNDS:
        raise InvalidParameters("Nets are recovered for one or two isogenies, got {}".format(rank))
    bound = DEFAULT_BOUNDS[rank] if bound is None else bound
    verify.positive_integer(bound, 'bound')
    for label in labels:
        if label.is_zero:
            raise DegenerateInput.zero_label(label, 'labels')
        if label.basis != labels[0].basis:
            raise DegenerateInput("Labels {} and {} are not in a common basis".format(labels[0], label))
    check_hypotheses(labels, point)

    spec = point.curve.spec
    collection = consonant_specialize(labels, point, g_choices, extension_ok)
    labels = collection.labels
    point = collection.point
    target = labels[0].target
    images = [collection.context.isogeny(label)(point) for label in labels]
    net = EllipticNet.from_points(target, images, box)
    scale = collection.scaling.target_scale(target)

    c = [collection[labels[i]] / scale for i in range(rank)]
    pairs = {}
    for i in range(rank):
        for j in range(i + 1, rank):
            both = tuple(1 if m in (i, j) else 0 for m in range(rank))
            pairs[i, j] = collection[_combination(labels, both)] / (scale * c[i] * c[j])
    if not all(c) or not all(pairs.values()):
        raise DegenerateInput("A generating value of the collection at {} vanishes".format(point))

    lhs, rhs = {}, {}
    for a in vectors(rank, bound):
        if not any(a):
            continue
        lhs[a] = collection[_combination(labels, a)]
        value = scale * net[a]
        for i in range(rank):
            value = value * c[i] ** (a[i] * a[i])
        for (i, j), cross in pairs.items():
            value = value * cross ** (a[i] * a[j])
        rhs[a] = value
    inputs = {'labels': [str(label) for label in labels], 'point': str(point), 'bound': bound}
    report = TableReport('recover', inputs, lhs, rhs, field=target.spec,
                         retried=collection.curve.spec != spec)
    logger.info("recover {} at {}: {}".format(inputs['labels'], point, 'equal' if report.equal else 'NOT equal'))
    return report
