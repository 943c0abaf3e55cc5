# isodiv - Isogenies
# licensed under the GNU Public License, version 2

"""\
Separable isogenies between curves in the model ``y² = f(x)``, stored as explicit maps

    x ↦ N(x)/D(x),    y ↦ y·S(x)/W(x)

with ``D`` and ``W`` monic and both fractions in lowest terms. The degree is
``deg N``, the kernel polynomial is ``D``, and the formal leading coefficient
``a_φ`` (``T′∘φ = a_φ·T + O(T²)``) is ``lc(N)/lc(S)``.
"""

import logging
from fractions import Fraction
from functools import lru_cache

from algebra.polynomial import Polynomial, gcd
from curves.curvefunc import CurveRationalFunction
from curves.weierstrass import Point, WeierstrassCurve
from helpers.exceptions import ExtensionRequired, InvalidCurve, InvalidIsogeny

logger = logging.getLogger('isodiv.isogenies.isogeny')


class Isogeny:
    """\
    :param source: the curve E
    :param target: the curve E′
    :param x_numerator: N
    :param x_denominator: D
    :param y_numerator: S
    :param y_denominator: W
    :param label: name used when printing
    :raises InvalidIsogeny: if the maps do not describe a separable isogeny with 𝒪 ↦ 𝒪′
    """

    __slots__ = ('source', 'target', 'N', 'D', 'S', 'W', 'label')

    def __init__(self, source: WeierstrassCurve, target: WeierstrassCurve, x_numerator: Polynomial,
                 x_denominator: Polynomial, y_numerator: Polynomial, y_denominator: Polynomial, label: str = None):
        if source.spec != target.spec:
            raise InvalidCurve.mismatch(source, target)
        self.source = source
        self.target = target
        self.N, self.D = _lowest_terms(x_numerator, x_denominator)
        self.S, self.W = _lowest_terms(y_numerator, y_denominator)
        self.label = label
        if not self.S or self.N.degree != self.D.degree + 1 or self.S.degree != self.W.degree:
            raise InvalidIsogeny("Maps x ↦ {}, y ↦ y*{} do not describe a separable isogeny"
                                 .format(_fraction_str(self.N, self.D), _fraction_str(self.S, self.W)))

    # maps

    @property
    def maps(self) -> tuple:
        """``(N, D, S, W)``"""
        return self.N, self.D, self.S, self.W

    @property
    def x_map(self) -> CurveRationalFunction:
        """x′∘φ as a function on the source"""
        return CurveRationalFunction(self.source, self.N, None, self.D)

    @property
    def y_map(self) -> CurveRationalFunction:
        """y′∘φ as a function on the source"""
        return CurveRationalFunction(self.source, Polynomial(self.source.spec), self.S, self.W)

    @property
    def degree(self) -> int:
        return self.N.degree

    @property
    def lead(self):
        """the formal leading coefficient a_φ"""
        return self.N.leading / self.S.leading

    def kernel_polynomial(self) -> Polynomial:
        return self.D

    def check(self) -> None:
        """\
        audits ``(y′∘φ)² = f′(x′∘φ)``

        :raises InvalidIsogeny: if the maps do not land on the target curve
        """
        X, Y = self.x_map, self.y_map
        target = self.target
        if Y * Y != X * X * X + target.A2 * X * X + target.A4 * X + target.A6:
            raise InvalidIsogeny("{} does not map {} to {}".format(self, self.source, self.target))

    def __call__(self, point: Point) -> Point:
        if point.curve != self.source:
            raise InvalidCurve.mismatch(self.source, point.curve)
        if point.is_infinity or not self.D(point.x):
            return self.target.infinity
        x = self.N(point.x) / self.D(point.x)
        y = point.y * self.S(point.x) / self.W(point.x)
        return Point(self.target, x, y, check=False)

    # identity

    def _key(self) -> tuple:
        return self.source, self.target, self.N, self.D, self.S, self.W

    def __eq__(self, other):
        return isinstance(other, Isogeny) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __neg__(self) -> 'Isogeny':
        return Isogeny(self.source, self.target, self.N, self.D, -self.S, self.W, label=_negated(self.label))

    def __str__(self):
        if self.label:
            return self.label
        return "(x, y) ↦ ({}, y*{})".format(_fraction_str(self.N, self.D), _fraction_str(self.S, self.W))

    def __repr__(self):
        return "<Isogeny {} of degree {}: {} → {}>".format(self, self.degree, self.source, self.target)

    def describe(self) -> str:
        """the explicit maps, whatever the label"""
        return "x ↦ {}, y ↦ y*{}".format(_fraction_str(self.N, self.D), _fraction_str(self.S, self.W))


# constructors

@lru_cache(maxsize=256)
def identity(curve: WeierstrassCurve) -> Isogeny:
    one = Polynomial.constant(curve.spec, 1)
    return Isogeny(curve, curve, Polynomial.x(curve.spec), one, one, one, label='1')


@lru_cache(maxsize=256)
def negation(curve: WeierstrassCurve) -> Isogeny:
    return -identity(curve)


def velu2(curve: WeierstrassCurve, point: Point) -> Isogeny:
    """\
    the degree 2 isogeny with kernel {𝒪, P}, normalized so that a_φ = 1

    :raises InvalidIsogeny: if P is not a nontrivial two-torsion point
    """
    if point.curve != curve:
        raise InvalidCurve.mismatch(curve, point.curve)
    if point.is_infinity or point.y:
        raise InvalidIsogeny("Vélu's formulas of degree 2 need a nontrivial two-torsion point, got {}"
                             .format(point))
    spec = curve.spec
    x0 = point.x
    t = curve.f.derivative()(x0)
    w = x0 * t
    target = WeierstrassCurve(spec, curve.A2, curve.A4 - 5 * t, curve.A6 - 4 * curve.A2 * t - 7 * w)
    x = Polynomial.x(spec)
    shifted = x - x0
    isogeny = Isogeny(curve, target,
                      x * shifted + t, shifted,
                      shifted * shifted - t, shifted * shifted,
                      label="velu2@({},0)".format(x0))
    logger.debug("Vélu isogeny {}: {} → {}".format(isogeny.label, curve, target))
    return isogeny


def isogeny_add(alpha: Isogeny, beta: Isogeny):
    """\
    the pointwise sum α + β, computed with the chord-tangent law on the generic points
    ``(x′∘α, y′∘α)`` and ``(x′∘β, y′∘β)``

    :return: the sum, or ``None`` if α = −β (the zero map)
    :raises InvalidIsogeny: if the sum is inseparable
    """
    if alpha.source != beta.source:
        raise InvalidCurve.mismatch(alpha.source, beta.source)
    if alpha.target != beta.target:
        raise InvalidCurve.mismatch(alpha.target, beta.target)
    target = alpha.target
    Xa, Ya, Xb, Yb = alpha.x_map, alpha.y_map, beta.x_map, beta.y_map
    if Xa == Xb:
        if Ya != Yb:
            return None
        slope = (3 * Xa * Xa + 2 * target.A2 * Xa + target.A4) / (2 * Ya)
    else:
        slope = (Yb - Ya) / (Xb - Xa)
    X = slope * slope - target.A2 - Xa - Xb
    Y = slope * (Xa - X) - Ya
    label = _sum_label(alpha.label, beta.label)
    try:
        return Isogeny(alpha.source, target, X.u, X.d, Y.v, Y.d, label=label)
    except InvalidIsogeny:
        raise InvalidIsogeny("{} + {} is inseparable over {}".format(alpha, beta, target.spec))


def compose(psi: Isogeny, phi: Isogeny) -> Isogeny:
    """\
    ψ∘φ (φ first)

    :raises InvalidCurve: if the target of φ is not the source of ψ
    """
    if phi.target != psi.source:
        raise InvalidCurve.mismatch(phi.target, psi.source)
    N, D, S, W = phi.maps
    x_degree = max(psi.N.degree, psi.D.degree)
    y_degree = max(psi.S.degree, psi.W.degree)
    x_numerator = psi.N.homogenize(N, D, x_degree)
    x_denominator = psi.D.homogenize(N, D, x_degree)
    y_numerator = S * psi.S.homogenize(N, D, y_degree)
    y_denominator = W * psi.W.homogenize(N, D, y_degree)
    return Isogeny(phi.source, psi.target, x_numerator, x_denominator, y_numerator, y_denominator,
                   label=_compose_label(psi.label, phi.label))


@lru_cache(maxsize=256)
def multiplication_by(curve: WeierstrassCurve, n: int) -> Isogeny:
    """\
    [n], built with a double-and-add ladder over :py:func:`isogeny_add`

    :raises InvalidIsogeny: for n = 0 or an inseparable [n]
    """
    if n == 0:
        raise InvalidIsogeny("[0] is not an isogeny")
    if n < 0:
        return -multiplication_by(curve, -n)
    if n == 1:
        return identity(curve)
    half = multiplication_by(curve, n // 2)
    result = isogeny_add(half, half)
    if n % 2:
        result = isogeny_add(result, identity(curve))
    result.label = str(n)
    logger.debug("Built [{}] on {}".format(n, curve))
    return result


@lru_cache(maxsize=256)
def unit_i(curve: WeierstrassCurve) -> Isogeny:
    """\
    ``[i]: (x, y) ↦ (−x, i·y)`` on ``y² = x³ + A₄x``

    :raises InvalidIsogeny: if the model has no such automorphism
    :raises ExtensionRequired: if the field has no square root of −1
    """
    if not curve.is_cm():
        raise InvalidIsogeny("{} has no complex multiplication by i in this model".format(curve))
    i = curve.spec.sqrt_minus_one()
    if i is None:
        raise ExtensionRequired("{} has no square root of -1".format(curve.spec), field=curve.spec)
    spec = curve.spec
    one = Polynomial.constant(spec, 1)
    return Isogeny(curve, curve, -Polynomial.x(spec), one, one * i, one, label='i')


@lru_cache(maxsize=1024)
def gaussian(curve: WeierstrassCurve, a: int, b: int) -> Isogeny:
    """\
    ``[a + bi] = [a] + [b]∘[i]``

    :raises InvalidIsogeny: for 0, on models without CM, or if the reduction is inseparable
    """
    if b == 0:
        return multiplication_by(curve, a)
    i = unit_i(curve)
    imaginary = i if b == 1 else compose(multiplication_by(curve, b), i)
    result = imaginary if a == 0 else isogeny_add(multiplication_by(curve, a), imaginary)
    if result is None:
        raise InvalidIsogeny("0 is not an isogeny")
    if result.degree != a * a + b * b:
        raise InvalidIsogeny("[{}] is inseparable over {}".format(gaussian_label(a, b), curve.spec))
    result.label = gaussian_label(a, b)
    return result


# derived quantities

def kernel_polynomial(phi: Isogeny) -> Polynomial:
    """∏(x − x(R)) over the kernel points R ≠ 𝒪, ±R counted twice"""
    return phi.kernel_polynomial()


def two_torsion_kernel(phi: Isogeny) -> Polynomial:
    """``gcd(D, f)``: the monic polynomial of the x-coordinates of E[φ] ∩ E[2] − {𝒪}"""
    return gcd(phi.D, phi.source.f)


def kernel_sum_point(phi: Isogeny) -> Point:
    """the sum P_φ of the kernel points (which only sees the two-torsion in the kernel)"""
    curve = phi.source
    common = two_torsion_kernel(phi)
    if common.degree in (0, 3):
        return curve.infinity
    if common.degree != 1:
        raise InvalidIsogeny("Kernel of {} meets E[2] in two points only".format(phi))
    return Point(curve, -common[0], curve.spec.zero, check=False)


def kernel_sum(phi: Isogeny) -> tuple:
    """\
    :return: ``(P_φ, ι)`` with ι the index of P_φ in the fixed ordering of E[2] (0 for 𝒪)
    :raises ExtensionRequired: if P_φ is nontrivial and E[2] is not split
    """
    curve = phi.source
    point = kernel_sum_point(phi)
    if point.is_infinity:
        return point, 0
    root = point.x
    points, split = curve.two_torsion()
    if not split:
        raise ExtensionRequired("The two-torsion of {} is not split".format(curve), field=curve.spec)
    index = [point.x for point in points].index(root) + 1
    return points[index - 1], index


def is_biased(phi: Isogeny) -> bool:
    return kernel_sum(phi)[1] != 0


def degree_pairing(phi: Isogeny, psi: Isogeny):
    """⟨φ, ψ⟩ = (deg(φ + ψ) − deg φ − deg ψ)/2"""
    total = isogeny_add(phi, psi)
    total_degree = 0 if total is None else total.degree
    pairing = Fraction(total_degree - phi.degree - psi.degree, 2)
    return int(pairing) if pairing.denominator == 1 else pairing


# labels

def gaussian_label(a: int, b: int) -> str:
    if b == 0:
        return str(a)
    imaginary = {1: 'i', -1: '-i'}.get(b, "{}i".format(b))
    if a == 0:
        return imaginary
    return "{}{}{}".format(a, '' if imaginary.startswith('-') else '+', imaginary)


def _needs_parens(label: str) -> bool:
    depth = 0
    for position, symbol in enumerate(label):
        if symbol == '(':
            depth += 1
        elif symbol == ')':
            depth -= 1
        elif symbol in '+-' and position and not depth:
            return True
    return False


def _sum_label(left, right):
    if not left or not right:
        return None
    return "{}+{}".format(left, right)


def _compose_label(outer, inner):
    if not outer or not inner:
        return None
    if outer == '1':
        return inner
    if inner == '1':
        return outer
    parts = ["({})".format(label) if _needs_parens(label) else label for label in (outer, inner)]
    return "∘".join(parts)


def _negated(label):
    if not label:
        return None
    if label.startswith('-') and not _needs_parens(label):
        return label[1:]
    return "-({})".format(label) if _needs_parens(label) else '-' + label


def _lowest_terms(numerator: Polynomial, denominator: Polynomial) -> tuple:
    if not denominator:
        raise InvalidIsogeny("Zero denominator in an isogeny map")
    common = gcd(numerator, denominator)
    if common.degree > 0:
        numerator, denominator = numerator // common, denominator // common
    scale = denominator.leading.inverse()
    return numerator * scale, denominator * scale


def _fraction_str(numerator: Polynomial, denominator: Polynomial) -> str:
    if denominator.degree == 0:
        return "({})".format(numerator)
    return "({})/({})".format(numerator, denominator)
