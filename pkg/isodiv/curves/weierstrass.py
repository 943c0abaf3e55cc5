# isodiv - Weierstrass Curves
# licensed under the GNU Public License, version 2

"""\
Curves ``y² = f(x) = x³ + A₂x² + A₄x + A₆`` over a :py:class:`algebra.field.FieldSpec`,
their points and group law, the two-torsion subgroup, and the expansion of
the coordinate functions at 𝒪 in the local parameter ``T = −x/y``.
"""

import logging
import re
from functools import lru_cache

from algebra.field import FieldElement, FieldSpec
from algebra.polynomial import Polynomial
from algebra.series import LaurentSeries
from helpers import verify
from helpers.exceptions import ExtensionRequired, InvalidCurve, InvalidField, InvalidParameters

logger = logging.getLogger('isodiv.curves.weierstrass')

_LITERAL = re.compile(r'^\s*(?:E\s*/\s*(?P<field>[^\[]+?)\s*:)?\s*\[(?P<coefficients>[^\]]*)\]\s*$')


class WeierstrassCurve:
    """\
    An elliptic curve in the model ``y² = x³ + A₂x² + A₄x + A₆``.
    Instances are immutable and hashable; equal coefficients mean equal curves.

    :param spec: the base field
    :param A2: coefficient of x²
    :param A4: coefficient of x
    :param A6: constant coefficient
    :raises InvalidCurve: if the model is singular
    """

    def __init__(self, spec: FieldSpec, A2=0, A4=0, A6=0):
        self.spec = spec
        self.A2, self.A4, self.A6 = spec(A2), spec(A4), spec(A6)
        self.f = Polynomial(spec, [self.A6, self.A4, self.A2, 1])
        if not self.discriminant:
            raise InvalidCurve("Singular model {}: the discriminant vanishes".format(self))

    @classmethod
    def parse(cls, text: str, spec: FieldSpec = None) -> 'WeierstrassCurve':
        """\
        parses curve literals like ``E/Q(i): [0,-1,0]`` or ``[0,-11,-14]``

        :param spec: field to use when the literal has no ``E/<field>:`` prefix
        """
        match = _LITERAL.match(text)
        if not match:
            raise InvalidParameters.malformed('curve', text, "expected [A2,A4,A6]")
        if match.group('field'):
            spec = FieldSpec.parse(match.group('field'))
        if spec is None:
            raise InvalidParameters.malformed('curve', text, "no field given")
        parts = match.group('coefficients').split(',')
        if len(parts) != 3:
            raise InvalidParameters.malformed('curve', text, "expected three coefficients")
        return cls(spec, *(spec.parse_element(part) for part in parts))

    # identity

    def _key(self) -> tuple:
        return self.spec, self.A2, self.A4, self.A6

    def __eq__(self, other):
        return isinstance(other, WeierstrassCurve) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __str__(self):
        return "E/{}: [{},{},{}]".format(self.spec, self.A2, self.A4, self.A6)

    def __repr__(self):
        return "<WeierstrassCurve {}>".format(self)

    def equation(self) -> str:
        return "y^2 = {}".format(self.f)

    # invariants

    @property
    def discriminant(self) -> FieldElement:
        """discriminant of the cubic f"""
        a, b, c = self.A2, self.A4, self.A6
        return a * a * b * b - 4 * b ** 3 - 4 * a ** 3 * c - 27 * c * c + 18 * a * b * c

    @property
    def b_invariants(self) -> tuple:
        """``(b2, b4, b6, b8)`` of the model (a₁ = a₃ = 0)"""
        return (4 * self.A2, 2 * self.A4, 4 * self.A6,
                4 * self.A2 * self.A6 - self.A4 * self.A4)

    def is_cm(self) -> bool:
        """whether the model has the shape ``y² = x³ + A₄x`` on which ``(x, y) ↦ (−x, iy)`` acts"""
        return not self.A2 and not self.A6

    def base_change(self, spec: FieldSpec) -> 'WeierstrassCurve':
        if spec == self.spec:
            return self
        if not spec.contains(self.spec):
            raise InvalidField.mismatch(self.spec, spec)
        return WeierstrassCurve(spec, self.A2, self.A4, self.A6)

    # points

    @property
    def infinity(self) -> 'Point':
        return Point(self, None, None)

    def point(self, x, y) -> 'Point':
        """the affine point ``(x, y)``; raises :py:class:`InvalidCurve` if it is not on the curve"""
        return Point(self, self.spec(x), self.spec(y))

    def contains(self, x, y) -> bool:
        return self.spec(y) ** 2 == self.f(self.spec(x))

    def lift_x(self, x) -> list:
        """the points with abscissa ``x`` (none, one, or a pair ``(x, ±y)``)"""
        x = self.spec(x)
        value = self.f(x)
        root = value.sqrt()
        if root is None:
            return []
        if not root:
            return [Point(self, x, root, check=False)]
        return [Point(self, x, root, check=False), Point(self, x, -root, check=False)]

    def points(self):
        """iterates over the affine points of a curve over a small finite field"""
        for x in self.spec.elements():
            yield from self.lift_x(x)

    def random_point(self, rng, attempts: int = 200) -> 'Point':
        for _ in range(attempts):
            candidates = self.lift_x(self.spec.random(rng))
            if candidates:
                return rng.choice(candidates)
        raise ExtensionRequired("No rational point found on {}".format(self), field=self.spec)

    # two-torsion

    def two_torsion_roots(self) -> list:
        """the roots of f in the base field, in the fixed two-torsion ordering"""
        return list(_roots_of(self.f))

    def two_torsion(self) -> tuple:
        """\
        :return: ``(points, split)`` with the rational points (e, 0) ordered by e,
            and whether f splits completely over the base field
        """
        roots = self.two_torsion_roots()
        return [Point(self, e, self.spec.zero, check=False) for e in roots], len(roots) == 3

    def two_torsion_point(self, index: int) -> 'Point':
        """P_0 = 𝒪 and P_1, P_2, P_3 in the fixed ordering"""
        verify.two_torsion_index(index)
        if index == 0:
            return self.infinity
        points, split = self.two_torsion()
        if not split:
            raise ExtensionRequired("The two-torsion of {} is not rational".format(self), field=self.spec)
        return points[index - 1]

    # formal expansions

    def expand_coordinates(self, precision: int) -> tuple:
        """\
        expansions of x and y in ``T = −x/y``, each with ``precision`` known terms:
        ``x = T⁻² + ...`` and ``y = −T⁻³ + ...``

        :param precision: number of correct terms per coordinate (at least 1)
        :return: ``(x_series, y_series)``
        """
        verify.precision(precision)
        return _expand_coordinates(self, precision)


@lru_cache(maxsize=64)
def _roots_of(f: Polynomial) -> tuple:
    return tuple(f.roots())


@lru_cache(maxsize=64)
def _expand_coordinates(curve: WeierstrassCurve, precision: int) -> tuple:
    # w = −1/y solves w = T³ + A₂T²w + A₄Tw² + A₆w³
    spec = curve.spec
    absolute = precision + 3
    T = LaurentSeries.variable(spec, absolute)
    T2, T3 = T * T, T * T * T
    w = LaurentSeries(spec, 0, [], absolute)
    for _ in range(precision + 1):
        w = T3 + T2 * w * curve.A2 + T * w * w * curve.A4 + w * w * w * curve.A6
        w = w.truncate(absolute)
    inverse = w.inverse()
    logger.debug("Expanded coordinates of {} to {} terms".format(curve, precision))
    return T * inverse, -inverse


class Point:
    """\
    A point of a :py:class:`WeierstrassCurve`; ``x is None`` marks 𝒪.
    ``+``, ``-`` and integer multiples follow the chord-tangent law.
    """

    __slots__ = ('curve', 'x', 'y')

    def __init__(self, curve: WeierstrassCurve, x, y, check: bool = True):
        self.curve = curve
        self.x = x
        self.y = y
        if check and x is not None and y * y != curve.f(x):
            raise InvalidCurve("({}, {}) is not on {}".format(x, y, curve))

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    @property
    def is_two_torsion(self) -> bool:
        return self.is_infinity or not self.y

    def __eq__(self, other):
        if not isinstance(other, Point):
            return NotImplemented
        return self.curve == other.curve and self.x == other.x and self.y == other.y

    def __hash__(self):
        return hash((self.curve, self.x, self.y))

    def __str__(self):
        if self.is_infinity:
            return 'O'
        return "({}, {})".format(self.x, self.y)

    def __repr__(self):
        return "<Point {} on {}>".format(self, self.curve)

    def sort_key(self) -> tuple:
        if self.is_infinity:
            return (0,)
        return 1, self.x.sort_key(), self.y.sort_key()

    def __neg__(self):
        if self.is_infinity:
            return self
        return Point(self.curve, self.x, -self.y, check=False)

    def __add__(self, other: 'Point') -> 'Point':
        if not isinstance(other, Point):
            return NotImplemented
        if other.curve != self.curve:
            raise InvalidCurve.mismatch(self.curve, other.curve)
        if self.is_infinity:
            return other
        if other.is_infinity:
            return self
        curve = self.curve
        if self.x == other.x:
            if self.y != other.y or not self.y:
                return curve.infinity
            slope = (3 * self.x * self.x + 2 * curve.A2 * self.x + curve.A4) / (2 * self.y)
        else:
            slope = (other.y - self.y) / (other.x - self.x)
        x = slope * slope - curve.A2 - self.x - other.x
        y = slope * (self.x - x) - self.y
        return Point(curve, x, y, check=False)

    def __sub__(self, other: 'Point') -> 'Point':
        return self + (-other)

    def __rmul__(self, n: int) -> 'Point':
        if type(n) is not int:
            return NotImplemented
        if n < 0:
            return (-n) * (-self)
        result, addend = self.curve.infinity, self
        while n:
            if n & 1:
                result = result + addend
            addend = addend + addend
            n >>= 1
        return result

    def base_change(self, spec: FieldSpec) -> 'Point':
        curve = self.curve.base_change(spec)
        if self.is_infinity:
            return curve.infinity
        return Point(curve, spec(self.x), spec(self.y), check=False)
