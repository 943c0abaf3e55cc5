# isodiv - Functions on Curves
# licensed under the GNU Public License, version 2

"""\
Functions on a :py:class:`curves.weierstrass.WeierstrassCurve`.

    - :py:class:`CurveFunction`: ``u(x) + y·v(x)`` in the coordinate ring, ``y²`` reduced to ``f(x)``
    - :py:class:`CurveRationalFunction`: ``(u(x) + y·v(x)) / d(x)`` in the function field

Rational functions are kept in a canonical form: the denominator is monic and
free of y (y is moved into the numerator by conjugation), and no factor of the
denominator divides both u and v. Two functions are therefore equal exactly
when their canonical forms agree.
"""

import logging
from fractions import Fraction

from algebra.expression import evaluate
from algebra.field import FieldElement, FieldSpec
from algebra.polynomial import Polynomial, gcd, join_terms, term_str
from algebra.series import LaurentSeries
from curves.weierstrass import Point, WeierstrassCurve
from helpers import verify
from helpers.exceptions import DegenerateInput, ExtensionRequired, Indeterminate, InvalidCurve, InvalidField

logger = logging.getLogger('isodiv.curves.curvefunc')


class _Pole:
    """the value of a function at one of its poles"""

    def __str__(self):
        return 'pole'

    def __repr__(self):
        return '<POLE>'


POLE = _Pole()


class CurveFunction:
    """\
    ``u(x) + y·v(x)`` on ``curve``; closed under ``+ - *`` and non-negative powers.

    :param curve: the curve
    :param u: the y-free part
    :param v: the coefficient of y (zero if omitted)
    """

    __slots__ = ('curve', 'u', 'v')

    def __init__(self, curve: WeierstrassCurve, u: Polynomial, v: Polynomial = None):
        self.curve = curve
        self.u = u
        self.v = v if v is not None else Polynomial(curve.spec)

    @classmethod
    def x(cls, curve: WeierstrassCurve) -> 'CurveFunction':
        return cls(curve, Polynomial.x(curve.spec))

    @classmethod
    def y(cls, curve: WeierstrassCurve) -> 'CurveFunction':
        return cls(curve, Polynomial(curve.spec), Polynomial.constant(curve.spec, 1))

    @classmethod
    def constant(cls, curve: WeierstrassCurve, value) -> 'CurveFunction':
        return cls(curve, Polynomial.constant(curve.spec, value))

    def _coerce(self, other):
        if isinstance(other, CurveFunction):
            if other.curve != self.curve:
                raise InvalidCurve.mismatch(self.curve, other.curve)
            return other
        if isinstance(other, Polynomial):
            return CurveFunction(self.curve, other)
        if isinstance(other, (int, Fraction, FieldElement)):
            try:
                return CurveFunction.constant(self.curve, other)
            except InvalidField:
                return NotImplemented
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CurveFunction(self.curve, self.u + other.u, self.v + other.v)

    __radd__ = __add__

    def __neg__(self):
        return CurveFunction(self.curve, -self.u, -self.v)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        u = self.u * other.u + self.curve.f * self.v * other.v
        v = self.u * other.v + self.v * other.u
        return CurveFunction(self.curve, u, v)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if type(exponent) is not int or exponent < 0:
            return NotImplemented
        result, base = CurveFunction.constant(self.curve, 1), self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __truediv__(self, other) -> 'CurveRationalFunction':
        return CurveRationalFunction.from_function(self) / other

    def __rtruediv__(self, other) -> 'CurveRationalFunction':
        return other / CurveRationalFunction.from_function(self)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.u == other.u and self.v == other.v

    def __hash__(self):
        return hash((self.curve, self.u, self.v))

    def __bool__(self):
        return bool(self.u) or bool(self.v)

    def conjugate(self) -> 'CurveFunction':
        """``u − y·v``, the image under ``[−1]``"""
        return CurveFunction(self.curve, self.u, -self.v)

    def norm(self) -> Polynomial:
        """``(u + yv)(u − yv) = u² − f·v²``"""
        return self.u * self.u - self.curve.f * self.v * self.v

    @property
    def pole_order(self) -> int:
        """order of the pole at 𝒪 (``x`` counts 2, ``y`` counts 3)"""
        if not self:
            raise DegenerateInput("The zero function has no pole order")
        orders = []
        if self.u:
            orders.append(2 * self.u.degree)
        if self.v:
            orders.append(2 * self.v.degree + 3)
        return max(orders)

    def exact_div(self, other) -> 'CurveFunction':
        """quotient in the coordinate ring; :py:class:`ArithmeticError` if there is none"""
        other = self._coerce(other)
        norm = other.norm()
        product = self * other.conjugate()
        return CurveFunction(self.curve, product.u.exact_div(norm), product.v.exact_div(norm))

    def __call__(self, point: Point) -> FieldElement:
        return self.u(point.x) + point.y * self.v(point.x)

    def format(self) -> str:
        return _format_numerator(self.u, self.v)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return "<CurveFunction {} on {}>".format(self, self.curve)


class CurveRationalFunction:
    """\
    ``(u(x) + y·v(x)) / d(x)`` in canonical form

    :param curve: the curve
    :param u: y-free part of the numerator
    :param v: coefficient of y in the numerator
    :param d: denominator, nonzero
    :raises ZeroDivisionError: if ``d`` is zero
    """

    __slots__ = ('curve', 'u', 'v', 'd')

    def __init__(self, curve: WeierstrassCurve, u: Polynomial, v: Polynomial = None, d: Polynomial = None):
        spec = curve.spec
        if v is None:
            v = Polynomial(spec)
        if d is None:
            d = Polynomial.constant(spec, 1)
        if not d:
            raise ZeroDivisionError("Denominator of a curve function is zero")
        if not u and not v:
            d = Polynomial.constant(spec, 1)
        elif d.degree > 0:
            common = gcd(gcd(u, v), d)
            if common.degree > 0:
                u, v, d = u // common, v // common, d // common
        if not d.leading.is_one:
            scale = d.leading.inverse()
            u, v, d = u * scale, v * scale, d * scale
        self.curve = curve
        self.u, self.v, self.d = u, v, d

    @classmethod
    def from_function(cls, function: CurveFunction) -> 'CurveRationalFunction':
        return cls(function.curve, function.u, function.v)

    @classmethod
    def x(cls, curve: WeierstrassCurve) -> 'CurveRationalFunction':
        return cls(curve, Polynomial.x(curve.spec))

    @classmethod
    def y(cls, curve: WeierstrassCurve) -> 'CurveRationalFunction':
        return cls(curve, Polynomial(curve.spec), Polynomial.constant(curve.spec, 1))

    @classmethod
    def constant(cls, curve: WeierstrassCurve, value) -> 'CurveRationalFunction':
        return cls(curve, Polynomial.constant(curve.spec, value))

    @classmethod
    def from_polynomial(cls, curve: WeierstrassCurve, polynomial: Polynomial) -> 'CurveRationalFunction':
        return cls(curve, polynomial)

    @classmethod
    def parse(cls, curve: WeierstrassCurve, text: str) -> 'CurveRationalFunction':
        """parses the canonical textual form (and any other expression in x, y and the field literals)"""
        names = curve.spec.literal_names()
        names['x'] = cls.x(curve)
        names['y'] = cls.y(curve)
        value = evaluate(text, curve.spec, names)
        if isinstance(value, FieldElement):
            return cls.constant(curve, value)
        return value

    # accessors

    @property
    def numerator(self) -> CurveFunction:
        return CurveFunction(self.curve, self.u, self.v)

    @property
    def denominator(self) -> Polynomial:
        return self.d

    @property
    def is_zero(self) -> bool:
        return not self.u and not self.v

    def __bool__(self):
        return not self.is_zero

    @property
    def is_polynomial(self) -> bool:
        """whether the function is a polynomial in x alone"""
        return not self.v and self.d.degree == 0

    def as_polynomial(self) -> Polynomial:
        if not self.is_polynomial:
            raise ArithmeticError("{} is not a polynomial in x".format(self))
        return self.u

    @property
    def is_constant(self) -> bool:
        return self.is_polynomial and self.u.degree <= 0

    def as_constant(self) -> FieldElement:
        if not self.is_constant:
            raise ArithmeticError("{} is not constant".format(self))
        return self.u[0]

    def _key(self) -> tuple:
        return self.curve, self.u, self.v, self.d

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    # arithmetic

    def _coerce(self, other):
        if isinstance(other, CurveRationalFunction):
            if other.curve != self.curve:
                raise InvalidCurve.mismatch(self.curve, other.curve)
            return other
        if isinstance(other, CurveFunction):
            if other.curve != self.curve:
                raise InvalidCurve.mismatch(self.curve, other.curve)
            return CurveRationalFunction.from_function(other)
        if isinstance(other, Polynomial):
            return CurveRationalFunction(self.curve, other)
        if isinstance(other, (int, Fraction, FieldElement)):
            try:
                return CurveRationalFunction.constant(self.curve, other)
            except InvalidField:
                return NotImplemented
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.d == other.d:
            return CurveRationalFunction(self.curve, self.u + other.u, self.v + other.v, self.d)
        return CurveRationalFunction(self.curve,
                                     self.u * other.d + other.u * self.d,
                                     self.v * other.d + other.v * self.d,
                                     self.d * other.d)

    __radd__ = __add__

    def __neg__(self):
        return CurveRationalFunction(self.curve, -self.u, -self.v, self.d)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, FieldElement)):
            scalar = self.curve.spec(other)
            return CurveRationalFunction(self.curve, self.u * scalar, self.v * scalar, self.d)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        f = self.curve.f
        u = self.u * other.u + f * self.v * other.v
        v = self.u * other.v + self.v * other.u
        return CurveRationalFunction(self.curve, u, v, self.d * other.d)

    __rmul__ = __mul__

    def inverse(self) -> 'CurveRationalFunction':
        if self.is_zero:
            raise ZeroDivisionError("The zero function has no inverse")
        norm = self.numerator.norm()
        return CurveRationalFunction(self.curve, self.u * self.d, -self.v * self.d, norm)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, exponent: int):
        if type(exponent) is not int:
            return NotImplemented
        base = self
        if exponent < 0:
            base, exponent = self.inverse(), -exponent
        result = CurveRationalFunction.constant(self.curve, 1)
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def conjugate(self) -> 'CurveRationalFunction':
        """``h∘[−1]``"""
        return CurveRationalFunction(self.curve, self.u, -self.v, self.d)

    def norm(self) -> 'CurveRationalFunction':
        """``h·(h∘[−1]) = (u² − f·v²)/d²``, a function of x alone"""
        return CurveRationalFunction(self.curve, self.numerator.norm(), None, self.d * self.d)

    def base_change(self, spec: FieldSpec) -> 'CurveRationalFunction':
        curve = self.curve.base_change(spec)
        return CurveRationalFunction(curve, *(Polynomial(spec, p.coefficients) for p in (self.u, self.v, self.d)))

    # local behaviour

    def leading_term(self) -> tuple:
        """\
        the leading term of the expansion at 𝒪, read off the degrees

        :return: ``(order at 𝒪, leading coefficient)``
        """
        if self.is_zero:
            raise DegenerateInput("The zero function has no leading term")
        u, v = self.u, self.v
        if v and (not u or 2 * v.degree + 3 > 2 * u.degree):
            exponent, coefficient = -(2 * v.degree + 3), -v.leading
        else:
            exponent, coefficient = -2 * u.degree, u.leading
        return exponent + 2 * self.d.degree, coefficient

    def expand_at_O(self, precision: int) -> LaurentSeries:
        """\
        the Laurent expansion in ``T = −x/y``

        :param precision: number of known terms from the leading one on
        """
        verify.precision(precision)
        xs, ys = self.curve.expand_coordinates(precision)
        numerator = _series(self.u, xs, precision)
        if self.v:
            numerator = numerator + ys * _series(self.v, xs, precision)
        return numerator / _series(self.d, xs, precision)

    def ord_at(self, point: Point) -> int:
        """the order of vanishing at ``point`` (negative at poles)"""
        if self.is_zero:
            raise DegenerateInput("The zero function has no order")
        if point.curve != self.curve:
            raise InvalidCurve.mismatch(self.curve, point.curve)
        if point.is_infinity:
            return self.leading_term()[0]
        x0, y0 = point.x, point.y
        if not y0:
            # uniformizer y; x − e has order 2
            orders = []
            if self.u:
                orders.append(2 * self.u.multiplicity(x0))
            if self.v:
                orders.append(1 + 2 * self.v.multiplicity(x0))
            return min(orders) - 2 * self.d.multiplicity(x0)
        return _affine_order(self.curve, self.u, self.v, x0, y0) - self.d.multiplicity(x0)

    def evaluate(self, point: Point):
        """\
        the value at ``point``

        :return: a field element, or :py:data:`POLE`
        :raises Indeterminate: if numerator and denominator both vanish
        """
        if point.curve != self.curve:
            raise InvalidCurve.mismatch(self.curve, point.curve)
        if point.is_infinity:
            exponent, coefficient = self.leading_term()
            if exponent < 0:
                return POLE
            return coefficient if exponent == 0 else self.curve.spec.zero
        numerator = self.u(point.x) + point.y * self.v(point.x)
        denominator = self.d(point.x)
        if denominator:
            return numerator / denominator
        if numerator:
            return POLE
        raise Indeterminate("{} is 0/0 at {}".format(self, point))

    __call__ = evaluate

    # substitution

    def substitute(self, source: WeierstrassCurve, x_numerator: Polynomial, x_denominator: Polynomial,
                   y_numerator: Polynomial, y_denominator: Polynomial) -> 'CurveRationalFunction':
        """\
        ``h(X, Y)`` on ``source`` for ``X = N(x)/D(x)`` and ``Y = y·S(x)/W(x)``
        """
        degree = max(self.u.degree, self.v.degree, self.d.degree, 0)
        u = self.u.homogenize(x_numerator, x_denominator, degree) * y_denominator
        v = self.v.homogenize(x_numerator, x_denominator, degree) * y_numerator
        d = self.d.homogenize(x_numerator, x_denominator, degree) * y_denominator
        return CurveRationalFunction(source, u, v, d)

    def pullback(self, isogeny) -> 'CurveRationalFunction':
        """\
        ``h∘φ``

        :param isogeny: an :py:class:`isogenies.isogeny.Isogeny` whose target is this function's curve
        """
        if isogeny.target != self.curve:
            raise InvalidCurve.mismatch(isogeny.target, self.curve)
        return self.substitute(isogeny.source, *isogeny.maps)

    # printing

    def format(self) -> str:
        numerator = _format_numerator(self.u, self.v)
        if self.d.degree == 0:
            return numerator
        if len([c for c in self.u.coefficients if c]) + (1 if self.v else 0) > 1:
            numerator = "({})".format(numerator)
        denominator = self.d.format()
        if len([c for c in self.d.coefficients if c]) > 1:
            denominator = "({})".format(denominator)
        return "{} / {}".format(numerator, denominator)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return "<CurveRationalFunction {} on {}>".format(self, self.curve)


class Divisor:
    """\
    A finite formal sum of points; 𝒪 is a point like any other.

    :param multiplicities: map from :py:class:`curves.weierstrass.Point` to integer
    """

    def __init__(self, multiplicities: dict = None):
        self.multiplicities = {point: n for point, n in (multiplicities or {}).items() if n}

    def __getitem__(self, point: Point) -> int:
        return self.multiplicities.get(point, 0)

    def items(self):
        return sorted(self.multiplicities.items(), key=lambda item: item[0].sort_key())

    @property
    def support(self) -> list:
        return [point for point, _ in self.items()]

    @property
    def degree(self) -> int:
        return sum(self.multiplicities.values())

    def point_sum(self, curve: WeierstrassCurve) -> Point:
        """``Σ n_P·P`` in the group of the curve"""
        total = curve.infinity
        for point, n in self.multiplicities.items():
            total = total + n * point
        return total

    def __add__(self, other: 'Divisor') -> 'Divisor':
        total = dict(self.multiplicities)
        for point, n in other.multiplicities.items():
            total[point] = total.get(point, 0) + n
        return Divisor(total)

    def __neg__(self):
        return Divisor({point: -n for point, n in self.multiplicities.items()})

    def __sub__(self, other: 'Divisor') -> 'Divisor':
        return self + (-other)

    def __rmul__(self, n: int) -> 'Divisor':
        return Divisor({point: n * m for point, m in self.multiplicities.items()})

    def __eq__(self, other):
        return isinstance(other, Divisor) and self.multiplicities == other.multiplicities

    def __hash__(self):
        return hash(frozenset(self.multiplicities.items()))

    def __str__(self):
        terms = []
        for point, n in self.items():
            name = "({})".format(point) if point.is_infinity else str(point)
            terms.append(name if n == 1 else '-' + name if n == -1 else "{}{}".format(n, name))
        return join_terms(terms)

    def __repr__(self):
        return "<Divisor {}>".format(self)


# module level operations

def divisor_of(h: CurveRationalFunction) -> Divisor:
    """\
    the divisor of a nonzero function

    :raises ExtensionRequired: if a zero or pole is not defined over the base field
    """
    if h.is_zero:
        raise DegenerateInput("The zero function has no divisor")
    curve = h.curve
    candidates = h.numerator.norm() * h.d
    roots = candidates.roots()
    if sum(candidates.multiplicity(root) for root in roots) != candidates.degree:
        raise ExtensionRequired("Zeros or poles of {} are not rational over {}".format(h, curve.spec),
                                field=curve.spec)
    multiplicities = {curve.infinity: h.ord_at(curve.infinity)}
    for x0 in roots:
        points = curve.lift_x(x0)
        if not points:
            raise ExtensionRequired("Points above x = {} are not rational over {}".format(x0, curve.spec),
                                    field=curve.spec)
        for point in points:
            multiplicities[point] = h.ord_at(point)
    divisor = Divisor(multiplicities)
    logger.debug("div({}) = {}".format(h, divisor))
    return divisor


def sqrt_two_torsion_supported(h: CurveRationalFunction):
    """\
    the square root of a function whose divisor is supported on {𝒪} ∪ E[2]

    Writing ``h = c·∏(x − eᵢ)^kᵢ``, the root is ``√c·∏(x − eᵢ)^(kᵢ/2)`` when all kᵢ are even
    and ``√c·y·∏(x − eᵢ)^((kᵢ−1)/2)`` when all are odd.

    :return: the root (canonical sign of √c), or ``None`` if the parities are mixed,
        h has a y-part, or √c is not in the field
    :raises DegenerateInput: if h is not supported on two-torsion
    :raises ExtensionRequired: if E[2] is not rational
    """
    if h.is_zero:
        raise DegenerateInput("The zero function has no square root")
    curve = h.curve
    if h.v:
        if h.u:
            raise DegenerateInput("{} is not supported on the two-torsion".format(h))
        return None
    points, split = curve.two_torsion()
    if not split:
        raise ExtensionRequired("The two-torsion of {} is not rational".format(curve), field=curve.spec)
    roots = [point.x for point in points]
    x = Polynomial.x(curve.spec)
    exponents = []
    u, d = h.u, h.d
    for e in roots:
        a, b = u.multiplicity(e), d.multiplicity(e)
        u, d = u.exact_div((x - e) ** a), d.exact_div((x - e) ** b)
        exponents.append(a - b)
    if u.degree > 0 or d.degree > 0:
        raise DegenerateInput("{} is not supported on the two-torsion".format(h))
    parities = {k % 2 for k in exponents}
    if len(parities) > 1:
        return None
    scalar = (u.leading / d.leading).sqrt()
    if scalar is None:
        return None
    root = CurveRationalFunction.constant(curve, scalar)
    if parities == {1}:
        root = root * CurveRationalFunction.y(curve)
        exponents = [k - 1 for k in exponents]
    for e, k in zip(roots, exponents):
        root = root * CurveRationalFunction(curve, x - e) ** (k // 2)
    return root


# helpers

def _series(polynomial: Polynomial, xs: LaurentSeries, precision: int) -> LaurentSeries:
    value = polynomial(xs)
    if isinstance(value, FieldElement):
        return LaurentSeries.constant(polynomial.spec, value, precision)
    return value


def _affine_order(curve: WeierstrassCurve, u: Polynomial, v: Polynomial, x0: FieldElement,
                  y0: FieldElement) -> int:
    # uniformizer x − x0 at a point with y0 ≠ 0
    x = Polynomial.x(curve.spec)
    common = min(p.multiplicity(x0) for p in (u, v) if p)
    factor = (x - x0) ** common
    u, v = u // factor, v // factor
    if u(x0) + y0 * v(x0):
        return common
    return common + (u * u - curve.f * v * v).multiplicity(x0)


def _format_numerator(u: Polynomial, v: Polynomial) -> str:
    terms = []
    for power in range(u.degree, -1, -1):
        if u[power]:
            terms.append(term_str(u[power], _monomial('x', power)))
    nonzero = [power for power in range(v.degree + 1) if v[power]]
    if len(nonzero) == 1:
        power = nonzero[0]
        terms.append(term_str(v[power], 'y' + ('*' + _monomial('x', power) if power else '')))
    elif nonzero:
        terms.append("y*({})".format(v.format()))
    return join_terms(terms)


def _monomial(variable: str, power: int) -> str:
    if power == 0:
        return ''
    if power == 1:
        return variable
    return "{}^{}".format(variable, power)
