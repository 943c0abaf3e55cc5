# isodiv - Univariate Polynomials
# licensed under the GNU Public License, version 2

"""\
Dense univariate polynomials over a :py:class:`algebra.field.FieldSpec`.

The polynomial ``c_0 + c_1 x + ... + c_n x^n`` is stored as the tuple
``(c_0, ..., c_n)`` of :py:class:`algebra.field.FieldElement` with ``c_n != 0``;
the zero polynomial is the empty tuple and has degree −1.
The operators ``+ - * // % ** divmod`` are overloaded, scalars are accepted
as operands, and :py:func:`gcd` returns monic results.
"""

import logging
from fractions import Fraction

import sympy

from algebra.expression import evaluate
from algebra.field import (FieldElement, FieldSpec, GAUSSIAN_RATIONALS, PRIME_FIELD, PRIME_FIELD_SQUARED,
                           RATIONALS)
from helpers.exceptions import InvalidField, InvalidParameters

logger = logging.getLogger('isodiv.algebra.polynomial')


class Polynomial:
    """\
    :param spec: coefficient field
    :param coefficients: constant term first; ints, fractions and elements are accepted
    """

    __slots__ = ('spec', 'coefficients')

    def __init__(self, spec: FieldSpec, coefficients=()):
        self.spec = spec
        self.coefficients = _strip([spec(c) for c in coefficients])

    @classmethod
    def _make(cls, spec: FieldSpec, coefficients: list) -> 'Polynomial':
        poly = cls.__new__(cls)
        poly.spec = spec
        poly.coefficients = _strip(coefficients)
        return poly

    @classmethod
    def x(cls, spec: FieldSpec) -> 'Polynomial':
        return cls._make(spec, [spec.zero, spec.one])

    @classmethod
    def constant(cls, spec: FieldSpec, value) -> 'Polynomial':
        return cls._make(spec, [spec(value)])

    @classmethod
    def monomial(cls, spec: FieldSpec, value, power: int) -> 'Polynomial':
        return cls._make(spec, [spec.zero] * power + [spec(value)])

    @classmethod
    def from_roots(cls, spec: FieldSpec, roots) -> 'Polynomial':
        """the monic polynomial ∏(x − r)"""
        result = cls.constant(spec, 1)
        for root in roots:
            result = result * cls._make(spec, [-spec(root), spec.one])
        return result

    @classmethod
    def parse(cls, spec: FieldSpec, text: str, variable: str = 'x') -> 'Polynomial':
        names = spec.literal_names()
        names[variable] = cls.x(spec)
        value = evaluate(text, spec, names)
        if isinstance(value, FieldElement):
            return cls.constant(spec, value)
        if not isinstance(value, Polynomial):
            raise InvalidParameters.malformed('polynomial', text)
        return value

    # basic properties

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def leading(self) -> FieldElement:
        return self.coefficients[-1] if self.coefficients else self.spec.zero

    def __getitem__(self, power: int) -> FieldElement:
        if 0 <= power < len(self.coefficients):
            return self.coefficients[power]
        return self.spec.zero

    def __bool__(self):
        return bool(self.coefficients)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.spec == other.spec and self.coefficients == other.coefficients
        if isinstance(other, (int, Fraction, FieldElement)):
            return self.coefficients == _strip([self.spec(other)])
        return NotImplemented

    def __hash__(self):
        return hash((self.spec, self.coefficients))

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.spec != self.spec:
                raise InvalidField.mismatch(self.spec, other.spec)
            return other
        try:
            return Polynomial._make(self.spec, [self.spec(other)])
        except InvalidField:
            return NotImplemented

    # ring operations

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        result = list(a)
        for k, c in enumerate(b):
            result[k] = result[k] + c
        return Polynomial._make(self.spec, result)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._make(self.spec, [-c for c in self.coefficients])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (FieldElement, int)):
            scalar = self.spec(other)
            return Polynomial._make(self.spec, [c * scalar for c in self.coefficients])
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return Polynomial._make(self.spec, [])
        result = [self.spec.zero] * (len(a) + len(b) - 1)
        for i, c in enumerate(a):
            if not c:
                continue
            for j, e in enumerate(b):
                result[i + j] = result[i + j] + c * e
        return Polynomial._make(self.spec, result)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if type(exponent) is not int or exponent < 0:
            return NotImplemented
        result = Polynomial.constant(self.spec, 1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __divmod__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        remainder = list(self.coefficients)
        shift = len(remainder) - len(other.coefficients)
        if shift < 0:
            return Polynomial._make(self.spec, []), self
        lead_inverse = other.leading.inverse()
        quotient = [self.spec.zero] * (shift + 1)
        divisor = other.coefficients
        for k in range(shift, -1, -1):
            factor = remainder[k + len(divisor) - 1] * lead_inverse
            quotient[k] = factor
            if factor:
                for j, c in enumerate(divisor):
                    remainder[k + j] = remainder[k + j] - factor * c
        return Polynomial._make(self.spec, quotient), Polynomial._make(self.spec, remainder[:len(divisor) - 1])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other) -> 'Polynomial':
        """quotient of a division that must leave no remainder"""
        quotient, remainder = divmod(self, other)
        if remainder:
            raise ArithmeticError("{} is not divisible by {}".format(self, other))
        return quotient

    def divides(self, other: 'Polynomial') -> bool:
        return not other % self

    # derived operations

    def monic(self) -> 'Polynomial':
        if not self:
            return self
        return self * self.leading.inverse()

    def derivative(self) -> 'Polynomial':
        return Polynomial._make(self.spec, [c * k for k, c in enumerate(self.coefficients)][1:])

    def __call__(self, value):
        """Horner evaluation at a field element or at any ring object (polynomial, series, function)"""
        if isinstance(value, (int, Fraction)):
            value = self.spec(value)
        if not self.coefficients:
            return self.spec.zero if isinstance(value, FieldElement) else value * self.spec.zero
        result = self.coefficients[-1]
        for c in reversed(self.coefficients[:-1]):
            result = result * value + c
        return result

    def compose(self, inner: 'Polynomial') -> 'Polynomial':
        result = self(inner)
        if isinstance(result, FieldElement):
            return Polynomial.constant(self.spec, result)
        return result

    def homogenize(self, numerator: 'Polynomial', denominator: 'Polynomial', degree: int = None) -> 'Polynomial':
        """\
        the numerator of ``self(numerator/denominator)`` over ``denominator^degree``,
        i.e. Σ c_k N^k D^(degree−k)

        :param degree: defaults to the degree of ``self``; may be larger
        """
        if degree is None:
            degree = self.degree
        result = Polynomial._make(self.spec, [])
        numerator_power = Polynomial.constant(self.spec, 1)
        denominator_powers = [Polynomial.constant(self.spec, 1)]
        for _ in range(degree):
            denominator_powers.append(denominator_powers[-1] * denominator)
        for k, c in enumerate(self.coefficients):
            if c:
                result = result + numerator_power * denominator_powers[degree - k] * c
            numerator_power = numerator_power * numerator
        return result

    def multiplicity(self, root: FieldElement) -> int:
        """how often ``x − root`` divides ``self`` (which must be nonzero)"""
        if not self:
            raise ZeroDivisionError("the zero polynomial vanishes to infinite order")
        factor = Polynomial._make(self.spec, [-self.spec(root), self.spec.one])
        count, rest = 0, self
        while True:
            quotient, remainder = divmod(rest, factor)
            if remainder:
                return count
            count, rest = count + 1, quotient

    def sqrt(self):
        """\
        the square root with the canonical sign of its leading coefficient,
        or ``None`` if ``self`` is not a perfect square
        """
        if not self:
            return self
        if self.degree % 2:
            return None
        lead = self.leading.sqrt()
        if lead is None:
            return None
        n = self.degree // 2
        # solve for the root from the top coefficient down
        root = [self.spec.zero] * (n + 1)
        root[n] = lead
        twice_lead = lead * 2
        for k in range(n - 1, -1, -1):
            target = self.coefficients[n + k]
            accumulated = self.spec.zero
            for j in range(k + 1, n):
                accumulated = accumulated + root[j] * root[n + k - j]
            root[k] = (target - accumulated) / twice_lead
        candidate = Polynomial._make(self.spec, root)
        return candidate if candidate * candidate == self else None

    def roots(self) -> list:
        """distinct roots in the coefficient field, sorted by the fixed element ordering"""
        if self.degree < 1:
            return []
        found = {root for root in _field_roots(self)}
        return sorted(found, key=FieldElement.sort_key)

    # printing

    def format(self, variable: str = 'x') -> str:
        if not self.coefficients:
            return '0'
        terms = []
        for power in range(self.degree, -1, -1):
            c = self.coefficients[power]
            if c:
                terms.append(term_str(c, _monomial(variable, power)))
        return join_terms(terms)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return "<Polynomial {} over {}>".format(self, self.spec)


def gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """monic greatest common divisor (zero only for two zero inputs)"""
    while b:
        a, b = b, a % b
    return a.monic()


def _strip(coefficients: list) -> tuple:
    while coefficients and not coefficients[-1]:
        coefficients.pop()
    return tuple(coefficients)


def _monomial(variable: str, power: int) -> str:
    if power == 0:
        return ''
    if power == 1:
        return variable
    return "{}^{}".format(variable, power)


def term_str(coefficient: FieldElement, monomial: str) -> str:
    """one printed term ``c*m`` with the literal syntax of the coefficient field"""
    text = str(coefficient)
    if coefficient.is_compound:
        text = "({})".format(text)
    if not monomial:
        return text
    if coefficient.is_one:
        return monomial
    if not coefficient.spec.is_finite and coefficient == -1:
        return '-' + monomial
    return "{}*{}".format(text, monomial)


def join_terms(terms: list) -> str:
    if not terms:
        return '0'
    text = terms[0]
    for term in terms[1:]:
        if term.startswith('-'):
            text += " - " + term[1:]
        else:
            text += " + " + term
    return text


# root finding

def _to_sympy(poly: Polynomial, symbol):
    spec = poly.spec
    coefficients = list(reversed(poly.coefficients))
    if spec.kind == PRIME_FIELD:
        return sympy.Poly([int(c.a) for c in coefficients], symbol, modulus=spec.modulus)
    if spec.kind == RATIONALS:
        return sympy.Poly([sympy.Rational(c.a.numerator, c.a.denominator) for c in coefficients], symbol,
                          domain='QQ')
    if spec.kind == GAUSSIAN_RATIONALS:
        return sympy.Poly([sympy.Rational(c.a.numerator, c.a.denominator)
                           + sympy.I * sympy.Rational(c.b.numerator, c.b.denominator) for c in coefficients],
                          symbol, extension=sympy.I)
    raise InvalidField("sympy factorisation is not used for {}".format(spec))


def _from_sympy(spec: FieldSpec, value) -> FieldElement:
    if spec.kind in (PRIME_FIELD, PRIME_FIELD_SQUARED):
        return spec(int(value))
    real, imaginary = sympy.re(value), sympy.im(value)
    return spec.element(_fraction(real), _fraction(imaginary))


def _fraction(value):
    value = sympy.Rational(value)
    return Fraction(int(value.p), int(value.q))


def _linear_roots(spec: FieldSpec, sympy_poly) -> list:
    roots = []
    _, factors = sympy_poly.factor_list()
    for factor, _ in factors:
        if factor.degree() == 1:
            leading, constant = factor.all_coeffs()
            roots.append(-_from_sympy(spec, constant) / _from_sympy(spec, leading))
    return roots


def _field_roots(poly: Polynomial) -> list:
    spec = poly.spec
    symbol = sympy.Symbol('x')
    if spec.kind != PRIME_FIELD_SQUARED:
        return _linear_roots(spec, _to_sympy(poly, symbol))

    if all(not c.b for c in poly.coefficients):
        base = spec.base_field()
        base_poly = Polynomial(base, [c.a for c in poly.coefficients])
        roots = []
        _, factors = _to_sympy(base_poly, symbol).factor_list()
        for factor, _ in factors:
            coefficients = [spec(int(c)) for c in factor.all_coeffs()]
            if len(coefficients) == 2:
                roots.append(-coefficients[1] / coefficients[0])
            elif len(coefficients) == 3:
                # irreducible quadratics split over F_{p²}
                a, b, c = coefficients
                discriminant_root = (b * b - a * c * 4).sqrt()
                roots.extend((-b + sign * discriminant_root) / (a * 2) for sign in (1, -1))
        return roots

    logger.debug("Searching roots of {} over {} exhaustively".format(poly, spec))
    return [candidate for candidate in spec.elements() if not poly(candidate)]
