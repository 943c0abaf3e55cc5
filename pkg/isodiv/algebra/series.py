# isodiv - Truncated Laurent Series
# licensed under the GNU Public License, version 2

"""\
Laurent series in one variable ``T`` with a tracked absolute precision:
a :py:class:`LaurentSeries` is known modulo ``O(T^precision)``.
Every operation propagates the precision it can guarantee, and asking
for a coefficient beyond it raises :py:class:`helpers.exceptions.Indeterminate`.
"""

from fractions import Fraction

from algebra.field import FieldElement, FieldSpec
from algebra.polynomial import join_terms, term_str
from helpers.exceptions import Indeterminate, InvalidField


class LaurentSeries:
    """\
    :param spec: coefficient field
    :param start: exponent of the first stored coefficient
    :param coefficients: coefficients of ``T^start, T^(start+1), ...``
    :param precision: the series is known modulo ``T^precision``
    """

    __slots__ = ('spec', 'start', 'coefficients', 'precision')

    def __init__(self, spec: FieldSpec, start: int, coefficients, precision: int):
        coefficients = [spec(c) for c in coefficients][:max(precision - start, 0)]
        while coefficients and not coefficients[0]:
            coefficients.pop(0)
            start += 1
        while coefficients and not coefficients[-1]:
            coefficients.pop()
        self.spec = spec
        self.start = start if coefficients else precision
        self.coefficients = tuple(coefficients)
        self.precision = precision

    @classmethod
    def variable(cls, spec: FieldSpec, precision: int) -> 'LaurentSeries':
        """the series ``T + O(T^precision)``"""
        return cls(spec, 1, [1], precision)

    @classmethod
    def constant(cls, spec: FieldSpec, value, precision: int) -> 'LaurentSeries':
        return cls(spec, 0, [value], precision)

    @classmethod
    def from_polynomial(cls, polynomial, precision: int) -> 'LaurentSeries':
        return cls(polynomial.spec, 0, polynomial.coefficients, precision)

    # inspection

    @property
    def valuation(self) -> int:
        """order of the first nonzero coefficient; equals ``precision`` if none is known"""
        return self.start

    @property
    def is_zero(self) -> bool:
        """whether no nonzero coefficient is known (the series is zero up to its precision)"""
        return not self.coefficients

    @property
    def leading(self) -> FieldElement:
        if not self.coefficients:
            raise Indeterminate("Leading term of {} is beyond the precision".format(self))
        return self.coefficients[0]

    def leading_term(self) -> tuple:
        """``(valuation, leading coefficient)``"""
        return self.start, self.leading

    def __getitem__(self, exponent: int) -> FieldElement:
        if exponent >= self.precision:
            raise Indeterminate("Coefficient of T^{} is beyond the precision O(T^{})"
                                .format(exponent, self.precision))
        index = exponent - self.start
        if 0 <= index < len(self.coefficients):
            return self.coefficients[index]
        return self.spec.zero

    def truncate(self, precision: int) -> 'LaurentSeries':
        return LaurentSeries(self.spec, self.start, self.coefficients, min(precision, self.precision))

    def __eq__(self, other):
        if isinstance(other, LaurentSeries):
            return (self.spec, self.start, self.coefficients, self.precision) == \
                   (other.spec, other.start, other.coefficients, other.precision)
        return NotImplemented

    def __hash__(self):
        return hash((self.spec, self.start, self.coefficients, self.precision))

    def _coerce(self, other):
        if isinstance(other, LaurentSeries):
            if other.spec != self.spec:
                raise InvalidField.mismatch(self.spec, other.spec)
            return other
        if isinstance(other, (int, Fraction, FieldElement)):
            value = self.spec(other)
            # constants are exact; below precision 1 they vanish in the O-term
            return LaurentSeries(self.spec, 0, [value], max(self.precision, 1))
        return NotImplemented

    # arithmetic

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        precision = min(self.precision, other.precision)
        start = min(self.start, other.start)
        total = [self.spec.zero] * max(precision - start, 0)
        for series in (self, other):
            for k, c in enumerate(series.coefficients):
                index = series.start + k - start
                if index < len(total):
                    total[index] = total[index] + c
        return LaurentSeries(self.spec, start, total, precision)

    __radd__ = __add__

    def __neg__(self):
        return LaurentSeries(self.spec, self.start, [-c for c in self.coefficients], self.precision)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, FieldElement)):
            scalar = self.spec(other)
            if not scalar:
                return LaurentSeries(self.spec, 0, [], self.precision)
            return LaurentSeries(self.spec, self.start, [c * scalar for c in self.coefficients], self.precision)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        precision = min(self.precision + other.start, other.precision + self.start)
        start = self.start + other.start
        product = [self.spec.zero] * max(precision - start, 0)
        for i, c in enumerate(self.coefficients):
            if i >= len(product):
                break
            for j, e in enumerate(other.coefficients[:len(product) - i]):
                product[i + j] = product[i + j] + c * e
        return LaurentSeries(self.spec, start, product, precision)

    __rmul__ = __mul__

    def inverse(self) -> 'LaurentSeries':
        if not self.coefficients:
            raise Indeterminate("Cannot invert {}: no nonzero coefficient is known".format(self))
        relative = self.precision - self.start
        lead_inverse = self.coefficients[0].inverse()
        unit = list(self.coefficients) + [self.spec.zero] * relative
        result = [lead_inverse]
        for n in range(1, relative):
            accumulated = self.spec.zero
            for k in range(1, n + 1):
                accumulated = accumulated + unit[k] * result[n - k]
            result.append(-accumulated * lead_inverse)
        return LaurentSeries(self.spec, -self.start, result, self.precision - 2 * self.start)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, FieldElement)):
            return self * self.spec(other).inverse()
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, exponent: int):
        if type(exponent) is not int:
            return NotImplemented
        base = self
        if exponent < 0:
            base, exponent = self.inverse(), -exponent
        if exponent == 0:
            return LaurentSeries.constant(self.spec, 1, max(self.precision - self.start, 1))
        result = None
        while exponent:
            if exponent & 1:
                result = base if result is None else result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def compose(self, inner: 'LaurentSeries') -> 'LaurentSeries':
        """\
        substitutes ``inner`` for ``T``

        :param inner: a series of positive valuation
        """
        if inner.is_zero or inner.valuation <= 0:
            raise Indeterminate("Can only substitute series of positive valuation, got {}".format(inner))
        precision = self.precision * inner.valuation
        result = LaurentSeries(self.spec, 0, [], precision)
        for k, c in enumerate(self.coefficients):
            result = result + (inner ** (self.start + k)) * c
        return result.truncate(precision)

    # printing

    def __str__(self):
        terms = [term_str(c, _power('T', self.start + k))
                 for k, c in enumerate(self.coefficients) if c]
        terms.append("O({})".format(_power('T', self.precision) or '1'))
        return join_terms(terms)

    def __repr__(self):
        return "<LaurentSeries {} over {}>".format(self, self.spec)


def _power(variable: str, exponent: int) -> str:
    if exponent == 0:
        return ''
    if exponent == 1:
        return variable
    return "{}^{}".format(variable, exponent)
