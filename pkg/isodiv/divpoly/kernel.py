# isodiv - Kernel Symbols and Kernel Functions
# licensed under the GNU Public License, version 2

"""\
A kernel symbol ``(K_φ)`` stands for the divisor ``φ*(𝒪′)`` on the source of φ.
A principal integer combination of them has a unique *kernel function*:
the function with that divisor whose expansion at 𝒪 starts with

    ∏ (a_φ·c_φ)^(n_φ) · T^(...)

where ``a_φ`` is the leading coefficient of ``T′∘φ`` and ``c_φ`` the scale of the
differential the symbol is normalized with (see :py:mod:`divpoly.scaling`).
The product of two kernel functions is the kernel function of the sum.
"""

import logging
from functools import lru_cache

from algebra.polynomial import Polynomial
from curves.curvefunc import CurveRationalFunction
from curves.weierstrass import WeierstrassCurve
from divpoly.scaling import TARGET, DifferentialScaling
from helpers.exceptions import InvalidCurve, InvalidIsogeny, NonPrincipal
from isogenies.isogeny import Isogeny, compose, identity, kernel_sum_point, two_torsion_kernel

logger = logging.getLogger('isodiv.divpoly.kernel')


class KernelSymbol:
    """\
    :param isogeny: φ
    :param frame: the differential on the target of φ: 0 for ω, 1..3 for ωᵢ, ``TARGET`` for ω′
    """

    __slots__ = ('isogeny', 'frame')

    def __init__(self, isogeny: Isogeny, frame=TARGET):
        self.isogeny = isogeny
        self.frame = frame

    def _key(self) -> tuple:
        return self.isogeny, self.frame

    def __eq__(self, other):
        return isinstance(other, KernelSymbol) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __str__(self):
        if self.frame is TARGET:
            return "K[{}]".format(self.isogeny)
        return "K[{}|ω{}]".format(self.isogeny, self.frame or '')

    def __repr__(self):
        return "<KernelSymbol {}>".format(self)


class KernelSymbolSum:
    """\
    A finite integer combination of kernel symbols of isogenies with source ``curve``.

    :param curve: the common source
    :param terms: map from :py:class:`KernelSymbol` to multiplicity
    """

    def __init__(self, curve: WeierstrassCurve, terms: dict = None):
        self.curve = curve
        self.terms = {}
        for symbol, n in (terms or {}).items():
            if symbol.isogeny.source != curve:
                raise InvalidCurve.mismatch(curve, symbol.isogeny.source)
            if n:
                self.terms[symbol] = self.terms.get(symbol, 0) + n

    @classmethod
    def single(cls, isogeny: Isogeny, n: int = 1, frame=TARGET) -> 'KernelSymbolSum':
        return cls(isogeny.source, {KernelSymbol(isogeny, frame): n})

    @classmethod
    def unit(cls, curve: WeierstrassCurve, n: int = 1) -> 'KernelSymbolSum':
        """``n(K₁)``, normalized with ω"""
        return cls(curve, {KernelSymbol(identity(curve), 0): n})

    def items(self) -> list:
        return sorted(self.terms.items(), key=lambda item: str(item[0]))

    @property
    def degree(self) -> int:
        """degree of the image divisor: ``Σ n_φ·deg φ``"""
        return sum(n * symbol.isogeny.degree for symbol, n in self.terms.items())

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other: 'KernelSymbolSum') -> 'KernelSymbolSum':
        if not isinstance(other, KernelSymbolSum):
            return NotImplemented
        if other.curve != self.curve:
            raise InvalidCurve.mismatch(self.curve, other.curve)
        terms = dict(self.terms)
        for symbol, n in other.terms.items():
            terms[symbol] = terms.get(symbol, 0) + n
        return KernelSymbolSum(self.curve, {symbol: n for symbol, n in terms.items() if n})

    def __neg__(self):
        return KernelSymbolSum(self.curve, {symbol: -n for symbol, n in self.terms.items()})

    def __sub__(self, other: 'KernelSymbolSum') -> 'KernelSymbolSum':
        if not isinstance(other, KernelSymbolSum):
            return NotImplemented
        return self + (-other)

    def __rmul__(self, n: int) -> 'KernelSymbolSum':
        if type(n) is not int:
            return NotImplemented
        return KernelSymbolSum(self.curve, {symbol: n * m for symbol, m in self.terms.items() if n * m})

    def __eq__(self, other):
        return isinstance(other, KernelSymbolSum) and self.curve == other.curve and self.terms == other.terms

    def __hash__(self):
        return hash((self.curve, frozenset(self.terms.items())))

    def pullback(self, beta: Isogeny) -> 'KernelSymbolSum':
        """``β*``: each ``(K_γ)`` becomes ``(K_{γ∘β})``, normalized with the same differential"""
        if beta.target != self.curve:
            raise InvalidCurve.mismatch(beta.target, self.curve)
        return KernelSymbolSum(beta.source, {KernelSymbol(compose(symbol.isogeny, beta), symbol.frame): n
                                             for symbol, n in self.terms.items()})

    def kernel_sum(self):
        """the point ``Σ n_φ·P_φ``; the image divisor is principal iff it is 𝒪 and the degree is 0"""
        total = self.curve.infinity
        for symbol, n in self.terms.items():
            total = total + n * kernel_sum_point(symbol.isogeny)
        return total

    def is_principal(self) -> bool:
        return self.degree == 0 and self.kernel_sum().is_infinity

    def __str__(self):
        if not self.terms:
            return '0'
        parts = []
        for symbol, n in self.items():
            sign = '-' if n < 0 else '+'
            parts.append("{} {}{}".format(sign, '' if abs(n) == 1 else "{}*".format(abs(n)), symbol))
        text = ' '.join(parts)
        return text[2:] if text.startswith('+') else '-' + text[2:]

    def __repr__(self):
        return "<KernelSymbolSum {}>".format(self)


class NormalizedFunction:
    """\
    A kernel function together with its symbol sum.

    :param value: the function
    :param symbols: its kernel symbol sum
    """

    __slots__ = ('value', 'symbols', '_lead')

    def __init__(self, value: CurveRationalFunction, symbols: KernelSymbolSum):
        self.value = value
        self.symbols = symbols
        self._lead = None

    @property
    def lead(self) -> tuple:
        """``(order at 𝒪, leading coefficient)``"""
        if self._lead is None:
            self._lead = self.value.leading_term()
        return self._lead

    @property
    def curve(self) -> WeierstrassCurve:
        return self.value.curve

    def __mul__(self, other: 'NormalizedFunction') -> 'NormalizedFunction':
        if not isinstance(other, NormalizedFunction):
            return NotImplemented
        return NormalizedFunction(self.value * other.value, self.symbols + other.symbols)

    def __truediv__(self, other: 'NormalizedFunction') -> 'NormalizedFunction':
        if not isinstance(other, NormalizedFunction):
            return NotImplemented
        return NormalizedFunction(self.value / other.value, self.symbols - other.symbols)

    def __pow__(self, exponent: int) -> 'NormalizedFunction':
        if type(exponent) is not int:
            return NotImplemented
        return NormalizedFunction(self.value ** exponent, exponent * self.symbols)

    def __eq__(self, other):
        if isinstance(other, NormalizedFunction):
            return self.value == other.value
        return self.value == other

    def __hash__(self):
        return hash(self.value)

    def __str__(self):
        return self.value.format()

    def __repr__(self):
        return "<NormalizedFunction {} for {}>".format(self, self.symbols)


def expected_lead(symbols: KernelSymbolSum, scaling: DifferentialScaling):
    """``∏ (a_φ·c_φ)^(n_φ)``"""
    lead = symbols.curve.spec.one
    for symbol, n in symbols.terms.items():
        isogeny = symbol.isogeny
        factor = isogeny.lead * scaling.frame_scale(symbol.frame, isogeny.target)
        lead = lead * factor ** n
    return lead


def kernel_function(symbols: KernelSymbolSum, scaling: DifferentialScaling) -> NormalizedFunction:
    """\
    the kernel function of a principal symbol sum

    :raises NonPrincipal: if the image divisor is not principal
    """
    curve = symbols.curve
    point = symbols.kernel_sum()
    if symbols.degree != 0 or not point.is_infinity:
        raise NonPrincipal("{} is not principal: degree {}, kernel sum {}".format(symbols, symbols.degree, point),
                           kernel_sum=point, degree=symbols.degree)
    numerator = Polynomial.constant(curve.spec, 1)
    denominator = Polynomial.constant(curve.spec, 1)
    two_torsion = {}
    for symbol, n in symbols.terms.items():
        pairs, common = _kernel_parts(symbol.isogeny)
        if n > 0:
            numerator = numerator * pairs ** n
        else:
            denominator = denominator * pairs ** -n
        if common.degree > 0:
            two_torsion[common] = two_torsion.get(common, 0) + n
    value = _two_torsion_function(curve, two_torsion, symbols)
    value = value * CurveRationalFunction(curve, numerator, None, denominator)
    target = expected_lead(symbols, scaling)
    _, coefficient = value.leading_term()
    result = NormalizedFunction(value * (target / coefficient), symbols)
    logger.debug("Kernel function of {}: {}".format(symbols, result))
    return result


@lru_cache(maxsize=1024)
def _kernel_parts(isogeny: Isogeny) -> tuple:
    """``(√(D/g), g)`` with g the two-torsion part of the kernel polynomial D"""
    common = two_torsion_kernel(isogeny)
    pairs = (isogeny.D // common).sqrt()
    if pairs is None:
        raise InvalidIsogeny("Kernel polynomial of {} is not a square away from E[2]".format(isogeny))
    return pairs, common


def _two_torsion_function(curve: WeierstrassCurve, exponents: dict, symbols: KernelSymbolSum):
    # exponents are keyed by the monic factors x − e and f of the cubic
    f = curve.f
    x = Polynomial.x(curve.spec)
    whole = exponents.pop(f, 0)
    linear = {-factor[0]: n for factor, n in exponents.items()}
    roots = curve.two_torsion_roots()
    if len(roots) == 3 and all(linear.get(e, 0) % 2 for e in roots):
        whole += 1
        linear = {e: linear.get(e, 0) - 1 for e in roots}
    if any(n % 2 for n in linear.values()):
        raise NonPrincipal("{} has mixed two-torsion parities".format(symbols),
                           kernel_sum=symbols.kernel_sum(), degree=symbols.degree)
    value = CurveRationalFunction.constant(curve, 1)
    if whole % 2:
        value = CurveRationalFunction.y(curve)
        whole -= 1
    value = value * CurveRationalFunction(curve, f) ** (whole // 2)
    for e, n in linear.items():
        value = value * CurveRationalFunction(curve, x - e) ** (n // 2)
    return value
