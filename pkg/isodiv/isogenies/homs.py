# isodiv - Hom Elements
# licensed under the GNU Public License, version 2

"""\
Symbolic labels for isogenies: ``prefix∘[a+bi]``, with an explicit isogeny
``prefix`` (possibly none) applied after a Gaussian integer. Labels sharing a
prefix form a module over Z[i] with coordinates ``(a, b)``, on which the degree
is the quadratic form ``deg(prefix)·(a² + b²)``.

Literals are compositions of factors, the rightmost applied first::

    1+2i
    velu2@(1,0)∘(1+i)
    -i
"""

import logging
from fractions import Fraction

from algebra.field import FieldSpec, GAUSSIAN_RATIONALS
from curves.weierstrass import WeierstrassCurve
from helpers.exceptions import DegenerateInput, InvalidIsogeny, InvalidParameters
from isogenies.isogeny import Isogeny, compose, gaussian, gaussian_label, velu2

logger = logging.getLogger('isodiv.isogenies.homs')

_GAUSSIAN = FieldSpec(GAUSSIAN_RATIONALS)
_VELU = 'velu2@'


class HomElement:
    """\
    :param curve: the source curve
    :param a: real part of the Gaussian factor
    :param b: imaginary part of the Gaussian factor
    :param prefix: explicit isogeny applied after ``[a+bi]``, or ``None``
    """

    __slots__ = ('curve', 'a', 'b', 'prefix')

    def __init__(self, curve: WeierstrassCurve, a: int = 1, b: int = 0, prefix: Isogeny = None):
        if b and not curve.is_cm():
            raise InvalidIsogeny("{} has no complex multiplication by i in this model".format(curve))
        if prefix is not None and prefix.source != curve:
            raise InvalidIsogeny("{} does not start on {}".format(prefix, curve))
        self.curve = curve
        self.a, self.b = a, b
        self.prefix = prefix

    @classmethod
    def parse(cls, text: str, curve: WeierstrassCurve) -> 'HomElement':
        """\
        :raises InvalidParameters: for malformed literals
        :raises InvalidIsogeny: if a factor does not exist on its curve
        """
        factors = [factor.strip() for factor in text.split('∘')]
        if not all(factors):
            raise InvalidParameters.malformed('label', text)
        result = None
        current = curve
        for factor in reversed(factors):
            if factor.startswith(_VELU):
                step = HomElement(current, prefix=velu2(current, _velu_point(current, factor, text)))
            else:
                a, b = _gaussian_parts(factor, text)
                step = HomElement(current, a, b)
            result = step if result is None else step.compose(result)
            current = result.target
        return result

    # structure

    @property
    def target(self) -> WeierstrassCurve:
        return self.curve if self.prefix is None else self.prefix.target

    @property
    def coordinates(self) -> tuple:
        return self.a, self.b

    @property
    def basis(self):
        """the prefix; labels with equal basis can be added"""
        return self.prefix

    @property
    def is_zero(self) -> bool:
        return not self.a and not self.b

    @property
    def is_separable(self) -> bool:
        """\
        whether the label reduces to a separable isogeny

        ``[i]`` pulls the invariant differential back to ``i·ω`` (with the same square root of −1 that
        builds ``[i]``), so ``[a+bi]*ω = (a + b·i)·ω``, which vanishes exactly for inseparable labels.
        Vélu prefixes have degree 2 and never change the answer.
        """
        spec = self.curve.spec
        p = spec.characteristic
        if not p or self.is_zero:
            return not self.is_zero
        if not self.b:
            return self.a % p != 0
        i = spec.sqrt_minus_one()
        if i is None:
            return self.a % p != 0 or self.b % p != 0
        return spec(self.a) + spec(self.b) * i != spec.zero

    @property
    def degree(self) -> int:
        prefix_degree = 1 if self.prefix is None else self.prefix.degree
        return prefix_degree * (self.a * self.a + self.b * self.b)

    def _key(self) -> tuple:
        return self.curve, self.a, self.b, self.prefix

    def __eq__(self, other):
        return isinstance(other, HomElement) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    # arithmetic

    def _check_basis(self, other: 'HomElement'):
        if self.curve != other.curve or self.prefix != other.prefix:
            raise InvalidIsogeny("{} and {} have no common basis".format(self, other))

    def __add__(self, other: 'HomElement') -> 'HomElement':
        if not isinstance(other, HomElement):
            return NotImplemented
        self._check_basis(other)
        return HomElement(self.curve, self.a + other.a, self.b + other.b, self.prefix)

    def __neg__(self) -> 'HomElement':
        return HomElement(self.curve, -self.a, -self.b, self.prefix)

    def __sub__(self, other: 'HomElement') -> 'HomElement':
        if not isinstance(other, HomElement):
            return NotImplemented
        return self + (-other)

    def __rmul__(self, n: int) -> 'HomElement':
        if type(n) is not int:
            return NotImplemented
        return HomElement(self.curve, n * self.a, n * self.b, self.prefix)

    def compose(self, inner: 'HomElement') -> 'HomElement':
        """\
        ``self∘inner``

        :raises InvalidIsogeny: if a non-integer Gaussian factor would have to move past an explicit isogeny
        """
        if inner.target != self.curve:
            raise InvalidIsogeny("Cannot compose {} after {}: {} is not {}"
                                 .format(self, inner, inner.target, self.curve))
        a = self.a * inner.a - self.b * inner.b
        b = self.a * inner.b + self.b * inner.a
        if inner.prefix is None:
            prefix = self.prefix
        elif self.b == 0:
            # [n] commutes with every isogeny
            prefix = inner.prefix if self.prefix is None else compose(self.prefix, inner.prefix)
        else:
            raise InvalidIsogeny("Cannot move [{}] past {}".format(gaussian_label(self.a, self.b), inner.prefix))
        return HomElement(inner.curve, a, b, prefix)

    # realization

    def to_isogeny(self) -> Isogeny:
        """\
        :raises DegenerateInput: for the zero label
        """
        if self.is_zero:
            raise DegenerateInput.zero_label(self)
        isogeny = gaussian(self.curve, self.a, self.b)
        if self.prefix is None:
            return isogeny
        if self.a == 1 and self.b == 0:
            return self.prefix
        return compose(self.prefix, isogeny)

    def __str__(self):
        scalar = gaussian_label(self.a, self.b)
        if self.prefix is None:
            return scalar
        if self.a == 1 and self.b == 0:
            return str(self.prefix)
        if self.b and self.a or scalar.startswith('-'):
            scalar = "({})".format(scalar)
        return "{}∘{}".format(self.prefix, scalar)

    def __repr__(self):
        return "<HomElement {} on {}>".format(self, self.curve)


def _gaussian_parts(factor: str, text: str) -> tuple:
    try:
        value = _GAUSSIAN.parse_element(factor)
    except InvalidParameters:
        raise InvalidParameters.malformed('label', text, "cannot read factor \"{}\"".format(factor))
    a, b = value.components()
    if Fraction(a).denominator != 1 or Fraction(b).denominator != 1:
        raise InvalidParameters.malformed('label', text, "\"{}\" is not a Gaussian integer".format(factor))
    return int(a), int(b)


def _velu_point(curve: WeierstrassCurve, factor: str, text: str):
    body = factor[len(_VELU):].strip()
    if not (body.startswith('(') and body.endswith(')')):
        raise InvalidParameters.malformed('label', text, "expected velu2@(x0,0)")
    parts = body[1:-1].split(',')
    if len(parts) != 2:
        raise InvalidParameters.malformed('label', text, "expected velu2@(x0,0)")
    x0, y0 = (curve.spec.parse_element(part) for part in parts)
    if y0 or curve.f(x0):
        raise InvalidIsogeny("velu2 needs a two-torsion point of {}, got ({}, {})".format(curve, x0, y0))
    return curve.point(x0, y0)
