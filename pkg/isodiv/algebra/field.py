# isodiv - Exact Fields
# licensed under the GNU Public License, version 2

"""\
Exact scalars. A :py:class:`FieldSpec` describes one of

    - the rationals ``Q``
    - the Gaussian rationals ``Q(i)``
    - a prime field ``Fp:<p>`` (p odd)
    - the quadratic extension ``Fp2:<p>`` = F_p(s), s² = d for the least non-residue d

and produces :py:class:`FieldElement` objects. Every element is stored as a pair
``a + b·g`` where ``g`` is the adjoined generator (``i`` resp. ``s``); for ``Q`` and
``Fp`` the second component is always zero.
"""

import logging
from fractions import Fraction
from math import gcd, isqrt

import sympy
from sympy.ntheory.residue_ntheory import nthroot_mod, sqrt_mod

from algebra.expression import evaluate
from helpers import verify
from helpers.exceptions import InvalidField, InvalidParameters

logger = logging.getLogger('isodiv.algebra.field')

RATIONALS = 'Q'
GAUSSIAN_RATIONALS = 'Q(i)'
PRIME_FIELD = 'Fp'
PRIME_FIELD_SQUARED = 'Fp2'

#: above this order the F_{p²} root search gives up
BRUTE_FORCE_LIMIT = 1 << 16


class FieldSpec:
    """\
    Immutable description of a field. Calling the spec converts integers,
    fractions and elements of subfields into elements of this field:

    >>> F = FieldSpec.parse('Fp:11')
    >>> F(3).sqrt()
    5

    :param kind: one of ``'Q'``, ``'Q(i)'``, ``'Fp'``, ``'Fp2'``
    :param modulus: the characteristic for the finite kinds
    """

    __slots__ = ('kind', 'modulus', 'd')

    def __init__(self, kind: str, modulus: int = None):
        if kind in (RATIONALS, GAUSSIAN_RATIONALS):
            if modulus not in (None, 0):
                raise InvalidField("{} takes no modulus".format(kind))
            modulus = 0
            d = -1
        elif kind in (PRIME_FIELD, PRIME_FIELD_SQUARED):
            if modulus == 2:
                raise InvalidField("Characteristic 2 is not supported")
            try:
                verify.odd_prime(modulus, param_name='modulus')
            except InvalidParameters as error:
                raise InvalidField(error.value)
            d = _least_nonresidue(modulus) if kind == PRIME_FIELD_SQUARED else 0
        else:
            raise InvalidField("Unknown field kind \"{}\"".format(kind))

        self.kind = kind
        self.modulus = modulus
        self.d = d

    @classmethod
    def parse(cls, text: str) -> 'FieldSpec':
        """parses the field literals ``Q``, ``Q(i)``, ``Fp:<p>`` and ``Fp2:<p>``"""
        literal = text.replace(' ', '')
        if literal in (RATIONALS, GAUSSIAN_RATIONALS):
            return cls(literal)
        kind, _, modulus = literal.partition(':')
        if kind in (PRIME_FIELD, PRIME_FIELD_SQUARED) and modulus.isdigit():
            return cls(kind, int(modulus))
        raise InvalidParameters.malformed('field', text, "expected Q, Q(i) or Fp:<prime>")

    def __str__(self):
        if self.modulus:
            return "{}:{}".format(self.kind, self.modulus)
        return self.kind

    def __repr__(self):
        return "FieldSpec({})".format(self)

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and (self.kind, self.modulus) == (other.kind, other.modulus)

    def __hash__(self):
        return hash((self.kind, self.modulus))

    @property
    def characteristic(self) -> int:
        return self.modulus

    @property
    def is_finite(self) -> bool:
        return self.modulus != 0

    @property
    def order(self) -> int:
        """number of elements (finite fields only)"""
        if self.kind == PRIME_FIELD:
            return self.modulus
        if self.kind == PRIME_FIELD_SQUARED:
            return self.modulus ** 2
        raise InvalidField("{} is infinite".format(self))

    @property
    def generator_name(self):
        """name of the adjoined square root in literals: ``i``, ``s`` or ``None``"""
        return {GAUSSIAN_RATIONALS: 'i', PRIME_FIELD_SQUARED: 's'}.get(self.kind)

    # construction

    def element(self, a, b=0) -> 'FieldElement':
        """builds ``a + b·g`` from integer/fraction components"""
        if self.modulus:
            if isinstance(a, Fraction):
                a = a.numerator * pow(a.denominator, -1, self.modulus)
            if isinstance(b, Fraction):
                b = b.numerator * pow(b.denominator, -1, self.modulus)
            if b % self.modulus and self.kind == PRIME_FIELD:
                raise InvalidField("{} has no adjoined generator".format(self))
            return FieldElement(self, a % self.modulus, b % self.modulus)
        if b and self.kind == RATIONALS:
            raise InvalidField("{} has no imaginary unit".format(self))
        return FieldElement(self, Fraction(a), Fraction(b))

    def __call__(self, value) -> 'FieldElement':
        if isinstance(value, FieldElement):
            return self.coerce(value)
        if isinstance(value, (int, Fraction)):
            return self.element(value)
        raise InvalidField("Cannot convert {!r} into {}".format(value, self))

    @property
    def zero(self) -> 'FieldElement':
        return self.element(0)

    @property
    def one(self) -> 'FieldElement':
        return self.element(1)

    def generator(self) -> 'FieldElement':
        """the adjoined square root ``i`` (Q(i)) or ``s`` (F_{p²})"""
        if self.generator_name is None:
            raise InvalidField("{} has no adjoined generator".format(self))
        return self.element(0, 1)

    def sqrt_minus_one(self):
        """\
        a fixed square root of −1, or ``None`` if the field has none

        :return: ``i`` for Q(i), the canonical root for F_p with p ≡ 1 (mod 4)
        """
        if self.kind == GAUSSIAN_RATIONALS:
            return self.generator()
        if self.kind == RATIONALS:
            return None
        if self.kind == PRIME_FIELD_SQUARED and self.d == self.modulus - 1:
            return self.generator()
        return self(-1).sqrt()

    def literal_names(self) -> dict:
        """names usable in literals of this field: ``i`` when −1 is a square, ``s`` over F_{p²}"""
        names = {'i': self.sqrt_minus_one()}
        if self.kind == PRIME_FIELD_SQUARED:
            names['s'] = self.generator()
        return names

    def parse_element(self, text: str) -> 'FieldElement':
        """parses literals like ``-1/5``, ``2i/5``, ``1+2i`` or ``3+5s``"""
        value = evaluate(str(text), self, self.literal_names())
        if not isinstance(value, FieldElement):
            raise InvalidParameters.malformed('field element', text)
        return value

    def contains(self, other: 'FieldSpec') -> bool:
        """whether ``other`` embeds into this field"""
        if self == other:
            return True
        if self.kind == GAUSSIAN_RATIONALS:
            return other.kind == RATIONALS
        if self.kind == PRIME_FIELD_SQUARED:
            return other.kind == PRIME_FIELD and other.modulus == self.modulus
        return False

    def coerce(self, value: 'FieldElement') -> 'FieldElement':
        """embeds an element of a subfield"""
        if value.spec == self:
            return value
        if not self.contains(value.spec):
            raise InvalidField.mismatch(value.spec, self)
        return self.element(value.a, value.b)

    def quadratic_extension(self) -> 'FieldSpec':
        """F_p ↦ F_{p²}; the only extension this package constructs"""
        if self.kind != PRIME_FIELD:
            raise InvalidField("No quadratic extension is provided for {}".format(self))
        return FieldSpec(PRIME_FIELD_SQUARED, self.modulus)

    def base_field(self) -> 'FieldSpec':
        """the prime subfield of F_{p²}; every other field is its own base"""
        if self.kind == PRIME_FIELD_SQUARED:
            return FieldSpec(PRIME_FIELD, self.modulus)
        return self

    def elements(self):
        """iterates over all elements of a small finite field"""
        if not self.is_finite or self.order > BRUTE_FORCE_LIMIT:
            raise InvalidField("Refusing to enumerate {}".format(self))
        width = self.modulus if self.kind == PRIME_FIELD_SQUARED else 1
        for b in range(width):
            for a in range(self.modulus):
                yield FieldElement(self, a, b)

    def random(self, rng, height: int = 9) -> 'FieldElement':
        """a random element; over Q and Q(i) with numerators and denominators below ``height``"""
        if self.modulus:
            b = rng.randrange(self.modulus) if self.kind == PRIME_FIELD_SQUARED else 0
            return self.element(rng.randrange(self.modulus), b)
        a = Fraction(rng.randint(-height, height), rng.randint(1, height))
        b = Fraction(rng.randint(-height, height), rng.randint(1, height)) if self.kind == GAUSSIAN_RATIONALS else 0
        return self.element(a, b)


class FieldElement:
    """\
    An exact scalar ``a + b·g`` of a :py:class:`FieldSpec`. Immutable.
    Integers and fractions are accepted as the other operand of every operator.
    """

    __slots__ = ('spec', 'a', 'b')

    def __init__(self, spec: FieldSpec, a, b):
        self.spec = spec
        self.a = a
        self.b = b

    # coercion helpers

    def _common(self, other):
        """both operands in the larger of the two fields, or ``NotImplemented``"""
        if isinstance(other, FieldElement):
            if other.spec == self.spec:
                return self, other
            if self.spec.contains(other.spec):
                return self, self.spec.coerce(other)
            if other.spec.contains(self.spec):
                return other.spec.coerce(self), other
            raise InvalidField.mismatch(self.spec, other.spec)
        if isinstance(other, (int, Fraction)):
            return self, self.spec.element(other)
        return NotImplemented

    def _new(self, a, b) -> 'FieldElement':
        p = self.spec.modulus
        if p:
            return FieldElement(self.spec, a % p, b % p)
        return FieldElement(self.spec, a, b)

    # arithmetic

    def __add__(self, other):
        pair = self._common(other)
        if pair is NotImplemented:
            return pair
        left, right = pair
        return left._new(left.a + right.a, left.b + right.b)

    __radd__ = __add__

    def __neg__(self):
        return self._new(-self.a, -self.b)

    def __sub__(self, other):
        pair = self._common(other)
        if pair is NotImplemented:
            return pair
        left, right = pair
        return left._new(left.a - right.a, left.b - right.b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        pair = self._common(other)
        if pair is NotImplemented:
            return pair
        left, right = pair
        if not (left.b or right.b):
            return left._new(left.a * right.a, 0)
        d = left.spec.d
        return left._new(left.a * right.a + d * left.b * right.b,
                         left.a * right.b + left.b * right.a)

    __rmul__ = __mul__

    def inverse(self) -> 'FieldElement':
        if not self:
            raise ZeroDivisionError("division by zero in {}".format(self.spec))
        p = self.spec.modulus
        norm = self.a * self.a - self.spec.d * self.b * self.b
        if p:
            scale = pow(norm % p, -1, p)
            return self._new(self.a * scale, -self.b * scale)
        return self._new(self.a / norm, -self.b / norm)

    def __truediv__(self, other):
        pair = self._common(other)
        if pair is NotImplemented:
            return pair
        left, right = pair
        return left * right.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, exponent: int):
        if type(exponent) is not int:
            return NotImplemented
        base = self
        if exponent < 0:
            base, exponent = self.inverse(), -exponent
        if not base.b and base.spec.modulus:
            return base._new(pow(base.a, exponent, base.spec.modulus), 0)
        result = base.spec.one
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # comparison

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.spec.element(other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        if other.spec != self.spec:
            if self.spec.contains(other.spec):
                other = self.spec.coerce(other)
            elif other.spec.contains(self.spec):
                return other == self
            else:
                return False
        return self.a == other.a and self.b == other.b

    def __hash__(self):
        if not self.b:
            return hash(self.a)
        return hash((self.a, self.b))

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    @property
    def is_one(self) -> bool:
        return self.a == 1 and not self.b

    def conjugate(self) -> 'FieldElement':
        return self._new(self.a, -self.b)

    def components(self) -> tuple:
        return self.a, self.b

    def is_integral(self) -> bool:
        """whether both components are (rational) integers; always true over finite fields"""
        if self.spec.modulus:
            return True
        return self.a.denominator == 1 and self.b.denominator == 1

    def sort_key(self) -> tuple:
        """\
        key of the fixed ordering used for two-torsion points:
        0, 1, −1, 2, −2, … over Q and Q(i); residue order over finite fields
        """
        if self.spec.modulus:
            return self.a, self.b
        return abs(self.a), self.a < 0, abs(self.b), self.b < 0

    def canonical_sign(self) -> 'FieldElement':
        """\
        picks between ``self`` and ``-self``: the one whose first nonzero
        rational component is positive, resp. the smaller residue
        """
        first = self.a if self.a else self.b
        p = self.spec.modulus
        if p:
            return self if first <= p - first else -self
        return self if first >= 0 else -self

    # roots

    def sqrt(self):
        """\
        :return: a square root with the canonical sign (see :py:meth:`canonical_sign`),
            or ``None`` if there is none in the field
        """
        if not self:
            return self
        kind = self.spec.kind
        if kind == RATIONALS:
            root = _rational_sqrt(self.a)
            return None if root is None else self._new(root, 0)
        if kind == GAUSSIAN_RATIONALS:
            return _gaussian_sqrt(self)
        if kind == PRIME_FIELD:
            root = sqrt_mod(self.a, self.spec.modulus)
            return None if root is None else self._new(root, 0).canonical_sign()
        return _extension_sqrt(self)

    def is_square(self) -> bool:
        return self.sqrt() is not None

    def nth_root(self, n: int):
        """\
        an n-th root, or ``None`` if there is none in the field.
        Over finite fields the smallest root (by :py:meth:`sort_key`) is returned.

        :param n: positive integer
        """
        verify.positive_integer(n, param_name='n')
        if n == 1 or not self:
            return self
        if n == 2:
            return self.sqrt()
        kind = self.spec.kind
        if kind == PRIME_FIELD:
            roots = nthroot_mod(self.a, n, self.spec.modulus, all_roots=True)
            return self._new(min(roots), 0) if roots else None
        if kind == PRIME_FIELD_SQUARED:
            return _extension_nth_root(self, n)
        if not self.b:
            root = _rational_nth_root(self.a, n)
            return None if root is None else self._new(root, 0)
        if not self.a and n % 2:
            # (r·i)^n = ±r^n·i for odd n
            sign = 1 if n % 4 == 1 else -1
            root = _rational_nth_root(sign * self.b, n)
            return None if root is None else self._new(0, root)
        return None

    # printing

    def __str__(self):
        name = self.spec.generator_name
        if not self.b or name is None:
            return str(self.a)
        imaginary = _imaginary_str(self.b, name)
        if not self.a:
            return imaginary
        if imaginary.startswith('-'):
            return "{}{}".format(self.a, imaginary)
        return "{}+{}".format(self.a, imaginary)

    def __repr__(self):
        return "<{} in {}>".format(self, self.spec)

    @property
    def is_compound(self) -> bool:
        """whether the printed form has two parts and needs parentheses inside products"""
        return bool(self.a) and bool(self.b) and self.spec.generator_name is not None


def _imaginary_str(b, name: str) -> str:
    if isinstance(b, Fraction) and b.denominator != 1:
        numerator = b.numerator
        head = {1: name, -1: '-' + name}.get(numerator, "{}{}".format(numerator, name))
        return "{}/{}".format(head, b.denominator)
    return {1: name, -1: '-' + name}.get(b, "{}{}".format(b, name))


def _least_nonresidue(p: int) -> int:
    if p % 4 == 3:
        return p - 1
    candidate = 2
    while pow(candidate, (p - 1) // 2, p) == 1:
        candidate += 1
    return candidate


def _rational_sqrt(value: Fraction):
    if value < 0:
        return None
    numerator, denominator = isqrt(value.numerator), isqrt(value.denominator)
    if numerator * numerator != value.numerator or denominator * denominator != value.denominator:
        return None
    return Fraction(numerator, denominator)


def _rational_nth_root(value: Fraction, n: int):
    if value < 0 and n % 2 == 0:
        return None
    sign = -1 if value < 0 else 1
    numerator, exact_numerator = sympy.integer_nthroot(abs(value.numerator), n)
    denominator, exact_denominator = sympy.integer_nthroot(value.denominator, n)
    if not (exact_numerator and exact_denominator):
        return None
    return sign * Fraction(int(numerator), int(denominator))


def _gaussian_sqrt(z: FieldElement):
    a, b = z.a, z.b
    if not b:
        if a > 0:
            root = _rational_sqrt(a)
            return None if root is None else z._new(root, 0)
        root = _rational_sqrt(-a)
        return None if root is None else z._new(0, root)
    modulus = _rational_sqrt(a * a + b * b)
    if modulus is None:
        return None
    real = _rational_sqrt((a + modulus) / 2)
    if real is None or not real:
        return None
    return z._new(real, b / (2 * real))


def _extension_sqrt(z: FieldElement):
    p, d = z.spec.modulus, z.spec.d
    if not z.b:
        root = sqrt_mod(z.a, p)
        if root is not None:
            return z._new(root, 0).canonical_sign()
        root = sqrt_mod(z.a * pow(d, -1, p) % p, p)
        return z._new(0, root).canonical_sign()
    norm = (z.a * z.a - d * z.b * z.b) % p
    norm_root = sqrt_mod(norm, p)
    if norm_root is None:
        return None
    half = pow(2, -1, p)
    for candidate in (norm_root, p - norm_root):
        real = sqrt_mod((z.a + candidate) * half % p, p)
        if real:
            imaginary = z.b * pow(2 * real, -1, p)
            return z._new(real, imaginary).canonical_sign()
    return None


def _extension_nth_root(z: FieldElement, n: int):
    order = z.spec.order
    if gcd(n, order - 1) == 1:
        return z ** pow(n, -1, order - 1)
    if order > BRUTE_FORCE_LIMIT:
        logger.warning("No {}-th root search over {} (order too large)".format(n, z.spec))
        return None
    roots = [candidate for candidate in z.spec.elements() if candidate ** n == z]
    return min(roots, key=FieldElement.sort_key) if roots else None
