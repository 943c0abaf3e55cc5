# isodiv - Elliptic Nets
# licensed under the GNU Public License, version 2

"""\
Elliptic nets of rank k: maps ``W: ℤᵏ → F`` with ``W(0) = 0``, ``W(−v) = −W(v)``
satisfying

    W(p+q+s)W(p−q)W(r+s)W(r) + W(q+r+s)W(q−r)W(p+s)W(p) + W(r+p+s)W(r−p)W(q+s)W(q) = 0.

A net is given by its values on the box ``‖v‖∞ ≤ box`` (``box ≥ 4``); every other
value is reduced by one fixed instance of the recurrence with ``s = 0``,
halving the largest coordinate. Rank 1 nets are elliptic divisibility sequences.
"""

import itertools
import logging
from threading import RLock

from algebra.field import FieldElement, FieldSpec
from curves.weierstrass import Point, WeierstrassCurve
from divpoly.classical import DivisionPolynomials
from helpers import verify
from helpers.exceptions import Indeterminate, InvalidParameters

logger = logging.getLogger('isodiv.nets.net')

#: the smallest box the reduction closes on
MINIMAL_BOX = 4


def vectors(rank: int, bound: int, minimum: int = None):
    """all integer vectors with entries in ``[minimum, bound]`` (``minimum`` defaults to ``−bound``)"""
    low = -bound if minimum is None else minimum
    return itertools.product(range(low, bound + 1), repeat=rank)


def _canonical(v: tuple) -> bool:
    """whether the first nonzero entry is positive"""
    for entry in v:
        if entry:
            return entry > 0
    return False


def _add(v: tuple, w: tuple) -> tuple:
    return tuple(a + b for a, b in zip(v, w))


def _sub(v: tuple, w: tuple) -> tuple:
    return tuple(a - b for a, b in zip(v, w))


def _neg(v: tuple) -> tuple:
    return tuple(-a for a in v)


def _unit(rank: int, index: int, sign: int = 1) -> tuple:
    return tuple(sign if j == index else 0 for j in range(rank))


class EllipticNet:
    """\
    :param rank: k
    :param spec: the field of the values
    :param initial: map from vectors to values; must cover the box up to sign
    :param box: the radius of the box of initial values
    :param curve: the curve the net belongs to, if known
    :param points: the points Q₁ … Q_k, if known
    """

    def __init__(self, rank: int, spec: FieldSpec, initial: dict, box: int = MINIMAL_BOX,
                 curve: WeierstrassCurve = None, points: tuple = None):
        verify.integer(rank, 'rank', minimum=1)
        verify.integer(box, 'box', minimum=MINIMAL_BOX)
        self.rank = rank
        self.spec = spec
        self.box = box
        self.curve = curve
        self.points = points
        self._lock = RLock()
        self._values = {}
        for v in vectors(rank, box):
            if not _canonical(v):
                continue
            if v in initial:
                value = spec(initial[v])
                if _neg(v) in initial and spec(initial[_neg(v)]) != -value:
                    raise InvalidParameters("Initial values W{} = {} and W{} = {} are not antisymmetric"
                                            .format(v, value, _neg(v), initial[_neg(v)]))
            elif _neg(v) in initial:
                value = -spec(initial[_neg(v)])
            else:
                raise InvalidParameters("Underdetermined initial data: W{} is missing".format(v))
            self._values[v] = value
        zero = tuple([0] * rank)
        if zero in initial and spec(initial[zero]):
            raise InvalidParameters("W(0) must be 0, got {}".format(initial[zero]))

    @classmethod
    def from_points(cls, curve: WeierstrassCurve, points, box: int = MINIMAL_BOX) -> 'EllipticNet':
        """\
        The net of ``(E, Q₁, …, Q_k)`` for k = 1, 2, normalized by ``W(eᵢ) = W(eᵢ+eⱼ) = 1``
        and ``W(n·eᵢ) = Ψₙ(Qᵢ)``. The rest of the box follows from the relation to x,

            W(v+w)·W(v−w) = W(v)²·W(w)²·(x(w·Q) − x(v·Q)).

        :raises Indeterminate: if a multiple ``v·Q`` in the box is 𝒪
        """
        points = tuple(points)
        rank = len(points)
        if rank not in (1, 2):
            raise InvalidParameters("Nets from points are built for rank 1 and 2, got {} points".format(rank))
        for point in points:
            if point.curve != curve:
                raise InvalidParameters("{} is not a point of {}".format(point, curve))
        verify.integer(box, 'box', minimum=MINIMAL_BOX)
        table = _PointTable(curve, points, box)
        net = cls(rank, curve.spec, table.values(), box, curve, points)
        logger.info("Net of {} on {}".format(', '.join(str(point) for point in points), curve))
        return net

    @classmethod
    def from_table(cls, rank: int, table: dict, spec: FieldSpec = None, box: int = MINIMAL_BOX) -> 'EllipticNet':
        """\
        a net from user data; rank 1 tables may use integer keys

        :param spec: the field of the values (taken from the values, or ℚ)
        """
        initial = {}
        for key, value in table.items():
            v = (key,) if type(key) is int else tuple(key)
            if len(v) != rank or not all(type(entry) is int for entry in v):
                raise InvalidParameters("Index {} is not a vector of length {}".format(key, rank))
            initial[v] = value
        if spec is None:
            elements = [value for value in initial.values() if isinstance(value, FieldElement)]
            spec = elements[0].spec if elements else FieldSpec('Q')
        return cls(rank, spec, initial, box)

    # values

    def __getitem__(self, v) -> FieldElement:
        if type(v) is int:
            v = (v,)
        v = tuple(v)
        if len(v) != self.rank:
            raise InvalidParameters("Index {} is not a vector of length {}".format(v, self.rank))
        if not any(v):
            return self.spec.zero
        if not _canonical(v):
            return -self[_neg(v)]
        with self._lock:
            if v not in self._values:
                self._values[v] = self._reduce(v)
            return self._values[v]

    def _reduce(self, v: tuple) -> FieldElement:
        """\
        ``W(v) = −(W(q+r)W(q−r)W(p)² + W(r+p)W(r−p)W(q)²) / (W(d)·W(r)²)``
        with ``p + q = v``, ``p − q = d`` small and ``r = eᵢ`` for the first largest coordinate i
        """
        i = max(range(self.rank), key=lambda j: (abs(v[j]), -j))
        if v[i] < 0:
            # −v has the same largest coordinate, now positive
            return -self._reduce(_neg(v))
        d = tuple((2 - entry % 2) if j == i else entry % 2 for j, entry in enumerate(v))
        p = tuple((entry + shift) // 2 for entry, shift in zip(v, d))
        q = _sub(v, p)
        r = _unit(self.rank, i)
        divisor = self[d] * self[r] ** 2
        if not divisor:
            raise Indeterminate("Cannot reduce W{}: W{}·W{}² = 0".format(v, d, r), index=v)
        value = -(self[_add(q, r)] * self[_sub(q, r)] * self[p] ** 2
                  + self[_add(r, p)] * self[_sub(r, p)] * self[q] ** 2) / divisor
        logger.debug("W{} from p = {}, q = {}, r = {}".format(v, p, q, r))
        return value

    def table(self, bound: int, minimum: int = None) -> dict:
        """the values on ``[minimum, bound]ᵏ`` (``minimum`` defaults to ``−bound``)"""
        return {v: self[v] for v in vectors(self.rank, bound, minimum)}

    def __repr__(self):
        source = "from {} on {}".format(', '.join(str(point) for point in self.points), self.curve) \
            if self.points else "from a table"
        return "<EllipticNet of rank {} over {} {}>".format(self.rank, self.spec, source)


class _PointTable:
    """the initial box of the net of points, filled by the relation to x"""

    def __init__(self, curve: WeierstrassCurve, points: tuple, box: int):
        self.curve = curve
        self.points = points
        self.rank = len(points)
        self.box = box
        self.psi = DivisionPolynomials(curve)
        self._values = {}
        self._multiples = {}

    def multiple(self, v: tuple) -> Point:
        if v not in self._multiples:
            total = self.curve.infinity
            for n, point in zip(v, self.points):
                total = total + n * point
            self._multiples[v] = total
        return self._multiples[v]

    def x(self, v: tuple):
        point = self.multiple(v)
        if point.is_infinity:
            raise Indeterminate("{}·Q = O: the points are degenerate for this box".format(v), index=v)
        return point.x

    def values(self) -> dict:
        for v in vectors(self.rank, self.box):
            if _canonical(v):
                self[v]
        return self._values

    def __getitem__(self, v: tuple) -> FieldElement:
        if not any(v):
            return self.curve.spec.zero
        if not _canonical(v):
            return -self[_neg(v)]
        if v not in self._values:
            self._values[v] = self._compute(v)
        return self._values[v]

    def _compute(self, v: tuple) -> FieldElement:
        support = [j for j, entry in enumerate(v) if entry]
        if len(support) == 1:
            j = support[0]
            self.x(v)
            return self.psi[v[j]](self.points[j])
        if all(abs(entry) == 1 for entry in v):
            # the two-point block: W(e₁ + e₂) = 1, W(e₁ − e₂) = x(Q₂) − x(Q₁)
            self.x(v)
            if v[1] > 0:
                return self.curve.spec.one
            return self.x((0, 1)) - self.x((1, 0))
        i = max(range(self.rank), key=lambda j: (abs(v[j]), -j))
        w = _unit(self.rank, i, 1 if v[i] > 0 else -1)
        a = _sub(v, w)
        c = _sub(a, w)
        below = self[c]
        if not below:
            raise Indeterminate("W{} = 0 while filling W{}".format(c, v), index=v)
        return (self.x(w) - self.x(a)) * self[a] ** 2 * self[w] ** 2 / below


def net_values(net: EllipticNet, v) -> FieldElement:
    """W(v)"""
    return net[v]


def eds(curve: WeierstrassCurve, point: Point, terms: int = None) -> EllipticNet:
    """\
    the elliptic divisibility sequence ``W(n) = Ψₙ(P)``

    :param terms: if given, ``W(1) … W(terms)`` are computed right away
    :raises Indeterminate: if 2P, 3P or 4P is 𝒪
    """
    if point.is_two_torsion:
        raise Indeterminate("{} is a two-torsion point".format(point), index=(2,))
    net = EllipticNet.from_points(curve, [point])
    if terms is not None:
        verify.positive_integer(terms, 'terms')
        for n in range(1, terms + 1):
            net[n]
    return net


class RecurrenceCheck:
    """the outcome of :py:func:`check_recurrence`"""

    def __init__(self):
        self.checked = 0
        self.failures = []  #: the failing instances

    @property
    def ok(self) -> bool:
        return not self.failures

    def __bool__(self):
        return self.ok

    def __repr__(self):
        return "<RecurrenceCheck {} instances, {} failed>".format(self.checked, len(self.failures))


def check_recurrence(net: EllipticNet, bound: int, sigmas=None) -> RecurrenceCheck:
    """\
    checks the recurrence for all p, q, r in ``[0, bound]ᵏ``: the first recurrence
    (``s = 0``), or the general one for each s in ``sigmas``
    """
    verify.positive_integer(bound, 'bound')
    result = RecurrenceCheck()
    zero = tuple([0] * net.rank)
    shifts = [zero] if sigmas is None else [(s,) if type(s) is int else tuple(s) for s in sigmas]
    box = list(vectors(net.rank, bound, 0))
    value = net.__getitem__
    for s in shifts:
        for p, q, r in itertools.product(box, repeat=3):
            total = (value(_add(_add(p, q), s)) * value(_sub(p, q)) * value(_add(r, s)) * value(r)
                     + value(_add(_add(q, r), s)) * value(_sub(q, r)) * value(_add(p, s)) * value(p)
                     + value(_add(_add(r, p), s)) * value(_sub(r, p)) * value(_add(q, s)) * value(q))
            result.checked += 1
            if total:
                result.failures.append((p, q, r, s))
    if result.failures:
        logger.warning("{} recurrence instances of {} fail, e.g. {}".format(
            len(result.failures), result.checked, result.failures[0]))
    return result


def check_x_relation(net: EllipticNet, bound: int) -> RecurrenceCheck:
    """\
    checks ``W(v+w)W(v−w) = W(v)²W(w)²(x(w·Q) − x(v·Q))`` for v, w in ``[−bound, bound]ᵏ``
    with ``v·Q``, ``w·Q`` ≠ 𝒪 (nets from points only)
    """
    if net.points is None:
        raise InvalidParameters("The relation to x needs a net built from points")
    verify.positive_integer(bound, 'bound')
    result = RecurrenceCheck()
    table = _PointTable(net.curve, net.points, bound)
    for v, w in itertools.product(list(vectors(net.rank, bound)), repeat=2):
        left, right = table.multiple(v), table.multiple(w)
        if left.is_infinity or right.is_infinity:
            continue
        result.checked += 1
        if net[_add(v, w)] * net[_sub(v, w)] != net[v] ** 2 * net[w] ** 2 * (right.x - left.x):
            result.failures.append((v, w))
    return result
