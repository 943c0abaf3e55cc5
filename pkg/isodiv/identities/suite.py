# isodiv - Randomized Identity Suites
# licensed under the GNU Public License, version 2

"""\
Seeded random instances of every identity on ``y² = x³ − x`` over F_p.

The drawn labels are Gaussian integers ``a + bi`` with ``|a|, |b|`` at most the
label bound, optionally behind a common Vélu prefix. The labels an instance
derives from them (sums, differences, composites) are not bounded; the instance
is *skipped* (and counted) when one of them is zero or inseparable over F_p.
"""

import json
import logging
import random

from curves.weierstrass import WeierstrassCurve
from algebra.field import FieldSpec
from divpoly.context import DivisionContext
from helpers import verify
from helpers.exceptions import DegenerateInput, DescriptiveException, ExtensionRequired
from identities.__active__ import identities
from identities.engine import run_identity
from isogenies.homs import HomElement
from isogenies.isogeny import velu2

logger = logging.getLogger('isodiv.identities.suite')

#: how often an instance is redrawn before the suite gives up on reaching the requested count
ATTEMPTS_PER_INSTANCE = 40


class SuiteResult:
    """\
    Counts for one identity over one prime.

    :param name: the identity
    :param prime: p
    """

    def __init__(self, name: str, prime: int):
        self.name = name
        self.prime = prime
        self.passed = 0
        self.failed = 0
        self.retried = 0  #: instances checked over F_{p²}
        self.skipped = 0  #: degenerate or inseparable draws
        self.audited = 0  #: Ψ_φ audited after the run
        self.audit_failures = 0
        self.failures = []  #: reports of the failed instances

    @property
    def ok(self) -> bool:
        return not self.failed and not self.audit_failures

    def add(self, report) -> None:
        if report.retried:
            self.retried += 1
        if report.equal:
            self.passed += 1
        else:
            self.failed += 1
            self.failures.append(report)

    def as_dict(self) -> dict:
        return {'name': self.name, 'prime': self.prime, 'passed': self.passed, 'failed': self.failed,
                'retried': self.retried, 'skipped': self.skipped, 'audited': self.audited,
                'audit_failures': self.audit_failures,
                'failures': [report.as_dict() for report in self.failures]}

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), ensure_ascii=False)

    def pretty(self) -> str:
        return "{:<15} p = {:<4} passed {:>3}  failed {:>3}  retried {:>3}  skipped {:>3}  audits {}/{}".format(
            self.name, self.prime, self.passed, self.failed, self.retried, self.skipped,
            self.audited - self.audit_failures, self.audited)

    def __repr__(self):
        return "<SuiteResult {} over F_{}: {} passed, {} failed>".format(self.name, self.prime, self.passed,
                                                                        self.failed)


class _Skip(Exception):
    """a draw with a zero or inseparable label"""


class InstanceGenerator:
    """\
    Draws parameter sets for the identities.

    :param context: session on ``y² = x³ − x`` over F_p
    :param rng: a seeded :py:class:`random.Random`
    :param label_bound: bound on the coordinates of the drawn labels
    """

    def __init__(self, context: DivisionContext, rng: random.Random, label_bound: int):
        self.context = context
        self.curve = context.curve
        self.prime = context.curve.spec.characteristic
        self.rng = rng
        self.bound = label_bound
        self._prefixes = [velu2(self.curve, point) for point in self.curve.two_torsion()[0]]

    def draw(self, name: str) -> dict:
        """\
        :raises _Skip: for degenerate draws
        :return: the parameters of one instance
        """
        return getattr(self, '_draw_' + name)()

    # labels

    def coordinates(self) -> tuple:
        while True:
            a = self.rng.randint(-self.bound, self.bound)
            b = self.rng.randint(-self.bound, self.bound)
            if a or b:
                return a, b

    def prefix(self, probability: float = 1 / 3):
        return self.rng.choice(self._prefixes) if self.rng.random() < probability else None

    def label(self, prefix=None) -> HomElement:
        a, b = self.coordinates()
        return HomElement(self.curve, a, b, prefix)

    def unbiased_label(self) -> HomElement:
        """a label ``a + bi`` not divisible by ``1 + i``"""
        while True:
            label = self.label()
            if (label.a + label.b) % 2:
                return label

    def check(self, *labels) -> None:
        """\
        :raises _Skip: if a label is zero or inseparable over F_p
        """
        for label in labels:
            if label.is_zero or not label.is_separable:
                raise _Skip("{} is degenerate over F_{}".format(label, self.prime))

    # parameter sets

    def _draw_chain(self):
        mode = self.rng.choice(('unbiased', 'biased'))
        if mode == 'unbiased':
            alpha, beta = self.unbiased_label(), self.unbiased_label()
        else:
            alpha, beta = self.label(self.prefix()), self.label()
        self.check(alpha, beta, alpha.compose(beta))
        return {'alpha': alpha, 'beta': beta, 'mode': mode}

    def _quadratic_identity(self, prefix) -> dict:
        first, second = self.label(prefix), self.label(prefix)
        if self.rng.random() < 0.5:
            terms = ((first + second, 1), (first - second, 1), (first, -2), (second, -2))
        else:
            third = self.label(prefix)
            terms = ((first + second + third, 1), (first + second, -1), (first + third, -1),
                     (second + third, -1), (first, 1), (second, 1), (third, 1))
        self.check(*(label for label, _ in terms))
        exponents = {}
        for label, n in terms:
            exponents[label] = exponents.get(label, 0) + n
        exponents = {label: n for label, n in exponents.items() if n}
        if not exponents:
            raise _Skip("the exponents cancel")
        return exponents

    def _draw_second_chain(self):
        beta = self.label()
        exponents = self._quadratic_identity(self.prefix())
        self.check(beta, *(label.compose(beta) for label in exponents))
        return {'exponents': exponents, 'beta': beta}

    def _draw_rel_x(self):
        prefix = self.prefix()
        alpha, beta = self.label(prefix), self.label(prefix)
        self.check(alpha, beta, alpha + beta, alpha - beta)
        return {'alpha': alpha, 'beta': beta}

    def _draw_rec1(self):
        prefix = self.prefix()
        alpha, beta, gamma = self.label(prefix), self.label(prefix), self.label(prefix)
        pairs = ((alpha, beta), (beta, gamma), (gamma, alpha))
        self.check(alpha, beta, gamma, *(left + right for left, right in pairs),
                   *(left - right for left, right in pairs))
        return {'alpha': alpha, 'beta': beta, 'gamma': gamma}

    def _second_relation_labels(self, alpha, beta, sigma) -> list:
        return [alpha + beta + sigma, alpha - beta, sigma, alpha + sigma, beta + sigma, alpha, beta]

    def _draw_rel_x2(self):
        prefix = self.prefix()
        alpha, beta, sigma = self.label(prefix), self.label(prefix), self.label(prefix)
        self.check(*self._second_relation_labels(alpha, beta, sigma))
        return {'alpha': alpha, 'beta': beta, 'sigma': sigma}

    def _draw_rec2(self):
        prefix = self.prefix()
        alpha, beta, gamma, sigma = (self.label(prefix) for _ in range(4))
        for left, right in ((alpha, beta), (beta, gamma), (gamma, alpha)):
            self.check(*self._second_relation_labels(left, right, sigma))
        return {'alpha': alpha, 'beta': beta, 'gamma': gamma, 'sigma': sigma}

    def _draw_pullback_lemma(self):
        beta = self.label()
        exponents = {}
        for _ in range(self.rng.randint(1, 2)):
            label = self.label(self.prefix())
            exponents[label] = exponents.get(label, 0) + self.rng.choice((-2, -1, 1, 2))
        exponents = {label: n for label, n in exponents.items() if n}
        if not exponents:
            raise _Skip("the exponents cancel")
        self.check(beta, *exponents, *(label.compose(beta) for label in exponents))
        return {'symbols': {str(label): n for label, n in exponents.items()}, 'beta': beta}


def suite_curve(prime: int) -> WeierstrassCurve:
    """``y² = x³ − x`` over F_p"""
    verify.odd_prime(prime, 'prime')
    return WeierstrassCurve(FieldSpec('Fp', prime), 0, -1, 0)


def run_suite(primes=(13, 17, 29), count: int = 50, seed: int = 0, label_bound: int = 3, names=None,
              extension_ok: bool = True) -> list:
    """\
    :param primes: the primes p to run over
    :param count: nondegenerate instances per identity and prime
    :param seed: the same seed gives the same instances
    :param label_bound: bound on the coordinates of the drawn labels
    :param names: the identities to run (all registered ones by default)
    :return: a list of :py:class:`SuiteResult`
    """
    verify.positive_integer(count, 'count')
    verify.positive_integer(label_bound, 'label_bound')
    verify.integer(seed, 'seed')
    names = sorted(identities) if names is None else list(names)
    for name in names:
        verify.choice(name, 'identity', tuple(sorted(identities)))
    results = []
    for prime in primes:
        # one cache per prime; each Ψ_φ is audited by the identity that computed it first
        session = DivisionContext(suite_curve(prime))
        for name in names:
            rng = random.Random("{}:{}:{}".format(seed, name, prime))
            results.append(_run_one(name, session, InstanceGenerator(session, rng, label_bound), count,
                                    extension_ok))
    return results


def _run_one(name: str, context: DivisionContext, generator: InstanceGenerator, count: int,
             extension_ok: bool) -> SuiteResult:
    result = SuiteResult(name, generator.prime)
    attempts = 0
    while result.passed + result.failed < count:
        attempts += 1
        if attempts > ATTEMPTS_PER_INSTANCE * count:
            logger.warning("{} over F_{}: only {} instances after {} draws"
                           .format(name, generator.prime, result.passed + result.failed, attempts - 1))
            break
        try:
            parameters = generator.draw(name)
        except _Skip as skip:
            logger.debug(str(skip))
            result.skipped += 1
            continue
        try:
            report = run_identity(name, context, parameters, extension_ok)
        except (DegenerateInput, ExtensionRequired) as error:
            logger.warning("Skipping {} instance {}: {}".format(name, parameters, error))
            result.skipped += 1
            continue
        except DescriptiveException as error:
            logger.error("{} instance {} raised {}".format(name, parameters, error))
            raise
        result.add(report)
    result.audited, result.audit_failures = context.audit()
    logger.info(result.pretty())
    return result
