# Recurrences
# licensed under the GNU Public License, version 2

"""\
Three-term recurrences, obtained by summing a relation to x cyclically over (α, β, γ)
so that the right-hand sides telescope to zero.
"""

from identities.relations import second_x_relation, x_relation
from identities.templates.base import *


def _cyclic(first, second, third) -> tuple:
    return (first, second), (second, third), (third, first)


class FirstRecurrence(Identity):
    """\
    ``Σ_cyclic Ψ_{α+β}Ψ_{α−β}Ψ̂_αΨ̂_β / (Ψ_α²Ψ_β²Ψ̂_{α+β}) = 0``

    Parameters: ``alpha``, ``beta``, ``gamma``, pairwise different up to sign.
    """

    name = 'rec1'

    def init_parameters(self):
        for name in ('alpha', 'beta', 'gamma'):
            self.register(name, None, self.nonzero_label, preprocessor=self.as_label)

    def check_runnable(self):
        labels = [self.p.value[name] for name in ('alpha', 'beta', 'gamma')]
        self.require_common_basis(*labels)
        for left, right in _cyclic(*labels):
            self.require_nonzero({"{}+{}".format(left, right): left + right,
                                  "{}-({})".format(left, right): left - right})

    def sides(self):
        labels = [self.p.value[name] for name in ('alpha', 'beta', 'gamma')]
        total = CurveRationalFunction.constant(self.curve, 0)
        for left, right in _cyclic(*labels):
            total = total + x_relation(self, left, right)
        return total, CurveRationalFunction.constant(self.curve, 0)


class SecondRecurrence(Identity):
    """\
    ``Σ_cyclic`` of the second relation to x on (α, β, σ), (β, γ, σ), (γ, α, σ) is 0;
    with all labels unbiased the square roots are 1 and this is the classical
    general recurrence ``Ψ_{p+q+s}Ψ_{p−q}Ψ_{r+s}Ψ_r + ... = 0``.
    """

    name = 'rec2'

    def init_parameters(self):
        for name in ('alpha', 'beta', 'gamma', 'sigma'):
            self.register(name, None, self.nonzero_label, preprocessor=self.as_label)

    def check_runnable(self):
        alpha, beta, gamma, sigma = (self.p.value[name] for name in ('alpha', 'beta', 'gamma', 'sigma'))
        self.require_common_basis(alpha, beta, gamma, sigma)
        self.require_nonzero({'{}+σ'.format(label): label + sigma for label in (alpha, beta, gamma)})
        for left, right in _cyclic(alpha, beta, gamma):
            self.require_nonzero({"{}+{}+σ".format(left, right): left + right + sigma,
                                  "{}-({})".format(left, right): left - right})

    def sides(self):
        alpha, beta, gamma, sigma = (self.p.value[name] for name in ('alpha', 'beta', 'gamma', 'sigma'))
        total = CurveRationalFunction.constant(self.curve, 0)
        for left, right in _cyclic(alpha, beta, gamma):
            total = total + second_x_relation(self, left, right, sigma)
        return total, CurveRationalFunction.constant(self.curve, 0)
