# Relations to x
# licensed under the GNU Public License, version 2

"""\
Ψ against the coordinates of the target curve. For α, β: E → E′ in a common basis:

    Ψ_{α+β}Ψ_{α−β}Ψ̂_αΨ̂_β / (Ψ_α²Ψ_β²Ψ̂_{α+β}) = x′∘β − x′∘α

and for α, β, σ:

    Ψ_{α+β+σ}Ψ_{α−β}Ψ_σ / (Ψ_{α+σ}Ψ_{β+σ}Ψ_αΨ_β) · √(Ψ̂_{α+σ}Ψ̂_{β+σ}Ψ̂_αΨ̂_β / (Ψ̂_{α+β+σ}Ψ̂_{α−β}Ψ̂_σ))
        = slope(α, σ) − slope(β, σ)

where ``slope(φ, ψ)`` is the slope of the line through the generic points φ(P) and ψ(P),
the tangent if they agree.
"""

from identities.templates.base import *


def x_relation(identity: Identity, alpha, beta) -> CurveRationalFunction:
    """the left-hand side of the relation to x"""
    total, difference = alpha + beta, alpha - beta
    numerator = identity.psi(total) * identity.psi(difference) * identity.hat(alpha) * identity.hat(beta)
    denominator = identity.psi(alpha) ** 2 * identity.psi(beta) ** 2 * identity.hat(total)
    return numerator / denominator


def second_x_relation(identity: Identity, alpha, beta, sigma) -> CurveRationalFunction:
    """the left-hand side of the second relation to x"""
    exponents = {}
    for label, n in ((alpha + beta + sigma, 1), (alpha - beta, 1), (sigma, 1),
                     (alpha + sigma, -1), (beta + sigma, -1), (alpha, -1), (beta, -1)):
        exponents[label] = exponents.get(label, 0) + n
    return identity.quadratic_combination(exponents)


def slope(identity: Identity, phi, psi) -> CurveRationalFunction:
    """\
    :raises DegenerateInput: if φ = −ψ (the line is vertical)
    """
    x1, y1 = identity.x_after(phi), identity.y_after(phi)
    x2, y2 = identity.x_after(psi), identity.y_after(psi)
    if x1 != x2:
        return (y1 - y2) / (x1 - x2)
    if y1 != y2:
        raise DegenerateInput("The line through {} and {} is vertical".format(phi, psi))
    target = phi.target
    return (3 * x1 * x1 + 2 * target.A2 * x1 + target.A4) / (2 * y1)


class RelationToX(Identity):
    """\
    Parameters:
       ================ ====================================================
       alpha            label of α: E → E′
       beta             label of β: E → E′, α ≠ ±β
       ================ ====================================================
    """

    name = 'rel_x'

    def init_parameters(self):
        self.register('alpha', None, self.nonzero_label, preprocessor=self.as_label)
        self.register('beta', None, self.nonzero_label, preprocessor=self.as_label)

    def check_runnable(self):
        alpha, beta = self.p.value['alpha'], self.p.value['beta']
        self.require_common_basis(alpha, beta)
        self.require_nonzero({'α+β': alpha + beta, 'α−β': alpha - beta})

    def sides(self):
        alpha, beta = self.p.value['alpha'], self.p.value['beta']
        return x_relation(self, alpha, beta), self.x_after(beta) - self.x_after(alpha)


class SecondRelationToX(Identity):
    """\
    Parameters:
       ================ ====================================================
       alpha            label of α: E → E′
       beta             label of β: E → E′
       sigma            label of σ: E → E′
       ================ ====================================================

    All of α+β+σ, α−β, α+σ and β+σ must be nonzero.
    """

    name = 'rel_x2'

    def init_parameters(self):
        for name in ('alpha', 'beta', 'sigma'):
            self.register(name, None, self.nonzero_label, preprocessor=self.as_label)

    def check_runnable(self):
        alpha, beta, sigma = (self.p.value[name] for name in ('alpha', 'beta', 'sigma'))
        self.require_common_basis(alpha, beta, sigma)
        self.require_nonzero({'α+β+σ': alpha + beta + sigma, 'α−β': alpha - beta,
                              'α+σ': alpha + sigma, 'β+σ': beta + sigma})

    def sides(self):
        alpha, beta, sigma = (self.p.value[name] for name in ('alpha', 'beta', 'sigma'))
        rhs = slope(self, alpha, sigma) - slope(self, beta, sigma)
        return second_x_relation(self, alpha, beta, sigma), rhs
