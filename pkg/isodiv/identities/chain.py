# Chain Rules
# licensed under the GNU Public License, version 2

"""\
How Ψ behaves under composition with an endomorphism β of the base curve:

    Ψ_{αβ} = (Ψ_α∘β)·Ψ_β^(deg α)                                   (α, β unbiased)
    (Ψ_{αβ} / ((Ψ_α∘β)·Ψ_β^(deg α)))² = Ψ̂_{αβ} / ((Ψ̂_α∘β)·Ψ̂_β^(deg α))

and, for a quadratic identity e on labels γ,

    (∏Ψ_γ^(e_γ)·√∏Ψ̂_γ^(−e_γ))∘β = ∏Ψ_{γβ}^(e_γ)·√∏Ψ̂_{γβ}^(−e_γ)
"""

from divpoly.quadratic import quadratic_identity_check
from identities.templates.base import *

MODES = ('unbiased', 'biased')


class ChainRule(Identity):
    """\
    Parameters:
       ================ ====================================================
       alpha            label of α: E → E′
       beta             label of an endomorphism β of E
       mode             ``unbiased`` or ``biased`` (the squared form)
       target_scale     optional scale of ω′ on E′; the biased ratio does not depend on it
       ================ ====================================================
    """

    name = 'chain'

    def init_parameters(self):
        self.register('alpha', None, self.nonzero_label, preprocessor=self.as_label)
        self.register('beta', None, self.nonzero_label, preprocessor=self.as_label)
        self.register('mode', 'biased', verify.choice, kwargs={'options': MODES})
        self.register('target_scale', None, self.optional_scale, preprocessor=self.as_scalar, required=False)

    def as_scalar(self, value):
        if value is None:
            return None
        if isinstance(value, str):
            return self.curve.spec.parse_element(value)
        return self.curve.spec(value)

    @staticmethod
    def optional_scale(candidate, param_name: str = None):
        if candidate is not None and not candidate:
            raise InvalidParameters("Parameter \"{}\" must be a nonzero scale!".format(param_name))

    def check_runnable(self):
        alpha, beta = self.p.value['alpha'], self.p.value['beta']
        self.require_endomorphism(beta, 'beta')
        if self.p.value['mode'] == 'unbiased':
            for where, label in (('alpha', alpha), ('beta', beta)):
                if self.context.index(label):
                    raise DegenerateInput("The unbiased chain rule needs an unbiased {}, got {}".format(where, label))
        scale = self.p.value['target_scale']
        if scale is not None:
            if alpha.target == self.curve:
                raise InvalidParameters("ω′ on the base curve is ω itself; a target scale needs α: E → E′ "
                                        "with E′ ≠ E")
            scaling = self.context.scaling.with_target_scale(alpha.target, scale)
            self.context = self.context.rescaled(scaling)

    def sides(self):
        alpha, beta = self.p.value['alpha'], self.p.value['beta']
        composite = alpha.compose(beta)
        degree = alpha.degree
        factored = self.pullback(self.psi(alpha), beta) * self.psi(beta) ** degree
        if self.p.value['mode'] == 'unbiased':
            return self.psi(composite), factored
        psi_ratio = self.psi(composite) / factored
        hat_ratio = self.hat(composite) / (self.pullback(self.hat(alpha), beta) * self.hat(beta) ** degree)
        return psi_ratio ** 2, hat_ratio


class SecondChainRule(Identity):
    """\
    Parameters:
       ================ ====================================================
       exponents        quadratic identity e on labels γ: E → E′
       beta             label of an endomorphism β of E
       ================ ====================================================
    """

    name = 'second_chain'

    def init_parameters(self):
        self.register('exponents', None, verify.exponent_map, preprocessor=self.as_exponents)
        self.register('beta', None, self.nonzero_label, preprocessor=self.as_label)

    def check_runnable(self):
        exponents, beta = self.p.value['exponents'], self.p.value['beta']
        self.require_endomorphism(beta, 'beta')
        for label, n in exponents.items():
            if n and label.is_zero:
                raise DegenerateInput.zero_label(label, 'exponents')
        if not quadratic_identity_check(exponents):
            raise DegenerateInput("Exponents {} are not a quadratic identity".format(self.inputs()['exponents']))

    def sides(self):
        exponents, beta = self.p.value['exponents'], self.p.value['beta']
        composite = {}
        for label, n in exponents.items():
            label = label.compose(beta)
            composite[label] = composite.get(label, 0) + n
        lhs = self.pullback(self.quadratic_combination(exponents), beta)
        return lhs, self.quadratic_combination(composite)
