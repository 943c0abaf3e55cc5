# Pullback Lemma
# licensed under the GNU Public License, version 2

from divpoly.kernel import KernelSymbolSum
from divpoly.psi import psi_symbols
from identities.templates.base import *


class PullbackLemma(Identity):
    """\
    For a principal symbol sum s on E and an isogeny β: E″ → E, the kernel function of ``β*s``
    on E″ is the kernel function of s composed with β.

    Parameters:
       ================ ====================================================
       symbols          a :py:class:`divpoly.kernel.KernelSymbolSum`, or a map
                        ``{label: n}`` standing for the symbols of ``∏ Ψ_label^n``
       beta             label of an endomorphism of E, a label on another curve
                        ending on E, or an :py:class:`isogenies.isogeny.Isogeny` into E
       ================ ====================================================
    """

    name = 'pullback_lemma'

    factors = None  #: the map ``{label: n}`` the symbols were given as, if any

    def init_parameters(self):
        self.register('symbols', None, self.symbol_sum, preprocessor=self.as_symbols)
        self.register('beta', None, self.nonzero_map, preprocessor=self.as_map)

    def as_symbols(self, value):
        if type(value) is not dict:
            self.factors = None
            return value
        verify.exponent_map(value, 'symbols')
        self.factors = {label: n for label, n in self.as_exponents(value).items() if n}
        symbols = KernelSymbolSum(self.curve)
        for label, n in self.factors.items():
            symbols = symbols + n * psi_symbols(self.context.isogeny(label), self.context.scaling)
        return symbols

    @staticmethod
    def symbol_sum(candidate, param_name: str = None):
        if not isinstance(candidate, KernelSymbolSum):
            raise InvalidParameters("Parameter \"{}\" must be a kernel symbol sum! (got: {})"
                                    .format(param_name, candidate))

    def check_runnable(self):
        symbols, beta = self.p.value['symbols'], self.p.value['beta']
        self.require_into_base(beta, 'beta')
        if symbols.curve != self.curve:
            raise InvalidCurve.mismatch(self.curve, symbols.curve)
        if not symbols.is_principal():
            raise NonPrincipal("{} is not principal".format(symbols), kernel_sum=symbols.kernel_sum(),
                               degree=symbols.degree)

    def kernel_function(self) -> CurveRationalFunction:
        """the kernel function of the symbols on E, as a product of cached Ψ when given as one"""
        if self.factors is None:
            return self.context.kernel_function(self.p.value['symbols']).value
        value = CurveRationalFunction.constant(self.curve, 1)
        for label, n in self.factors.items():
            value = value * self.psi(label) ** n
        return value

    def sides(self):
        symbols = self.p.value['symbols']
        beta = self.context.isogeny(self.p.value['beta'])
        # β*s lives on the source of β; its normalization only needs the differentials on E
        lhs = self.context.kernel_function(symbols.pullback(beta)).value
        rhs = self.kernel_function().pullback(beta)
        return lhs, rhs
