"""\
Division polynomials: the classical Ψₙ, the kernel functions of kernel symbol
sums, the generalized Ψ_φ, Ψ̂ and Ψ̃ for isogenies, the differential
convention, and square roots of Ψ̂ products.
"""

__all__ = ['classical', 'context', 'kernel', 'psi', 'quadratic', 'scaling']
