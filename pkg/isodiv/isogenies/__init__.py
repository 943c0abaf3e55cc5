"""\
Explicit separable isogenies (Vélu's formulas of degree 2, Gaussian
multiplication, sums and compositions), their kernels, and the
:py:class:`isogenies.homs.HomElement` labels used to name them.
"""

__all__ = ['homs', 'isogeny']
