# isodiv - Exact Algebra
# licensed under the GNU Public License, version 2

"""\
The exact arithmetic everything else is built on:

    - fields and their elements: :py:mod:`algebra.field`
    - univariate polynomials: :py:mod:`algebra.polynomial`
    - truncated Laurent series with tracked precision: :py:mod:`algebra.series`
    - the literal syntax shared by all of them: :py:mod:`algebra.expression`
"""

__all__ = ['expression', 'field', 'polynomial', 'series']
