# isodiv - Curves
# licensed under the GNU Public License, version 2

"""\
Elliptic curves in the model ``y² = x³ + A₂x² + A₄x + A₆`` and the functions living on them:

    - curves, points and the group law: :py:mod:`curves.weierstrass`
    - functions, divisors, orders and expansions at 𝒪: :py:mod:`curves.curvefunc`
"""

__all__ = ['curvefunc', 'weierstrass']
