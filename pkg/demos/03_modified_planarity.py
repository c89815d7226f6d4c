"""Modified planarity, decided two independent ways.

F is modified planar when every shifted derivative
F(x+a) + F(x) + a*x (cross term: coordinatewise or field product) is a
bijection.  Equivalently, every component of F must have a flat twisted
spectrum at its own twist.  This script shows both routes agreeing, and
the striking asymmetry between the two settings for the zero function.
"""

from mpf import (
    DOPolynomial,
    VectorialFunction,
    do_to_table,
    is_modified_planar_components,
    is_modified_planar_perm,
    make_field,
)

f4 = make_field(2)
f8 = make_field(3)

# The univariate zero function is modified planar; the multivariate one
# is not, and the verdict carries the smallest failing direction.
zero_uv = VectorialFunction("uv", 2, (0, 0, 0, 0), f4)
zero_mv = VectorialFunction("mv", 2, (0, 0, 0, 0))
print("uv zero:", is_modified_planar_perm(zero_uv))
print("mv zero:", is_modified_planar_perm(zero_mv))

# Both verdict routes agree on every function F: GF(4) -> GF(4).
import itertools

agree = all(
    is_modified_planar_perm(VectorialFunction("uv", 2, t, f4)).is_planar
    == is_modified_planar_components(VectorialFunction("uv", 2, t, f4))
    for t in itertools.product(range(4), repeat=4)
)
print(f"\nperm route == component route on all 256 functions over GF(4): {agree}")

# Quadratics in Dembowski-Ostrom form: the nonlinear exponents are all
# of the shape 2^i + 2^j.  Over GF(8), x^3 alone is NOT modified planar
# (its derivative has the kernel element a+1), but x^3 + x^6 is: one of
# the seven nontrivial planar quadratics the exhaustive sweep finds.
cube = do_to_table(DOPolynomial(f8, quad={(0, 1): 1}))
print("\nx^3 over GF(8):", cube.table)
print("x^3:", is_modified_planar_perm(cube))
two_term = do_to_table(DOPolynomial(f8, quad={(0, 1): 1, (1, 2): 1}))
print("x^3 + x^6:", is_modified_planar_perm(two_term))

# Every affine function is trivially modified planar: the derivative
# collapses to const + a*x, a bijection for a != 0.
affine = do_to_table(DOPolynomial(f8, linearized={0: 5, 2: 3}, constant=6))
print("an affine map:", affine.table, "->", is_modified_planar_perm(affine).is_planar)
