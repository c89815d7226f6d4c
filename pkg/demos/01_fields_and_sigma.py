"""Field arithmetic in GF(2^n) and the sigma form.

Elements are plain ints: bit k is the coefficient of alpha^k for the
residue alpha of X modulo an irreducible polynomial.  This walk-through
builds GF(4) and GF(8), evaluates traces, and checks the addition rule
that makes sigma the key ingredient of the univariate characters.
"""

from mpf import fe_mul, make_field, sigma, trace_n

# With no modulus given, the smallest irreducible polynomial is chosen,
# so results are reproducible across runs and machines.
f4 = make_field(2)
f8 = make_field(3)
print(f"GF(4)  modulus: {f4.modulus:#b}  (X^2 + X + 1)")
print(f"GF(8)  modulus: {f8.modulus:#b}  (X^3 + X + 1)")

# alpha = 2 is the residue of X; in GF(4) it satisfies alpha^2 = alpha + 1.
alpha = 2
print(f"\nalpha * alpha in GF(4) = {fe_mul(f4, alpha, alpha)}  (= alpha + 1 = 3)")

# The absolute trace sums the Frobenius conjugates and lands in {0, 1}.
print("\ntraces over GF(8):", [trace_n(f8, a) for a in f8.elements()])

# sigma(c, x) sums the products of distinct Frobenius conjugates of c*x.
# It is Boolean-valued and depends on c, x only through the product cx.
print("sigma(1, x) over GF(8):", [sigma(f8, 1, x) for x in f8.elements()])

# Its addition rule mixes traces of cx and of c^2 x1 x2; verify it
# exhaustively on GF(8).
violations = 0
for c in f8.elements():
    for x1 in f8.elements():
        for x2 in f8.elements():
            lhs = sigma(f8, c, x1 ^ x2)
            rhs = (
                sigma(f8, c, x1)
                ^ sigma(f8, c, x2)
                ^ (trace_n(f8, fe_mul(f8, c, x1)) & trace_n(f8, fe_mul(f8, c, x2)))
                ^ trace_n(f8, fe_mul(f8, fe_mul(f8, c, c), fe_mul(f8, x1, x2)))
            )
            violations += lhs != rhs
print(f"\nsigma addition rule checked on all {8 ** 3} triples: {violations} violations")
