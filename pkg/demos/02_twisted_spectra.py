"""Exact twisted spectra and the bent4 property.

A Boolean function is bent4 when some twist c makes its spectrum flat:
every value has squared modulus exactly 2^n.  The twist c = 0 gives the
ordinary Walsh-Hadamard spectrum (bent functions), and the all-ones /
unit twist gives the nega-Hadamard spectrum (negabent functions).
All values are exact Gaussian integers, no floating point.
"""

from mpf import TruthTable, bent4_witnesses, from_values, is_flat, make_field, transform_U, transform_V

# --- multivariate setting: points are coordinate vectors ----------------

g0 = TruthTable(2, 0, "mv")  # the zero function on two variables
walsh = transform_U(g0, 0b00)
nega = transform_U(g0, 0b11)
print("zero function, n=2")
print("  Walsh spectrum:", [tuple(v) for v in walsh.values], "flat:", is_flat(walsh))
print("  nega  spectrum:", [tuple(v) for v in nega.values], "flat:", is_flat(nega))

# x1*x2 is the classic bent function on two variables
bent = from_values([0, 0, 0, 1], "mv")
print("\nx1*x2 Walsh spectrum:", [tuple(v) for v in transform_U(bent, 0).values])
print("bent4 witnesses of x1*x2:", sorted(bent4_witnesses(bent)))

# --- univariate setting: points are field elements -----------------------

f4 = make_field(2)
gu = TruthTable(2, 0, "uv")
nega_uv = transform_V(f4, gu, 1)
print("\nzero function over GF(4)")
print("  univariate nega spectrum:", [tuple(map(int, v)) for v in nega_uv.values])
print("  flat:", is_flat(nega_uv))

# The univariate zero function is bent4 at every nonzero twist, very
# unlike its multivariate cousin, which is flat only at the all-ones twist.
print("  witnesses (uv):", sorted(bent4_witnesses(gu, f4)))
print("  witnesses (mv):", sorted(bent4_witnesses(g0)))

# Parseval: the summed squared moduli always equal 2^(2n), exactly.
print("\nParseval check:", int(nega_uv.norms_sq().sum()), "= 2^(2n) =", 1 << 4)
