"""Graphs of functions as relative difference sets.

The pairs (x, y) with the twisted law (x1,y1)*(x2,y2) =
(x1+x2, y1+y2+x1*x2) form a group of exponent 4, and the graph
{(x, F(x))} of a modified planar F is a (2^n, 2^n, 2^n, 1) relative
difference set relative to the forbidden subgroup {0} x F.  Two
independent verifiers: exhaustive difference counting, and character
sums whose moduli must hit prescribed values exactly.
"""

from mpf import (
    VectorialFunction,
    character_eval,
    forbidden_subgroup,
    graph_of,
    group_for,
    group_op,
    make_field,
    rds_verify_bruteforce,
    rds_verify_characters,
)

f4 = make_field(2)
zero = VectorialFunction("uv", 2, (0, 0, 0, 0), f4)
group = group_for(zero)
R = graph_of(zero)
N = forbidden_subgroup(group)

print("group law: star_uv on GF(4) x GF(4)")
print("graph of the zero function:", sorted(R))

# Difference counting: every element off N is hit exactly once.
report = rds_verify_bruteforce(group, R, N)
print(f"\nbrute-force verdict: {report.is_rds}")
print(f"parameters (mu, nu, k, lambda) = ({report.mu}, {report.nu}, {report.k}, {report.lam})")

# Character route: |chi(R)|^2 = 2^n for every character with c != 0.
print("character verdict:", rds_verify_characters(group, R, N))

# A failing example: the multivariate zero function.  The witness is the
# first element with the wrong representation count.
zero_mv = VectorialFunction("mv", 2, (0, 0, 0, 0))
gm = group_for(zero_mv)
bad = rds_verify_bruteforce(gm, graph_of(zero_mv), forbidden_subgroup(gm))
print(f"\nmv zero graph: is_rds={bad.is_rds}, witness={bad.failing_element} (count {bad.failing_count})")

# Characters really are homomorphisms into the fourth roots of unity.
a, b = (2, 1), (3, 3)
va = character_eval(group, 1, 2, a)
vb = character_eval(group, 1, 2, b)
vab = character_eval(group, 1, 2, group_op(group, a, b))
print(f"\nchi(a)={tuple(va)}, chi(b)={tuple(vb)}, chi(a*b)={tuple(vab)}")
