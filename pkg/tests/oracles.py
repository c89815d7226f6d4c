"""Independent brute-force oracles for the test suite.

Everything here is deliberately written the slow, literal way (direct
double sums, coefficient-wise polynomial products, set-based bijection
checks) so that it shares no code path with the library implementations
it verifies.
"""

from mpf.boolfun import TruthTable
from mpf.gf2n import FieldSpec, fe_mul, sigma, trace_n

QUARTER_RE = (1, 0, -1, 0)
QUARTER_IM = (0, 1, 0, -1)


def naive_poly_mul(a: int, b: int) -> int:
    """Carry-less product by explicit coefficient convolution."""
    out = 0
    for i in range(a.bit_length()):
        if (a >> i) & 1:
            for j in range(b.bit_length()):
                if (b >> j) & 1:
                    out ^= 1 << (i + j)
    return out


def naive_poly_mod(a: int, m: int) -> int:
    dm = m.bit_length() - 1
    while a.bit_length() - 1 >= dm and a:
        a ^= m << (a.bit_length() - 1 - dm)
    return a


def naive_field_mul(spec: FieldSpec, a: int, b: int) -> int:
    return naive_poly_mod(naive_poly_mul(a, b), spec.modulus)


def naive_is_irreducible(p: int) -> bool:
    """No factorization into two polynomials of degree >= 1."""
    deg = p.bit_length() - 1
    for f in range(2, 1 << deg):
        if f.bit_length() - 1 < 1:
            continue
        for g in range(2, 1 << deg):
            if (f.bit_length() - 1) + (g.bit_length() - 1) != deg:
                continue
            if naive_poly_mul(f, g) == p:
                return False
    return True


def parity(v: int) -> int:
    return v.bit_count() & 1


def u_spectrum_weight_form(g: TruthTable, c: int) -> list[tuple[int, int]]:
    """Direct O(4^n) sum with twist i^wt(c&x)."""
    size = g.size
    out = []
    for u in range(size):
        re = im = 0
        for x in range(size):
            k = ((c & x).bit_count() + 2 * (g.bit(x) ^ parity(u & x))) & 3
            re += QUARTER_RE[k]
            im += QUARTER_IM[k]
        out.append((re, im))
    return out


def u_spectrum_symmetric_form(g: TruthTable, c: int) -> list[tuple[int, int]]:
    """Direct O(4^n) sum with twist (-1)^s2(c&x) * i^(c.x).

    s2 of a vector with w ones has value C(w, 2) mod 2; the dot product
    c.x is the parity of c&x.
    """
    size = g.size
    out = []
    for u in range(size):
        re = im = 0
        for x in range(size):
            w = (c & x).bit_count()
            s2 = (w * (w - 1) // 2) & 1
            k = ((w & 1) + 2 * (g.bit(x) ^ s2 ^ parity(u & x))) & 3
            re += QUARTER_RE[k]
            im += QUARTER_IM[k]
        out.append((re, im))
    return out


def v_spectrum_direct(spec: FieldSpec, g: TruthTable, c: int) -> list[tuple[int, int]]:
    """Direct O(4^n) sum using only scalar field operations."""
    size = g.size
    out = []
    for u in range(size):
        re = im = 0
        for x in range(size):
            s = g.bit(x) ^ sigma(spec, c, x) ^ trace_n(spec, fe_mul(spec, u, x))
            k = (trace_n(spec, fe_mul(spec, c, x)) + 2 * s) & 3
            re += QUARTER_RE[k]
            im += QUARTER_IM[k]
        out.append((re, im))
    return out


def twisted_values_mv(g: TruthTable, c: int) -> list[tuple[int, int]]:
    """Pointwise (-1)^g(x) * i^wt(c&x), computed scalar."""
    out = []
    for x in range(g.size):
        k = ((c & x).bit_count() + 2 * g.bit(x)) & 3
        out.append((QUARTER_RE[k], QUARTER_IM[k]))
    return out


def twisted_values_uv(spec: FieldSpec, g: TruthTable, c: int) -> list[tuple[int, int]]:
    """Pointwise (-1)^(g(x)+sigma(c,x)) * i^Tr(cx), computed scalar."""
    out = []
    for x in range(g.size):
        k = (trace_n(spec, fe_mul(spec, c, x)) + 2 * (g.bit(x) ^ sigma(spec, c, x))) & 3
        out.append((QUARTER_RE[k], QUARTER_IM[k]))
    return out


def is_permutation(values) -> bool:
    values = list(values)
    return len(set(values)) == len(values)


def spectrum_pairs(s) -> list[tuple[int, int]]:
    return [(int(re), int(im)) for re, im in s.values]
