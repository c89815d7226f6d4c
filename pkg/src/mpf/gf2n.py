"""Exact arithmetic in GF(2^n) with a polynomial-basis encoding.

Field elements are plain Python ints in [0, 2^n): bit k of the int is the
coefficient of alpha^k, where alpha is the residue class of X modulo the
irreducible modulus.  Addition is xor; 0 and 1 are the additive and
multiplicative identities.  No wrapper object is allocated per element,
so exhaustive loops over the field stay cheap.

A FieldSpec pins the degree and the modulus.  All derived lookup tables
(discrete-log pair, trace, the sigma form, the trace-dual index map) are
cached per spec and built lazily; scalar operations never need them and
work up to n = 24.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidModulusError

MAX_DEGREE = 24

# Largest degree for which the cached numpy tables are built (2^n entries
# per table); scalar arithmetic is not subject to this limit.
MAX_TABLE_DEGREE = 20


@dataclass(frozen=True)
class FieldSpec:
    """An instance of GF(2^n): degree plus irreducible modulus bits."""

    n: int
    modulus: int

    def __post_init__(self):
        if not 1 <= self.n <= MAX_DEGREE:
            raise ValueError(f"degree must be in [1, {MAX_DEGREE}], got {self.n}")
        if _poly_degree(self.modulus) != self.n:
            raise InvalidModulusError(
                f"modulus 0x{self.modulus:x} has degree {_poly_degree(self.modulus)}, "
                f"expected {self.n}"
            )
        if not poly_is_irreducible(self.modulus):
            raise InvalidModulusError(f"modulus 0x{self.modulus:x} is reducible over GF(2)")

    @property
    def order(self) -> int:
        return 1 << self.n

    def elements(self) -> range:
        return range(1 << self.n)


def _poly_degree(p: int) -> int:
    return p.bit_length() - 1


def _poly_mod(a: int, m: int) -> int:
    dm = _poly_degree(m)
    while a and _poly_degree(a) >= dm:
        a ^= m << (_poly_degree(a) - dm)
    return a


def poly_is_irreducible(p: int) -> bool:
    """Trial division by every polynomial of degree 1..deg(p)//2."""
    deg = _poly_degree(p)
    if deg < 1:
        return False
    for d in range(2, 1 << (deg // 2 + 1)):
        if _poly_mod(p, d) == 0:
            return False
    return True


_DEFAULT_MODULI: dict[int, int] = {}


def default_modulus(n: int) -> int:
    """Smallest irreducible polynomial of degree n, by integer encoding."""
    mod = _DEFAULT_MODULI.get(n)
    if mod is None:
        for cand in range(1 << n, 1 << (n + 1)):
            if poly_is_irreducible(cand):
                mod = cand
                break
        assert mod is not None  # irreducibles exist in every degree
        _DEFAULT_MODULI[n] = mod
    return mod


def make_field(n: int, modulus: int | None = None) -> FieldSpec:
    """Fix GF(2^n); with no modulus given, the smallest irreducible is used.

    Raises InvalidModulusError if the supplied modulus does not have
    degree exactly n or is reducible (the FieldSpec constructor checks).
    """
    if not 1 <= n <= MAX_DEGREE:
        raise ValueError(f"degree must be in [1, {MAX_DEGREE}], got {n}")
    return FieldSpec(n, default_modulus(n) if modulus is None else modulus)


def fe_mul(spec: FieldSpec, a: int, b: int) -> int:
    """Product of two field elements (shift-and-reduce, exact)."""
    acc = 0
    top = 1 << spec.n
    mod = spec.modulus
    while b:
        if b & 1:
            acc ^= a
        b >>= 1
        a <<= 1
        if a & top:
            a ^= mod
    return acc


def trace_n(spec: FieldSpec, a: int) -> int:
    """Absolute trace: the sum of all Frobenius conjugates, a bit in {0,1}."""
    acc = a
    t = a
    for _ in range(spec.n - 1):
        t = fe_mul(spec, t, t)
        acc ^= t
    return acc


def sigma(spec: FieldSpec, c: int, x: int) -> int:
    """Second symmetric form of the Frobenius orbit of c*x, as a bit.

    sigma(c, x) = sum over i < j of (cx)^(2^i) * (cx)^(2^j).  The sum is
    its own square, so it always lands in {0, 1}; it depends on c and x
    only through the product cx.  Computed literally as the double sum.
    """
    y = fe_mul(spec, c, x)
    if y == 0:
        return 0
    pows = [y]
    for _ in range(spec.n - 1):
        pows.append(fe_mul(spec, pows[-1], pows[-1]))
    acc = 0
    for i in range(spec.n):
        for j in range(i + 1, spec.n):
            acc ^= fe_mul(spec, pows[i], pows[j])
    return acc


def dual_mask(spec: FieldSpec, u: int) -> int:
    """Bit mask m with Tr(u*x) = parity(m & x) for every x.

    Bit k of the mask is Tr(u * alpha^k); the map u -> m is linear and
    bijective (the trace pairing is nondegenerate).
    """
    m = 0
    for k in range(spec.n):
        if trace_n(spec, fe_mul(spec, u, 1 << k)):
            m |= 1 << k
    return m


# ---------------------------------------------------------------------------
# Cached per-field lookup tables (vectorized paths)
# ---------------------------------------------------------------------------

class _FieldTables:
    """Lazily built numpy tables for one FieldSpec."""

    def __init__(self, spec: FieldSpec):
        if spec.n > MAX_TABLE_DEGREE:
            raise ValueError(
                f"lookup tables limited to n <= {MAX_TABLE_DEGREE}, got n={spec.n}"
            )
        self.spec = spec
        q = spec.order
        # Discrete-log pair over a generator of the multiplicative group.
        exp = np.zeros(q - 1 if q > 2 else 1, dtype=np.int64)
        log = np.zeros(q, dtype=np.int64)
        gen = self._find_generator()
        v = 1
        for i in range(max(q - 1, 1)):
            exp[i] = v
            log[v] = i
            v = fe_mul(spec, v, gen)
        self.exp = exp
        self.log = log
        self._trace: np.ndarray | None = None
        self._s2: np.ndarray | None = None
        self._dual: np.ndarray | None = None

    def _find_generator(self) -> int:
        spec = self.spec
        target = spec.order - 1
        for g in range(2, spec.order):
            v = g
            order = 1
            while v != 1:
                v = fe_mul(spec, v, g)
                order += 1
            if order == target:
                return g
        return 1  # n == 1: the multiplicative group is trivial

    def mul(self, a, b) -> np.ndarray:
        """Elementwise field product of integer arrays (broadcasting)."""
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        out = np.zeros(np.broadcast_shapes(a.shape, b.shape), dtype=np.int64)
        a, b = np.broadcast_arrays(a, b)
        nz = (a != 0) & (b != 0)
        m = max(self.spec.order - 1, 1)
        out[nz] = self.exp[(self.log[a[nz]] + self.log[b[nz]]) % m]
        return out

    def _frobenius_powers(self) -> list[np.ndarray]:
        q = self.spec.order
        ident = np.arange(q, dtype=np.int64)
        sq = self.mul(ident, ident)
        pows = [ident]
        for _ in range(self.spec.n - 1):
            pows.append(sq[pows[-1]])
        return pows

    @property
    def trace(self) -> np.ndarray:
        if self._trace is None:
            acc = np.zeros(self.spec.order, dtype=np.int64)
            for p in self._frobenius_powers():
                acc ^= p
            self._trace = acc  # values land in {0, 1}
        return self._trace

    @property
    def s2(self) -> np.ndarray:
        """Table of sigma(1, y) over all y; sigma(c, x) = s2[c*x]."""
        if self._s2 is None:
            pows = self._frobenius_powers()
            acc = np.zeros(self.spec.order, dtype=np.int64)
            for i in range(self.spec.n):
                for j in range(i + 1, self.spec.n):
                    acc ^= self.mul(pows[i], pows[j])
            self._s2 = acc
        return self._s2

    @property
    def dual(self) -> np.ndarray:
        """dual[u] = bit mask m with Tr(u*x) = parity(m & x)."""
        if self._dual is None:
            spec = self.spec
            out = np.zeros(spec.order, dtype=np.int64)
            for j in range(spec.n):
                step = 1 << j
                out[step:2 * step] = out[:step] ^ dual_mask(spec, 1 << j)
            self._dual = out
        return self._dual


_TABLE_CACHE: dict[FieldSpec, _FieldTables] = {}


def field_tables(spec: FieldSpec) -> _FieldTables:
    tables = _TABLE_CACHE.get(spec)
    if tables is None:
        tables = _FieldTables(spec)
        _TABLE_CACHE[spec] = tables
    return tables


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------

def field_to_json(spec: FieldSpec) -> dict:
    return {"n": spec.n, "modulus": f"0x{spec.modulus:x}"}


def field_from_json(obj: dict) -> FieldSpec:
    return make_field(int(obj["n"]), int(obj["modulus"], 16))
