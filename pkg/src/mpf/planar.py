"""Vectorial functions and the modified-planarity verdicts.

A function F on 2^n points is stored as a tuple of outputs in encoding
order, tagged mv (outputs are coordinate vectors) or uv (outputs are
field elements).  Modified planarity can be decided two independent
ways: directly from the permutation definition (every shifted
derivative F(x+a) + F(x) + a*x must be a bijection), or through the
components, whose twisted spectra must all be flat.  The two verdicts
coincide; the library keeps both routes so they can cross-check each
other.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .boolfun import TruthTable, pack_bits
from .errors import ZeroComponentError
from .gf2n import FieldSpec, fe_mul, field_from_json, field_tables, field_to_json
from .transforms import is_flat, transform_U, transform_V


@dataclass(frozen=True)
class VectorialFunction:
    """Table of 2^n outputs in [0, 2^n), in either setting."""

    mode: str
    n: int
    table: tuple[int, ...]
    spec: FieldSpec | None = None

    def __post_init__(self):
        if self.mode not in ("mv", "uv"):
            raise ValueError(f"unknown mode {self.mode!r}")
        object.__setattr__(self, "table", tuple(self.table))
        size = 1 << self.n
        if len(self.table) != size:
            raise ValueError(f"table must have {size} entries")
        if any(not 0 <= v < size for v in self.table):
            raise ValueError("table entries out of range")
        if self.mode == "uv":
            if self.spec is None or self.spec.n != self.n:
                raise ValueError("univariate functions need a matching field spec")
        elif self.spec is not None:
            raise ValueError("multivariate functions carry no field spec")

    @property
    def size(self) -> int:
        return 1 << self.n


@dataclass(frozen=True)
class DOPolynomial:
    """Polynomial with quadratic part restricted to exponents 2^i + 2^j.

    quad maps (i, j) with i < j to the coefficient of x^(2^i + 2^j);
    linearized maps i to the coefficient of x^(2^i).  Exponents 2^(i+1)
    (the i = j case) belong to the linearized part, which keeps the
    quadratic/affine split canonical.
    """

    spec: FieldSpec
    quad: dict[tuple[int, int], int] = field(default_factory=dict)
    linearized: dict[int, int] = field(default_factory=dict)
    constant: int = 0

    def __post_init__(self):
        n = self.spec.n
        for (i, j) in self.quad:
            if not 0 <= i < j <= n - 1:
                raise ValueError(f"quadratic exponent pair {(i, j)} out of range")
        for i in self.linearized:
            if not 0 <= i <= n - 1:
                raise ValueError(f"linearized exponent index {i} out of range")
        if not 0 <= self.constant < self.spec.order:
            raise ValueError("constant term out of range")


def do_to_table(p: DOPolynomial) -> VectorialFunction:
    """Evaluate a DO polynomial on every point of the field."""
    spec = p.spec
    n = spec.n
    table = []
    for x in spec.elements():
        pows = [x]
        for _ in range(n - 1):
            pows.append(fe_mul(spec, pows[-1], pows[-1]))
        acc = p.constant
        for (i, j), a in p.quad.items():
            acc ^= fe_mul(spec, a, fe_mul(spec, pows[i], pows[j]))
        for i, b in p.linearized.items():
            acc ^= fe_mul(spec, b, pows[i])
        table.append(acc)
    return VectorialFunction("uv", n, tuple(table), spec)


def component_mv(F: VectorialFunction, c: int) -> TruthTable:
    """Boolean component x -> c . F(x) (dot product of coordinate bits)."""
    if F.mode != "mv":
        raise ValueError("component_mv needs a multivariate function")
    if c == 0:
        raise ZeroComponentError("components are defined for nonzero c only")
    if not 0 < c < F.size:
        raise ValueError("c out of range")
    bits = 0
    for x, v in enumerate(F.table):
        if (c & v).bit_count() & 1:
            bits |= 1 << x
    return TruthTable(F.n, bits, "mv")


def component_uv(spec: FieldSpec, F: VectorialFunction, c: int) -> TruthTable:
    """Boolean component x -> Tr(c^2 F(x)), indexed by the twist c.

    Squaring is a bijection of the nonzero elements, so ranging c over
    them still covers every nonzero linear functional exactly once.
    """
    if F.mode != "uv":
        raise ValueError("component_uv needs a univariate function")
    if spec != F.spec:
        raise ValueError("field spec does not match the function")
    if c == 0:
        raise ZeroComponentError("components are defined for nonzero c only")
    if not 0 < c < F.size:
        raise ValueError("c out of range")
    t = field_tables(spec)
    out = t.trace[t.mul(fe_mul(spec, c, c), np.asarray(F.table, dtype=np.int64))]
    return TruthTable(F.n, pack_bits(out), "uv")


@dataclass(frozen=True)
class PlanarVerdict:
    """Outcome of the permutation route, with a first failure witness."""

    is_planar: bool
    witness_a: int | None = None
    collision: tuple[int, int] | None = None

    def __bool__(self) -> bool:
        return self.is_planar


def _first_collision(values: list[int]) -> tuple[int, int]:
    """Lexicographically smallest (x1, x2), x1 < x2, with equal values."""
    first_seen: dict[int, int] = {}
    best: tuple[int, int] | None = None
    for x, v in enumerate(values):
        if v in first_seen:
            pair = (first_seen[v], x)
            if best is None or pair < best:
                best = pair
        else:
            first_seen[v] = x
    assert best is not None
    return best


def is_modified_planar_perm(F: VectorialFunction) -> PlanarVerdict:
    """Permutation-definition verdict: F(x+a) + F(x) + a*x bijective for all a != 0.

    The cross term a*x is the coordinatewise product for mv and the
    field product for uv.  On failure the witness is the smallest bad
    direction a, with the lexicographically smallest colliding pair.
    """
    size = F.size
    table = F.table
    uv = F.mode == "uv"
    if uv:
        mul = field_tables(F.spec).mul
        arange = np.arange(size, dtype=np.int64)
    for a in range(1, size):
        if uv:
            cross = mul(a, arange)
            values = [table[x ^ a] ^ table[x] ^ int(cross[x]) for x in range(size)]
        else:
            values = [table[x ^ a] ^ table[x] ^ (a & x) for x in range(size)]
        seen = 0
        collided = False
        for v in values:
            bit = 1 << v
            if seen & bit:
                collided = True
                break
            seen |= bit
        if collided:
            return PlanarVerdict(False, a, _first_collision(values))
    return PlanarVerdict(True)


def is_modified_planar_components(F: VectorialFunction) -> bool:
    """Component-spectrum verdict: every component flat at its own twist."""
    if F.mode == "uv":
        return all(
            is_flat(transform_V(F.spec, component_uv(F.spec, F, c), c))
            for c in range(1, F.size)
        )
    return all(is_flat(transform_U(component_mv(F, c), c)) for c in range(1, F.size))


def is_modified_planar(F: VectorialFunction, method: str = "auto") -> bool:
    """Boolean planarity verdict; auto picks the cheaper route by size."""
    if method == "auto":
        method = "perm" if F.n <= 14 else "components"
    if method == "perm":
        return is_modified_planar_perm(F).is_planar
    if method == "components":
        return is_modified_planar_components(F)
    raise ValueError(f"unknown method {method!r}")


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------

def function_to_json(F: VectorialFunction) -> dict:
    obj = {
        "mode": F.mode,
        "n": F.n,
        "field": field_to_json(F.spec) if F.spec is not None else None,
        "table": [f"0x{v:x}" for v in F.table],
    }
    return obj


def function_from_json(obj: dict) -> VectorialFunction:
    spec = field_from_json(obj["field"]) if obj.get("field") else None
    table = tuple(int(v, 16) for v in obj["table"])
    return VectorialFunction(obj["mode"], int(obj["n"]), table, spec)


def do_to_json(p: DOPolynomial) -> dict:
    return {
        "quad": {f"{i},{j}": f"0x{a:x}" for (i, j), a in sorted(p.quad.items())},
        "lin": {str(i): f"0x{b:x}" for i, b in sorted(p.linearized.items())},
        "const": f"0x{p.constant:x}",
    }


def do_from_json(spec: FieldSpec, obj: dict) -> DOPolynomial:
    quad = {}
    for key, a in obj.get("quad", {}).items():
        i, j = (int(s) for s in key.split(","))
        quad[(i, j)] = int(a, 16)
    lin = {int(i): int(b, 16) for i, b in obj.get("lin", {}).items()}
    return DOPolynomial(spec, quad, lin, int(obj.get("const", "0x0"), 16))
