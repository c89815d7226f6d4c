"""Twisted groups of exponent 4, their characters, and RDS verifiers.

The two star groups put a graph-of-a-function difference structure on
pairs: (x1,y1) * (x2,y2) = (x1+x2, y1+y2+x1*x2), with the cross term the
coordinatewise product (star_mv) or the field product (star_uv).  Both
are isomorphic to Z_4^n; the z4n law is carried as a sanity baseline.

A subset R is a relative difference set when every element outside the
forbidden subgroup N = {0} x F has the same number of ordered-difference
representations from R and no nonidentity element of N has any.  Two
independent verifiers are provided: exhaustive difference counting, and
the character-modulus criterion specialized to (2^n, 2^n, 2^n, 1)
parameters.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import (
    ForbiddenSubgroupError,
    NotASubgroupError,
    UnsupportedGroupLawError,
)
from .gf2n import FieldSpec, fe_mul, field_from_json, field_tables, field_to_json
from .planar import VectorialFunction
from .transforms import GaussianInt

LAWS = ("star_mv", "star_uv", "z4n")

Element = tuple[int, ...]


@dataclass(frozen=True)
class GroupSpec:
    law: str
    n: int
    spec: FieldSpec | None = None

    def __post_init__(self):
        if self.law not in LAWS:
            raise ValueError(f"unknown law {self.law!r}")
        if self.law == "star_uv":
            if self.spec is None or self.spec.n != self.n:
                raise ValueError("star_uv needs a matching field spec")
        elif self.spec is not None:
            raise ValueError(f"{self.law} carries no field spec")

    @property
    def order(self) -> int:
        return 1 << (2 * self.n)


def group_identity(g: GroupSpec) -> Element:
    if g.law == "z4n":
        return (0,) * g.n
    return (0, 0)


def group_elements(g: GroupSpec) -> Iterator[Element]:
    if g.law == "z4n":
        for t in range(4 ** g.n):
            yield tuple((t >> (2 * k)) & 3 for k in range(g.n))
    else:
        q = 1 << g.n
        for x in range(q):
            for y in range(q):
                yield (x, y)


def group_op(g: GroupSpec, a: Element, b: Element) -> Element:
    if g.law == "z4n":
        return tuple((u + v) & 3 for u, v in zip(a, b))
    x1, y1 = a
    x2, y2 = b
    if g.law == "star_mv":
        return (x1 ^ x2, y1 ^ y2 ^ (x1 & x2))
    return (x1 ^ x2, y1 ^ y2 ^ fe_mul(g.spec, x1, x2))


def group_inverse(g: GroupSpec, a: Element) -> Element:
    if g.law == "z4n":
        return tuple((-u) & 3 for u in a)
    x, y = a
    if g.law == "star_mv":
        return (x, y ^ x)
    return (x, y ^ fe_mul(g.spec, x, x))


_I_UNITS = (
    GaussianInt(1, 0),
    GaussianInt(0, 1),
    GaussianInt(-1, 0),
    GaussianInt(0, -1),
)


def character_eval(g: GroupSpec, u: int, c: int, a: Element) -> GaussianInt:
    """The (u, c)-indexed character at a group element: a fourth root of unity.

    star_mv: (-1)^(u.x + c.y) * i^wt(c&x)
    star_uv: (-1)^(Tr(ux) + Tr(c^2 y) + sigma(c,x)) * i^Tr(cx)
    """
    x, y = a
    if g.law == "star_mv":
        sign = ((u & x).bit_count() + (c & y).bit_count()) & 1
        k = ((c & x).bit_count() + 2 * sign) & 3
    elif g.law == "star_uv":
        spec = g.spec
        t = field_tables(spec)
        tr = t.trace
        cx = fe_mul(spec, c, x)
        c2 = fe_mul(spec, c, c)
        sign = (int(tr[fe_mul(spec, u, x)]) ^ int(tr[fe_mul(spec, c2, y)]) ^ int(t.s2[cx])) & 1
        k = (int(tr[cx]) + 2 * sign) & 3
    else:
        raise UnsupportedGroupLawError("characters are only provided for the star laws")
    return _I_UNITS[k]


@dataclass(frozen=True)
class RdsReport:
    mu: int
    nu: int
    k: int
    lam: int | None
    is_rds: bool
    failing_element: Element | None = None
    failing_count: int | None = None


def _check_subgroup(g: GroupSpec, N: frozenset) -> None:
    if group_identity(g) not in N:
        raise NotASubgroupError("identity missing from N")
    for a in N:
        if group_inverse(g, a) not in N:
            raise NotASubgroupError(f"N not closed under inverse at {a}")
        for b in N:
            if group_op(g, a, b) not in N:
                raise NotASubgroupError(f"N not closed under the group law at {a}, {b}")


def rds_verify_bruteforce(g: GroupSpec, R: Iterable[Element], N: Iterable[Element]) -> RdsReport:
    """Exhaustive ordered-difference count, d = r1 * r2^(-1).

    The ordered-difference convention is fixed as r1 * r2^(-1); for
    these groups the verdict does not depend on the choice.
    """
    R = list(R)
    N = frozenset(N)
    _check_subgroup(g, N)
    identity = group_identity(g)
    counts: Counter = Counter()
    inverses = {r: group_inverse(g, r) for r in set(R)}
    for r1 in R:
        for r2 in R:
            if r1 != r2:
                counts[group_op(g, r1, inverses[r2])] += 1
    order = g.order
    nu = len(N)
    k = len(R)
    mu = order // nu
    off_n = order - nu
    lam_target = k * (k - 1) // off_n if k * (k - 1) % off_n == 0 else None
    failing = None
    failing_count = None
    for d in sorted(group_elements(g)):
        if d == identity:
            continue
        have = counts.get(d, 0)
        want = 0 if d in N else lam_target
        if want is None or have != want:
            failing = d
            failing_count = have
            break
    is_rds = failing is None and lam_target is not None
    return RdsReport(mu, nu, k, lam_target, is_rds, failing, failing_count)


def forbidden_subgroup(g: GroupSpec) -> frozenset:
    """The canonical forbidden subgroup {0} x F."""
    if g.law == "z4n":
        raise UnsupportedGroupLawError("forbidden subgroup is defined for the star laws")
    q = 1 << g.n
    return frozenset((0, y) for y in range(q))


def rds_verify_characters(g: GroupSpec, R: Iterable[Element], N: Iterable[Element]) -> bool:
    """Character-modulus criterion at (2^n, 2^n, 2^n, 1) parameters.

    True iff |chi_{u,c}(R)|^2 = 2^n for every c != 0 and every u,
    |chi_{u,0}(R)| = 0 for u != 0, and |chi_{0,0}(R)| = 2^n.  Only the
    canonical forbidden subgroup is supported; the criterion is not
    generalized to other parameter families.
    """
    if g.law not in ("star_mv", "star_uv"):
        raise UnsupportedGroupLawError("characters are only provided for the star laws")
    if frozenset(N) != forbidden_subgroup(g):
        raise ForbiddenSubgroupError("N must be the canonical forbidden subgroup {0} x F")
    R = list(R)
    q = 1 << g.n
    for c in range(q):
        for u in range(q):
            re = 0
            im = 0
            for r in R:
                v = character_eval(g, u, c, r)
                re += v.re
                im += v.im
            norm = re * re + im * im
            if c == 0 and u == 0:
                if norm != q * q:
                    return False
            elif c == 0:
                if norm != 0:
                    return False
            elif norm != q:
                return False
    return True


def graph_of(F: VectorialFunction) -> set[Element]:
    """The 2^n-point set {(x, F(x))} inside the matching star group."""
    return {(x, v) for x, v in enumerate(F.table)}


def group_for(F: VectorialFunction) -> GroupSpec:
    """The star group a function's graph lives in."""
    if F.mode == "uv":
        return GroupSpec("star_uv", F.n, F.spec)
    return GroupSpec("star_mv", F.n)


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------

def group_to_json(g: GroupSpec) -> dict:
    obj = {"law": g.law, "n": g.n}
    if g.spec is not None:
        obj["field"] = field_to_json(g.spec)
    return obj


def group_from_json(obj: dict) -> GroupSpec:
    spec = field_from_json(obj["field"]) if obj.get("field") else None
    return GroupSpec(obj["law"], int(obj["n"]), spec)


def elements_to_json(elements: Iterable[Element]) -> list:
    return [[f"0x{v:x}" for v in e] for e in sorted(elements)]


def elements_from_json(items: Iterable) -> list[Element]:
    return [tuple(int(v, 16) for v in e) for e in items]


def report_to_json(report: RdsReport) -> dict:
    return {
        "parameters": {"mu": report.mu, "nu": report.nu, "k": report.k, "lambda": report.lam},
        "is_rds": report.is_rds,
        "failing_element": (
            [f"0x{v:x}" for v in report.failing_element]
            if report.failing_element is not None
            else None
        ),
        "failing_count": report.failing_count,
    }
