"""Deterministic enumeration and filtering of vectorial functions.

Candidates are indexed by integers: an index is read as base-2^n digits
over a fixed slot list (table entries for the `all` class, polynomial
coefficients for the DO classes), so any shard can decode its own range
without coordination.  Reports merge shard results in index order and
are byte-identical for any shard count.  Sampled jobs draw indices from
a SHA-256 counter keyed by the seed, which is stable across platforms.
"""

from __future__ import annotations

import hashlib
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .errors import FilterDisagreementError, SearchBoundsError
from .gf2n import make_field
from .planar import (
    DOPolynomial,
    VectorialFunction,
    do_to_table,
    function_to_json,
    is_modified_planar_components,
    is_modified_planar_perm,
)

CLASSES = ("all", "affine", "do_quadratic", "do_plus_affine")
FILTERS = ("perm", "components", "both")

# Largest n per class for exhaustive jobs; sampled jobs only need the
# candidate space to be indexable.
_EXHAUSTIVE_BOUNDS = {"all": 2, "affine": 4, "do_quadratic": 5, "do_plus_affine": 5}

REPORT_FUNCTION_CAP = 10_000


@dataclass(frozen=True)
class SearchJob:
    mode: str
    n: int
    klass: str
    filter: str = "both"
    shards: int = 1
    seed: int = 0
    sample: int | None = None

    def __post_init__(self):
        if self.mode not in ("mv", "uv"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.klass not in CLASSES:
            raise ValueError(f"unknown class {self.klass!r}")
        if self.filter not in FILTERS:
            raise ValueError(f"unknown filter {self.filter!r}")
        if self.mode == "mv" and self.klass != "all":
            raise ValueError("polynomial classes are univariate; use mode uv")
        if self.shards < 1:
            raise ValueError("shards must be >= 1")
        if self.sample is not None and self.sample < 0:
            raise ValueError("sample must be >= 0")


@dataclass(frozen=True)
class SearchReport:
    examined: int
    passing: int
    passing_functions: tuple[tuple[int, ...], ...]
    cross_check: bool | None


def _slot_count(n: int, klass: str) -> int:
    if klass == "all":
        return 1 << n
    quad = n * (n - 1) // 2
    if klass == "affine":
        return n + 1
    if klass == "do_quadratic":
        return quad
    return quad + n + 1


def class_size(mode: str, n: int, klass: str) -> int:
    if mode == "mv" and klass != "all":
        raise ValueError("polynomial classes are univariate; use mode uv")
    return 1 << (n * _slot_count(n, klass))


def _digits(index: int, q: int, count: int) -> list[int]:
    out = []
    for _ in range(count):
        out.append(index % q)
        index //= q
    return out


def candidate_function(mode: str, n: int, klass: str, index: int) -> VectorialFunction:
    """Decode the index-th candidate of a class, in canonical order."""
    q = 1 << n
    digits = _digits(index, q, _slot_count(n, klass))
    if klass == "all":
        if mode == "mv":
            return VectorialFunction("mv", n, tuple(digits))
        return VectorialFunction("uv", n, tuple(digits), make_field(n))
    spec = make_field(n)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    quad: dict[tuple[int, int], int] = {}
    lin: dict[int, int] = {}
    const = 0
    pos = 0
    if klass in ("do_quadratic", "do_plus_affine"):
        for pair in pairs:
            if digits[pos]:
                quad[pair] = digits[pos]
            pos += 1
    if klass in ("affine", "do_plus_affine"):
        for i in range(n):
            if digits[pos]:
                lin[i] = digits[pos]
            pos += 1
        const = digits[pos]
    return do_to_table(DOPolynomial(spec, quad, lin, const))


def enumerate_class(mode: str, n: int, klass: str):
    """Yield every function of a class exactly once, in canonical order."""
    _check_bounds(mode, n, klass)
    for index in range(class_size(mode, n, klass)):
        yield candidate_function(mode, n, klass, index)


def _check_bounds(mode: str, n: int, klass: str) -> None:
    bound = _EXHAUSTIVE_BOUNDS[klass]
    if n > bound:
        raise SearchBoundsError(
            f"exhaustive {klass} jobs are limited to n <= {bound}, got n={n}"
        )


def _sample_index(seed: int, counter: int, size: int) -> int:
    digest = hashlib.sha256(f"{seed}:{counter}".encode()).digest()
    return int.from_bytes(digest, "big") % size


def _passes(F: VectorialFunction, filt: str):
    """(verdict, disagreement) for one candidate under the chosen filter."""
    if filt == "perm":
        return is_modified_planar_perm(F).is_planar, False
    if filt == "components":
        return is_modified_planar_components(F), False
    by_perm = is_modified_planar_perm(F).is_planar
    by_components = is_modified_planar_components(F)
    return by_perm, by_perm != by_components


def _run_shard(payload: tuple) -> tuple[int, list[int], int | None]:
    mode, n, klass, filt, seed, sample, lo, hi = payload
    size = class_size(mode, n, klass)
    examined = 0
    passing: list[int] = []
    for counter in range(lo, hi):
        index = counter if sample is None else _sample_index(seed, counter, size)
        F = candidate_function(mode, n, klass, index)
        verdict, disagreement = _passes(F, filt)
        if disagreement:
            return examined, passing, index
        examined += 1
        if verdict:
            passing.append(counter)
    return examined, passing, None


def run_search(job: SearchJob, stream=None) -> SearchReport:
    """Run a search job; the report is identical for any shard count.

    stream, if given, is a writable text file or a path: every passing
    function is written to it as one JSON object per line (not capped).
    """
    if job.sample is None:
        _check_bounds(job.mode, job.n, job.klass)
        total = class_size(job.mode, job.n, job.klass)
    else:
        total = job.sample
    chunks = [
        (s * total // job.shards, (s + 1) * total // job.shards)
        for s in range(job.shards)
    ]
    payloads = [
        (job.mode, job.n, job.klass, job.filter, job.seed, job.sample, lo, hi)
        for lo, hi in chunks
    ]
    if job.shards == 1:
        results = [_run_shard(payloads[0])]
    else:
        with ProcessPoolExecutor(max_workers=job.shards) as pool:
            results = list(pool.map(_run_shard, payloads))
    examined = 0
    passing_counters: list[int] = []
    for shard_examined, shard_passing, disagreement in results:
        if disagreement is not None:
            F = candidate_function(job.mode, job.n, job.klass, disagreement)
            raise FilterDisagreementError(
                f"planarity filters disagree at index {disagreement}", F
            )
        examined += shard_examined
        passing_counters.extend(shard_passing)
    passing_counters.sort()

    def decode(counter: int) -> VectorialFunction:
        index = (
            counter
            if job.sample is None
            else _sample_index(job.seed, counter, class_size(job.mode, job.n, job.klass))
        )
        return candidate_function(job.mode, job.n, job.klass, index)

    kept = tuple(
        decode(counter).table for counter in passing_counters[:REPORT_FUNCTION_CAP]
    )
    if stream is not None:
        close = False
        out = stream
        if isinstance(stream, (str, bytes)):
            out = open(stream, "w")
            close = True
        try:
            for counter in passing_counters:
                out.write(json.dumps(function_to_json(decode(counter))) + "\n")
        finally:
            if close:
                out.close()
    cross_check = True if job.filter == "both" else None
    return SearchReport(examined, len(passing_counters), kept, cross_check)


def report_to_json(report: SearchReport) -> dict:
    return {
        "examined": report.examined,
        "passing": report.passing,
        "cross_check": report.cross_check,
        "functions": [[f"0x{v:x}" for v in table] for table in report.passing_functions],
    }
