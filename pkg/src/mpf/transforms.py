"""Exact twisted spectra over the Gaussian integers.

Every spectrum here is a vector of 2^n Gaussian integers, held as an
int64 array of shape (2^n, 2) with columns (re, im); never floats.
The multivariate transform twists the input by i^wt(c&x) before a
Walsh-Hadamard butterfly; the univariate transform twists by the sigma
form and i^Tr(cx), runs the same butterfly, then reindexes through the
trace-dual map so that position u carries the character x -> (-1)^Tr(ux).

Flatness (every squared modulus equal to 2^n) at some twist c is the
bent4 property; c = 0 is ordinary bentness and the all-ones / unit twist
is negabentness.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .boolfun import TruthTable
from .errors import NonPowerOfTwoError
from .gf2n import FieldSpec, field_tables


class GaussianInt(NamedTuple):
    re: int
    im: int

    @property
    def norm_sq(self) -> int:
        return self.re * self.re + self.im * self.im


# Real and imaginary parts of i^k for k = 0..3.
_I_RE = np.array([1, 0, -1, 0], dtype=np.int64)
_I_IM = np.array([0, 1, 0, -1], dtype=np.int64)


@dataclass(frozen=True)
class Spectrum:
    """2^n exact transform values with the twist that produced them."""

    n: int
    mode: str
    twist: int
    values: np.ndarray  # shape (2^n, 2), int64, columns (re, im)

    def __post_init__(self):
        v = np.asarray(self.values, dtype=np.int64)
        if v.shape != (1 << self.n, 2):
            raise ValueError(f"values must have shape ({1 << self.n}, 2)")
        v.flags.writeable = False
        object.__setattr__(self, "values", v)

    @property
    def size(self) -> int:
        return 1 << self.n

    def value(self, u: int) -> GaussianInt:
        re, im = self.values[u]
        return GaussianInt(int(re), int(im))

    def norms_sq(self) -> np.ndarray:
        re = self.values[:, 0]
        im = self.values[:, 1]
        return re * re + im * im


def _popcount(arr: np.ndarray) -> np.ndarray:
    if hasattr(np, "bitwise_count"):
        return np.bitwise_count(arr)
    out = np.zeros(arr.shape, dtype=np.uint64)
    v = arr.astype(np.uint64)
    while v.any():
        out += v & 1
        v >>= np.uint64(1)
    return out


def fwht(values) -> np.ndarray:
    """Walsh-Hadamard butterfly along axis 0, exact in int64.

    Accepts a length-2^k integer array of any trailing shape; a Gaussian
    vector is the (2^k, 2) case.  output[u] = sum_x values[x] * (-1)^(u.x).
    Unnormalized: applying it twice multiplies by 2^k.
    """
    a = np.asarray(values)
    if not np.issubdtype(a.dtype, np.integer):
        if a.dtype != object:
            raise TypeError("fwht needs integer input; spectra are exact")
        try:
            a = a.astype(np.int64)
        except (TypeError, ValueError):
            raise TypeError("fwht needs integer input; spectra are exact")
    size = a.shape[0]
    if size == 0 or size & (size - 1):
        raise NonPowerOfTwoError(f"length {size} is not a power of two")
    out = a.astype(np.int64, copy=True)
    scratch = np.empty((size // 2, *out.shape[1:]), dtype=np.int64)
    h = 1
    while h < size:
        v = out.reshape(size // (2 * h), 2, h, *out.shape[1:])
        lo, hi = v[:, 0], v[:, 1]
        diff = scratch.reshape(lo.shape)
        np.subtract(lo, hi, out=diff)
        np.add(lo, hi, out=lo)
        hi[...] = diff
        h *= 2
    return out


def _gaussian_from_quarter_turns(k: np.ndarray) -> np.ndarray:
    """Stack i^k as an (N, 2) Gaussian vector, k reduced mod 4."""
    k = k & 3
    return np.stack([_I_RE[k], _I_IM[k]], axis=1)


def twisted_input_mv(g: TruthTable, c: int) -> np.ndarray:
    """Pointwise twist (-1)^g(x) * i^wt(c&x) as a Gaussian vector."""
    x = np.arange(g.size, dtype=np.uint64)
    w = _popcount(x & np.uint64(c)).astype(np.int64)
    k = (w + 2 * g.bit_array().astype(np.int64)) & 3
    return _gaussian_from_quarter_turns(k)


def twisted_input_uv(spec: FieldSpec, g: TruthTable, c: int) -> np.ndarray:
    """Pointwise twist (-1)^(g(x)+sigma(c,x)) * i^Tr(cx) as a Gaussian vector."""
    t = field_tables(spec)
    cx = t.mul(c, np.arange(spec.order, dtype=np.int64))
    k = (t.trace[cx] + 2 * (t.s2[cx] ^ g.bit_array().astype(np.int64))) & 3
    return _gaussian_from_quarter_turns(k)


def transform_U(g: TruthTable, c: int) -> Spectrum:
    """Twisted spectrum of a multivariate g at twist c.

    U(u) = sum_x (-1)^(g(x)+u.x) * i^wt(c&x).  c = 0 is the ordinary
    Walsh-Hadamard spectrum, c = all-ones the nega-Hadamard spectrum.
    """
    if g.mode != "mv":
        raise ValueError("transform_U needs a multivariate table")
    if not 0 <= c < g.size:
        raise ValueError("twist c out of range")
    return Spectrum(g.n, "mv", c, fwht(twisted_input_mv(g, c)))


def transform_V(spec: FieldSpec, g: TruthTable, c: int) -> Spectrum:
    """Twisted spectrum of a univariate g at twist c.

    V(u) = sum_x (-1)^(g(x)+sigma(c,x)) * i^Tr(cx) * (-1)^Tr(ux).
    c = 0 is the univariate Walsh-Hadamard spectrum (characters Tr(ux)),
    c = 1 the univariate nega-Hadamard spectrum.
    """
    if g.mode != "uv":
        raise ValueError("transform_V needs a univariate table")
    if spec.n != g.n:
        raise ValueError("field degree does not match the table")
    if not 0 <= c < g.size:
        raise ValueError("twist c out of range")
    w = fwht(twisted_input_uv(spec, g, c))
    return Spectrum(g.n, "uv", c, w[field_tables(spec).dual])


def is_flat(s: Spectrum) -> bool:
    """True iff every value has squared modulus exactly 2^n."""
    return bool((s.norms_sq() == s.size).all())


def bent4_witnesses(g: TruthTable, spec: FieldSpec | None = None) -> set[int]:
    """All twists c whose spectrum of g is flat.

    Nonempty means g is bent4; membership of 0 means bent, and of the
    all-ones point (mv) or the unit element (uv) means negabent.
    """
    if g.mode == "uv":
        if spec is None:
            raise ValueError("univariate witnesses need the field spec")
        return {c for c in range(g.size) if is_flat(transform_V(spec, g, c))}
    return {c for c in range(g.size) if is_flat(transform_U(g, c))}


def inverse_twisted(s: Spectrum, spec: FieldSpec | None = None) -> np.ndarray:
    """Recover the twisted point values from a spectrum, exactly.

    Returns the Gaussian vector h with h(x) = (-1)^g(x) * (twist at x);
    the inverse is fixed as 1/2^n of the matching character sum, so
    inverse_twisted(transform(g, c)) round-trips to the twisted input.
    """
    w = fwht(s.values)
    if s.mode == "uv":
        if spec is None:
            raise ValueError("univariate inversion needs the field spec")
        w = w[field_tables(spec).dual]
    if (w & (s.size - 1)).any():
        raise ValueError("spectrum is not in the image of the transform")
    return w >> int(s.n)
