"""Dense linear algebra over a prime field F_p.

Residues live in int64 arrays whenever (p-1)**2 fits in a signed 64-bit
word, i.e. p < 2**31.5; larger primes fall back to object arrays of
Python ints (exact, slower).
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

DEFAULT_PRIME = 2**31 - 1

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(p: int) -> bool:
    """Deterministic Miller-Rabin; exact for every p < 3.3e24."""
    if p < 2:
        return False
    for q in _MR_BASES:
        if p % q == 0:
            return p == q
    d, s = p - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, p)
        if x in (1, p - 1):
            continue
        for _ in range(s - 1):
            x = x * x % p
            if x == p - 1:
                break
        else:
            return False
    return True


class PrimeField:
    """The field F_p; construction checks primality."""

    def __init__(self, p: int = DEFAULT_PRIME):
        p = int(p)
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p

    @property
    def dtype(self):
        return np.int64 if (self.p - 1) ** 2 < 2**63 else object

    def array(self, values) -> np.ndarray:
        arr = np.asarray(values, dtype=object) % self.p
        return arr.astype(self.dtype)

    def zeros(self, shape) -> np.ndarray:
        if self.dtype is object:
            out = np.empty(shape, dtype=object)
            out.fill(0)
            return out
        return np.zeros(shape, dtype=np.int64)

    def random_point(self, rng: np.random.Generator, v: int) -> np.ndarray:
        """``v`` residues drawn uniformly from [0, p)."""
        if v == 0:
            return self.zeros(0)
        if self.dtype is object:
            return np.array([int(rng.integers(0, self.p)) for _ in range(v)], dtype=object)
        return rng.integers(0, self.p, size=v, dtype=np.int64)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(self.p)

    def __repr__(self):
        return f"PrimeField({self.p})"


def make_rng(seed: int, *stream: int) -> np.random.Generator:
    """Deterministic generator for ``seed`` and an optional sub-stream path."""
    return np.random.default_rng([int(seed) & (2**64 - 1), *stream])


@dataclass(frozen=True)
class FpMatrix:
    """Dense matrix over F_p (row-major residues in [0, p))."""

    entries: np.ndarray
    field: PrimeField

    def __post_init__(self):
        e = self.entries
        if e.ndim != 2:
            raise ValueError("FpMatrix entries must be 2-dimensional")

    @classmethod
    def from_rows(cls, rows, field: PrimeField, cols: int | None = None):
        rows = list(rows)
        if not rows:
            return cls(field.zeros((0, cols or 0)), field)
        return cls(field.array(rows), field)

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    @property
    def shape(self):
        return self.entries.shape

    def vstack(self, other: FpMatrix) -> FpMatrix:
        if other.field != self.field:
            raise ValueError("cannot stack matrices over different fields")
        return FpMatrix(np.vstack([self.entries, other.entries]), self.field)

    def rank(self) -> int:
        return rank(self)


def rank(m: FpMatrix | np.ndarray, p: int | None = None) -> int:
    """Rank over F_p by Gaussian elimination with modular inverses.

    Accepts an FpMatrix, or a plain integer array together with ``p``.
    """
    if isinstance(m, FpMatrix):
        arr, p = m.entries, m.field.p
    else:
        if p is None:
            raise TypeError("p is required for a plain array")
        arr = np.asarray(m)
    if arr.size == 0:
        return 0
    dtype = np.int64 if (p - 1) ** 2 < 2**63 else object
    M = (np.asarray(arr, dtype=object) % p).astype(dtype) if arr.dtype != dtype else arr % p
    if M.shape[0] > M.shape[1]:
        M = M.T
    M = np.array(M, copy=True)
    nrows, ncols = M.shape
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        col = M[r:, c]
        nz = np.flatnonzero(col)
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            M[[r, piv], c:] = M[[piv, r], c:]
        inv = pow(int(M[r, c]), p - 2, p)
        M[r, c:] = M[r, c:] * inv % p
        below = r + 1 + np.flatnonzero(M[r + 1:, c])
        if below.size:
            factors = M[below, c]
            M[below, c:] = (M[below, c:] - np.outer(factors, M[r, c:]) % p) % p
        r += 1
    return r
