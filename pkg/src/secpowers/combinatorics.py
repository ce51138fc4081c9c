"""Multi-indices, binomials and the closed-form dimension counts.

All counts are Python ints, so nothing overflows even for the large
binomials that appear in the bound tables.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import comb

import numpy as np


@dataclass(frozen=True)
class MultiIndex:
    """Exponent vector of a monomial.

    Ordering is graded: lower degree first, then within a degree the
    monomial with the larger power of the earlier variable comes first
    (``x0**2 < x0*x1 < x1**2``). Sorting a list of MultiIndex therefore
    reproduces the order of :func:`enumerate_monomials`.
    """

    exponents: tuple[int, ...]
    degree: int = field(init=False, compare=False)

    def __post_init__(self):
        exps = tuple(int(e) for e in self.exponents)
        if any(e < 0 for e in exps):
            raise ValueError(f"negative exponent in {exps}")
        object.__setattr__(self, "exponents", exps)
        object.__setattr__(self, "degree", sum(exps))

    def _key(self):
        return (self.degree, tuple(-e for e in self.exponents))

    def __lt__(self, other):
        return self._key() < other._key()

    def __le__(self, other):
        return self._key() <= other._key()

    def __gt__(self, other):
        return self._key() > other._key()

    def __ge__(self, other):
        return self._key() >= other._key()

    def __len__(self):
        return len(self.exponents)

    def __iter__(self):
        return iter(self.exponents)

    def __getitem__(self, i):
        return self.exponents[i]


def binom(a: int, b: int) -> int:
    """C(a, b), with the convention C(a, b) = 0 for b < 0 or b > a."""
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)


def num_monomials(n: int, b: int) -> int:
    """Number of degree-``b`` monomials in ``n + 1`` variables."""
    if n < 0 or b < 0:
        raise ValueError("n and b must be non-negative")
    return comb(n + b, n)


@lru_cache(maxsize=None)
def _exponent_tuples(n: int, b: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((b,),)
    out = []
    for first in range(b, -1, -1):
        for rest in _exponent_tuples(n - 1, b - first):
            out.append((first,) + rest)
    return tuple(out)


def enumerate_monomials(n: int, b: int) -> list[MultiIndex]:
    """All degree-``b`` multi-indices over ``n + 1`` variables, graded-lex order."""
    if n < 0 or b < 0:
        raise ValueError("n and b must be non-negative")
    return [MultiIndex(e) for e in _exponent_tuples(n, b)]


@lru_cache(maxsize=None)
def exponent_matrix(n: int, b: int) -> np.ndarray:
    """Exponents of :func:`enumerate_monomials` stacked as an int64 array.

    Shape ``(C(n+b, n), n+1)``. The array is cached and read-only.
    """
    arr = np.array(_exponent_tuples(n, b), dtype=np.int64).reshape(-1, n + 1)
    arr.setflags(write=False)
    return arr


@lru_cache(maxsize=None)
def monomial_index(n: int, b: int) -> dict[tuple[int, ...], int]:
    """Map exponent tuple -> position in :func:`enumerate_monomials`."""
    return {e: i for i, e in enumerate(_exponent_tuples(n, b))}


def N_d(n: int, d: int) -> int:
    """Projective dimension of the space of degree-d forms in n+1 variables."""
    return comb(n + d, n) - 1


def N_dk(n: int, d: int, k: int) -> int:
    """Projective dimension of Sym^k(Sym^d), i.e. C(N_d + k, N_d) - 1."""
    N = N_d(n, d)
    return comb(N + k, N) - 1


def hockey_stick(n: int, a: int) -> tuple[int, int]:
    """Both sides of sum_{l<a} C(n-1+l, n-1) = C(n+a-1, n)."""
    if n < 1 or a < 1:
        raise ValueError("n and a must be positive")
    lhs = sum(binom(n - 1 + l, n - 1) for l in range(a))
    return lhs, binom(n + a - 1, n)


# -- dimension counts -------------------------------------------------------
# Projective dimensions; -1 is the empty system.

def vdim_double_points(N: int, k: int, h: int) -> int:
    """Parameter count for degree-k hypersurfaces of P^N double at h points."""
    return binom(N + k, N) - h * (N + 1) - 1


def vdim_lambda_double_points(N: int, k: int, n: int, h: int) -> int:
    """Degree-k hypersurfaces containing an n-plane and double at h points."""
    return binom(N + k, N) - binom(n + k, n) - h * (N + 1) - 1


def vdim_veronese_double_points(n: int, d: int, k: int, h: int) -> int:
    """Degree-k hypersurfaces of P^{N_d} containing V_{n,d}, double at h points."""
    N = N_d(n, d)
    return binom(N + k, N) - binom(n + k * d, n) - h * (N + 1) - 1


def vdim_veronese_fatpoint(n: int, d: int, k: int, a: int) -> int:
    """Refined count for V_{n,d} plus one a-fold point supported on V.

    The fat point restricted to V has length C(n+a-1, n), which is
    subtracted from its ambient length to avoid double counting.
    """
    N = N_d(n, d)
    return (binom(N + k, N) - binom(n + k * d, n)
            - (binom(N + a - 1, N) - binom(n + a - 1, n)) - 1)


def dim_veronese_ideal(n: int, d: int, k: int) -> int:
    """dim of the degree-k part of the ideal of V_{n,d}: C(N+k, k) - C(n+dk, n)."""
    N = N_d(n, d)
    return binom(N + k, k) - binom(n + d * k, n)


def quadric_double_points_dim(N: int, h: int) -> int:
    """Actual dimension of quadrics of P^N singular at h general points.

    Such quadrics are cones over quadrics of P^{N-h}; the closed form
    C(N+2, 2) - h(N+1) + C(h, 2) - 1 holds for h <= N+1, and the system
    is empty beyond that.
    """
    if h > N + 1:
        return -1
    return binom(N + 2, 2) - h * (N + 1) + binom(h, 2) - 1


def expected(vdim: int) -> int:
    return max(-1, vdim)
