"""Homogeneous polynomials mod p as dense coefficient vectors.

A degree-``a`` form in ``n + 1`` variables is a vector indexed by
``enumerate_monomials(n, a)``.
"""
from __future__ import annotations

from functools import lru_cache

import numpy as np

from .combinatorics import exponent_matrix, monomial_index


@lru_cache(maxsize=None)
def product_index(n: int, a: int, b: int) -> np.ndarray:
    """``out[i, j]`` = position of (monomial i of degree a) * (monomial j of degree b)."""
    A, B = exponent_matrix(n, a), exponent_matrix(n, b)
    index = monomial_index(n, a + b)
    out = np.empty((len(A), len(B)), dtype=np.int64)
    for i, u in enumerate(A):
        for j, v in enumerate(B):
            out[i, j] = index[tuple(int(x) for x in u + v)]
    out.setflags(write=False)
    return out


def poly_mul(f: np.ndarray, a: int, g: np.ndarray, b: int, n: int, p: int) -> np.ndarray:
    idx = product_index(n, a, b)
    out = np.zeros(idx.max() + 1 if idx.size else 1, dtype=f.dtype)
    for i in np.flatnonzero(f):
        out[idx[i]] = (out[idx[i]] + f[i] * g % p) % p
    return out


def poly_pow(f: np.ndarray, a: int, e: int, n: int, p: int) -> np.ndarray:
    """``f**e`` for a degree-``a`` form ``f``, by repeated multiplication."""
    result = np.ones(1, dtype=f.dtype)
    deg = 0
    for _ in range(e):
        result = poly_mul(result, deg, f, a, n, p)
        deg += a
    return result


def linear_pullback(P: np.ndarray, k: int, p: int) -> np.ndarray:
    """Matrix of G(y) -> G(t P) on degree-k forms.

    ``P`` has shape ``(n+1, N+1)`` and parametrises y_j = sum_i t_i P[i, j].
    Returns an array of shape ``(C(n+k, n), C(N+k, N))``: column c holds
    the coefficients (in t) of the pullback of the c-th degree-k monomial
    in y.
    """
    n1, N1 = P.shape
    n, N = n1 - 1, N1 - 1
    P = np.asarray(P) % p
    prev = np.ones((1, 1), dtype=P.dtype)
    for j in range(1, k + 1):
        E = exponent_matrix(N, j)
        lower = monomial_index(N, j - 1)
        lead = np.argmax(E > 0, axis=1)
        parent = np.empty(len(E), dtype=np.int64)
        for r, (e, v) in enumerate(zip(E, lead)):
            e = e.copy()
            e[v] -= 1
            parent[r] = lower[tuple(int(x) for x in e)]
        shift = product_index(n, j - 1, 1)
        cur = np.zeros((len(E), shift.max() + 1), dtype=P.dtype)
        base = prev[parent]
        for i in range(n1):
            coef = P[i, lead][:, None]
            cols = shift[:, i]
            cur[:, cols] = (cur[:, cols] + base * coef % p) % p
        prev = cur
    return prev.T.copy()
