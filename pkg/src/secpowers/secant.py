"""Secant dimensions of the variety of k-th powers of degree-d forms.

By Terracini's lemma the affine tangent space of Sec_h at a general point
is the span of the tangent spaces F_i^{k-1} * Sym^d at h general forms F_i,
so dim Sec_h is the rank of the stacked tangent rows minus one.
"""
from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .combinatorics import N_d, binom
from .engine import (DEFAULT_TRIALS, DimensionReport, Verdict, compute_dimension,
                     veronese_double_points)
from .modlinalg import DEFAULT_PRIME, FpMatrix, PrimeField, make_rng, rank
from .polys import poly_pow, product_index


@dataclass(frozen=True)
class SecantReport:
    n: int
    d: int
    k: int
    h: int
    computed_secant_dim: int
    expected_secant_dim: int
    defective: Verdict
    seed: int
    prime: int
    trials: int
    cross_check: bool | None = None

    @property
    def ambient_dim(self) -> int:
        return binom(self.n + self.d * self.k, self.n) - 1

    def to_dict(self) -> dict:
        return {
            "label": f"Sec_{self.h}(V^{self.k}_{{{self.n},{self.d}}})",
            "N": self.ambient_dim,
            "k": self.k,
            "components": [{"type": "PowersVariety", "n": self.n, "d": self.d, "h": self.h}],
            "computed_dim": self.computed_secant_dim,
            "expected_dim": self.expected_secant_dim,
            "virtual_dim": self.h * (N_d(self.n, self.d) + 1) - 1,
            "verdict": self.defective.value,
            "seed": self.seed,
            "prime": self.prime,
            "trials": self.trials,
            "computed_secant_dim": self.computed_secant_dim,
            "expected_secant_dim": self.expected_secant_dim,
            "cross_check": self.cross_check,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @property
    def non_defective(self) -> bool:
        return self.defective is Verdict.CERTIFIED


def expected_secant_dim(n: int, d: int, k: int, h: int) -> int:
    """min{C(n+dk, n) - 1, h (N_d + 1) - 1}."""
    return min(binom(n + d * k, n) - 1, h * (N_d(n, d) + 1) - 1)


def tangent_space_rows(n: int, d: int, k: int, F, field: PrimeField | None = None) -> np.ndarray:
    """Coefficients of F^{k-1} x^beta for every degree-d monomial x^beta.

    Shape ``(C(n+d, n), C(n+dk, n))``; columns follow
    ``enumerate_monomials(n, d*k)``.
    """
    field = field or PrimeField()
    p = field.p
    F = field.array(F)
    if len(F) != binom(n + d, n):
        raise ValueError(f"a degree-{d} form in {n + 1} variables has {binom(n + d, n)} coefficients")
    if not np.any(F):
        raise ValueError("F must be nonzero")
    G = poly_pow(F, d, k - 1, n, p)
    shift = product_index(n, d * (k - 1), d)
    rows = field.zeros((binom(n + d, n), binom(n + d * k, n)))
    for b in range(rows.shape[0]):
        rows[b, shift[:, b]] = G
    return rows


def _random_form(n, d, rng, field):
    while True:
        F = field.random_point(rng, binom(n + d, n))
        if np.any(F):
            return F


def secant_dimension(n: int, d: int, k: int, h: int, seed: int = 0,
                     trials: int = DEFAULT_TRIALS, field: PrimeField | None = None) -> SecantReport:
    """dim Sec_h(V^k_{n,d}) from h random tangent spaces; best of ``trials`` draws."""
    if k < 1 or h < 1:
        raise ValueError("need k >= 1 and h >= 1")
    field = field or PrimeField(DEFAULT_PRIME)
    if field.p <= d * k:
        raise ValueError(f"prime {field.p} must exceed dk = {d * k}")
    exp = expected_secant_dim(n, d, k, h)
    best = None
    done = 0
    for t in range(trials):
        rng = make_rng(seed, t)
        M = np.vstack([tangent_space_rows(n, d, k, _random_form(n, d, rng, field), field)
                       for _ in range(h)])
        dim = rank(FpMatrix(M, field)) - 1
        done += 1
        best = dim if best is None else max(best, dim)
        if best >= exp:
            break
    verdict = Verdict.CERTIFIED if best == exp else Verdict.INCONCLUSIVE
    return SecantReport(n, d, k, h, best, exp, verdict, seed, field.p, done)


def cross_check(n: int, d: int, k: int, h: int, seed: int = 0, trials: int = DEFAULT_TRIALS,
                field: PrimeField | None = None) -> tuple[bool, SecantReport, DimensionReport]:
    """Compare the Terracini verdict with that of L_{N,k}(V, 2^h).

    The flag is True when both methods agree on whether the expected
    dimension is attained.
    """
    if k < 2:
        raise ValueError("the cross-check needs k >= 2")
    sec = secant_dimension(n, d, k, h, seed=seed, trials=trials, field=field)
    lin = compute_dimension(veronese_double_points(n, d, k, h), seed=seed, trials=trials, field=field)
    agree = sec.non_defective == lin.certified
    sec = SecantReport(**{**sec.__dict__, "cross_check": agree})
    return agree, sec, lin


def identifiability_bound(n: int, d: int, k: int) -> int:
    """Largest h covered by the identifiability statement (may be negative)."""
    if k < 3:
        raise ValueError("the bound needs k >= 3")
    N = N_d(n, d)
    return min(binom(N + k - 3, N) // (N + 1) - 1, binom(n + k * d, n) // (N + 1) - 1)


def generic_rank_ceiling(n: int, d: int, k: int) -> int:
    """ceil(C(n+dk, n) / C(n+d, n)): the first h expected to fill the space."""
    return -(-binom(n + d * k, n) // binom(n + d, n))
