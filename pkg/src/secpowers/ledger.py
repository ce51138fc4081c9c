"""Dimension bookkeeping for the degeneration of P^N into the blow-up F and the
exceptional P^N.

A section on the central fiber is a pair of sections on the two components
that agree on their intersection R, so

    dim L_0 = dim L_P + dim L_F + dim L_R + 2

with L_P = L_{N,k-2}(Lambda, 2^h), L_F = L_{N,k}(V, k) and L_R the
degree-(k-1) forms on R = P^{N-1} containing an (n-1)-plane. The entry is
consistent when this total equals edim L_{N,k}(V, 2^h).
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field

from .combinatorics import (N_d, binom, expected, vdim_lambda_double_points,
                            vdim_veronese_double_points, vdim_veronese_fatpoint)
from .engine import (DEFAULT_TRIALS, Verdict, compute_dimension, lambda_double_points,
                     main_bound, veronese_fatpoint)
from .modlinalg import PrimeField

CONSTITUENTS = ("L_k-1(Lambda,2^h)", "L_k-2(Lambda,2^h)", "L_k(V,k-1)", "L_k(V,k)", "L_R")


@dataclass(frozen=True)
class LedgerEntry:
    n: int
    d: int
    k: int
    h: int
    dim_hat_P: int
    dim_hat_F: int
    dim_R: int
    edim_general_fiber: int
    constituents: dict = field(default_factory=dict)
    verified: bool | None = None

    @property
    def ledger_total(self) -> int:
        return self.dim_hat_P + self.dim_hat_F + self.dim_R + 2

    @property
    def consistent(self) -> bool:
        return self.ledger_total == self.edim_general_fiber

    def row(self) -> dict:
        out = {"n": self.n, "d": self.d, "k": self.k, "h": self.h}
        out.update({name: self.constituents.get(name) for name in CONSTITUENTS})
        out.update(dim_hat_P=self.dim_hat_P, dim_hat_F=self.dim_hat_F, dim_R=self.dim_R,
                   ledger_total=self.ledger_total, edim=self.edim_general_fiber,
                   consistent=self.consistent, verified=self.verified)
        return out


def _check_domain(n, d, k, h):
    if k < 4:
        raise ValueError("the ledger needs k >= 4 (k = 3 only allows h = 0)")
    if n < 1 or d < 1:
        raise ValueError("n and d must be positive")
    bound = main_bound(n, d, k)
    if not 0 <= h <= bound:
        raise ValueError(f"h = {h} outside 0..{bound}")


def closed_forms(n: int, d: int, k: int, h: int) -> dict:
    """Closed-form (virtual) dimensions of the five constituent systems."""
    N = N_d(n, d)
    return {
        "L_k-1(Lambda,2^h)": vdim_lambda_double_points(N, k - 1, n, h),
        "L_k-2(Lambda,2^h)": vdim_lambda_double_points(N, k - 2, n, h),
        "L_k(V,k-1)": vdim_veronese_fatpoint(n, d, k, k - 1),
        "L_k(V,k)": vdim_veronese_fatpoint(n, d, k, k),
        "L_R": binom(N + k - 2, N - 1) - binom(n + k - 2, n - 1) - 1,
    }


def ledger(n: int, d: int, k: int, h: int) -> LedgerEntry:
    """Closed-form ledger; pure integer arithmetic."""
    _check_domain(n, d, k, h)
    c = closed_forms(n, d, k, h)
    edim = expected(vdim_veronese_double_points(n, d, k, h))
    return LedgerEntry(n, d, k, h, c["L_k-2(Lambda,2^h)"], c["L_k(V,k)"], c["L_R"], edim, c)


def constituent_specs(n: int, d: int, k: int, h: int) -> dict:
    N = N_d(n, d)
    return {
        "L_k-1(Lambda,2^h)": lambda_double_points(N, k - 1, n, h),
        "L_k-2(Lambda,2^h)": lambda_double_points(N, k - 2, n, h),
        "L_k(V,k-1)": veronese_fatpoint(n, d, k, k - 1),
        "L_k(V,k)": veronese_fatpoint(n, d, k, k),
        "L_R": lambda_double_points(N - 1, k - 1, n - 1, 0),
    }


def ledger_bruteforce(n: int, d: int, k: int, h: int, seed: int = 0, trials: int = DEFAULT_TRIALS,
                      field: PrimeField | None = None) -> tuple[LedgerEntry, dict]:
    """Ledger with every constituent computed by rank.

    Returns the entry and a map name -> DimensionReport. ``verified`` is
    False as soon as any constituent is not certified for this seed, and
    ``matches`` on each report can be compared with :func:`closed_forms`
    (clamped at -1, since an empty system has dimension -1).
    """
    _check_domain(n, d, k, h)
    reports = {name: compute_dimension(spec, seed=seed, trials=trials, field=field)
               for name, spec in constituent_specs(n, d, k, h).items()}
    dims = {name: r.computed_dim for name, r in reports.items()}
    verified = all(r.verdict is Verdict.CERTIFIED for r in reports.values())
    edim = expected(vdim_veronese_double_points(n, d, k, h))
    entry = LedgerEntry(n, d, k, h, dims["L_k-2(Lambda,2^h)"], dims["L_k(V,k)"], dims["L_R"],
                        edim, dims, verified)
    return entry, reports


def constituents_match(n: int, d: int, k: int, h: int, entry: LedgerEntry) -> dict:
    """name -> whether the computed dimension equals max(-1, closed form)."""
    closed = closed_forms(n, d, k, h)
    return {name: entry.constituents[name] == expected(closed[name]) for name in CONSTITUENTS}


def admissible_grid(n_max: int, d_max: int, k_min: int = 4, k_max: int = 8):
    for n in range(1, n_max + 1):
        for d in range(1, d_max + 1):
            for k in range(k_min, k_max + 1):
                for h in range(main_bound(n, d, k) + 1):
                    yield n, d, k, h


def to_csv(entries) -> str:
    buf = io.StringIO()
    header = ["n", "d", "k", "h", *CONSTITUENTS, "dim_hat_P", "dim_hat_F", "dim_R",
              "ledger_total", "edim", "consistent", "verified"]
    w = csv.DictWriter(buf, fieldnames=header, lineterminator="\n")
    w.writeheader()
    for e in entries:
        w.writerow(e.row())
    return buf.getvalue()
