"""Rows of interpolation matrices, one block per base-locus component.

Every block has its columns indexed by ``enumerate_monomials(N, k)``:
a vector in the kernel of a stacked matrix is the coefficient vector of a
degree-k form on P^N satisfying all imposed conditions. Coordinates of
P^{N_d} are indexed by ``enumerate_monomials(n, d)``, so coordinate 0 is
x_0^d.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass
from functools import lru_cache
from math import factorial
from typing import Union

import numpy as np

from .combinatorics import N_d, binom, exponent_matrix, monomial_index
from .modlinalg import FpMatrix, PrimeField, make_rng, rank
from .polys import linear_pullback


# -- components -------------------------------------------------------------

@dataclass(frozen=True)
class VeroneseImage:
    """The image of P^n under the degree-d Veronese map, inside P^{N_d}."""

    n: int
    d: int

    def to_dict(self):
        return {"type": "VeroneseImage", **asdict(self)}


@dataclass(frozen=True)
class LinearSubspace:
    """An n-plane of P^N; ``coordinate`` is the span of e_0..e_n."""

    n: int
    placement: str = "coordinate"

    def __post_init__(self):
        if self.placement not in ("coordinate", "random"):
            raise ValueError(f"unknown placement {self.placement!r}")

    def to_dict(self):
        return {"type": "LinearSubspace", **asdict(self)}


@dataclass(frozen=True)
class CoordinatePlanes:
    """Union of coordinate planes, each given by its vertex indices."""

    faces: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        faces = tuple(tuple(sorted(int(i) for i in f)) for f in self.faces)
        if len(set(faces)) != len(faces):
            raise ValueError("faces must be distinct")
        if len({len(f) for f in faces}) > 1:
            raise ValueError("faces must all have the same size")
        object.__setattr__(self, "faces", faces)

    def to_dict(self):
        return {"type": "CoordinatePlanes", "faces": [list(f) for f in self.faces]}


@dataclass(frozen=True)
class FatPoint:
    """A point of multiplicity ``multiplicity``.

    ``support`` is ``"ambient"`` (general point of P^N), ``"veronese"``
    (general point of V_{n,d}, needs ``n`` and ``d``) or ``"coordinate"``
    (the coordinate point e_index).
    """

    multiplicity: int
    support: str = "ambient"
    index: int | None = None
    n: int | None = None
    d: int | None = None

    def __post_init__(self):
        if self.multiplicity < 1:
            raise ValueError("multiplicity must be >= 1")
        if self.support not in ("ambient", "veronese", "coordinate"):
            raise ValueError(f"unknown support {self.support!r}")
        if self.support == "coordinate" and self.index is None:
            raise ValueError("coordinate support needs an index")
        if self.support == "veronese" and (self.n is None or self.d is None):
            raise ValueError("veronese support needs n and d")

    def to_dict(self):
        out = {"type": "FatPoint", "multiplicity": self.multiplicity, "support": self.support}
        if self.support == "coordinate":
            out["index"] = self.index
        if self.support == "veronese":
            out["n"], out["d"] = self.n, self.d
        return out


BaseComponent = Union[VeroneseImage, LinearSubspace, CoordinatePlanes, FatPoint]


@dataclass(frozen=True)
class ConditionBlock:
    rows: FpMatrix
    provenance: BaseComponent | str
    nominal_row_count: int

    @property
    def cols(self) -> int:
        return self.rows.cols

    def rank(self) -> int:
        return rank(self.rows)

    def kernel_dim(self) -> int:
        return self.rows.cols - rank(self.rows)


# -- builders ---------------------------------------------------------------

@lru_cache(maxsize=None)
def _falling_factorials(k: int) -> np.ndarray:
    ff = np.zeros((k + 1, k + 1), dtype=object)
    for e in range(k + 1):
        for b in range(e + 1):
            ff[e, b] = factorial(e) // factorial(e - b)
    return ff


def _powers(q: np.ndarray, k: int, p: int, dtype) -> np.ndarray:
    out = np.empty((len(q), k + 1), dtype=dtype)
    for i, qi in enumerate(q):
        v = 1
        for e in range(k + 1):
            out[i, e] = v
            v = v * int(qi) % p
    return out


def build_fatpoint_block(N: int, k: int, m: int, support_point, field: PrimeField | None = None) -> ConditionBlock:
    """Vanishing to order ``m`` at ``support_point``.

    One row per derivative multi-index beta with |beta| = m - 1; by Euler's
    identity these already force all lower-order derivatives to vanish
    (needs p > k). For m > k the order is capped at k, which forces the
    form to vanish identically, exactly as a point of multiplicity > k does.
    """
    field = field or PrimeField()
    p = field.p
    q = np.asarray(support_point, dtype=object) % p
    if len(q) != N + 1:
        raise ValueError(f"support point must have {N + 1} coordinates")
    if not any(int(x) for x in q):
        raise ValueError("the zero vector is not a projective point")
    if m < 1:
        raise ValueError("multiplicity must be >= 1")
    order = min(m - 1, k)
    alpha = exponent_matrix(N, k)
    beta = exponent_matrix(N, order)
    ff = _falling_factorials(k)
    ffp = np.array([[int(x) % p for x in row] for row in ff], dtype=object).astype(field.dtype)
    powq = _powers(q, k, p, field.dtype)
    vals = np.ones((len(beta), len(alpha)), dtype=field.dtype)
    for i in range(N + 1):
        a_i = alpha[:, i][None, :]
        b_i = beta[:, i][:, None]
        diff = a_i - b_i
        vals = vals * ffp[a_i, np.minimum(b_i, a_i)] % p
        vals = vals * powq[i][np.clip(diff, 0, None)] % p
        vals[np.broadcast_to(diff < 0, vals.shape)] = 0
    return ConditionBlock(FpMatrix(vals, field), FatPoint(m), binom(N + m - 1, N))


def random_parametrization(N: int, n: int, rng: np.random.Generator, field: PrimeField) -> np.ndarray:
    """A random full-rank (n+1) x (N+1) matrix over F_p."""
    while True:
        P = np.stack([field.random_point(rng, N + 1) for _ in range(n + 1)])
        if rank(P, field.p) == n + 1:
            return P


def coordinate_parametrization(N: int, n: int, field: PrimeField) -> np.ndarray:
    P = field.zeros((n + 1, N + 1))
    for i in range(n + 1):
        P[i, i] = 1
    return P


def build_linear_subspace_block(N: int, k: int, n: int, placement: str = "coordinate",
                                seed: int = 0, field: PrimeField | None = None,
                                rng: np.random.Generator | None = None) -> ConditionBlock:
    """Conditions for containing an n-plane: the pullback to its parametrisation.

    ``n = N`` is allowed and kills every form.
    """
    field = field or PrimeField()
    if not 0 <= n <= N:
        raise ValueError(f"need 0 <= n <= N, got n={n}, N={N}")
    if placement == "coordinate":
        P = coordinate_parametrization(N, n, field)
    elif placement == "random":
        P = random_parametrization(N, n, rng if rng is not None else make_rng(seed, 1), field)
    else:
        raise ValueError(f"unknown placement {placement!r}")
    rows = linear_pullback(P, k, field.p)
    return ConditionBlock(FpMatrix(rows, field), LinearSubspace(n, placement), binom(n + k, n))


@lru_cache(maxsize=None)
def _veronese_pullback(n: int, d: int, k: int) -> np.ndarray:
    N = N_d(n, d)
    A = exponent_matrix(n, d)
    E = exponent_matrix(N, k)
    images = E @ A
    target = monomial_index(n, d * k)
    out = np.zeros((binom(n + d * k, n), len(E)), dtype=np.int64)
    for c, mu in enumerate(images):
        out[target[tuple(int(x) for x in mu)], c] += 1
    out.setflags(write=False)
    return out


def build_veronese_block(n: int, d: int, k: int, field: PrimeField | None = None) -> ConditionBlock:
    """Pullback Sym^k(Sym^d) -> Sym^{dk} along the Veronese map.

    Row mu (a degree-dk monomial in x) has a 1 in every column whose
    y-monomial pulls back to x^mu; its kernel is the degree-k part of the
    ideal of V_{n,d}.
    """
    if n < 1 or d < 1 or k < 1:
        raise ValueError("n, d, k must be positive")
    field = field or PrimeField()
    rows = field.array(_veronese_pullback(n, d, k))
    return ConditionBlock(FpMatrix(rows, field), VeroneseImage(n, d), binom(n + k * d, n))


def build_planes_block(N: int, k: int, faces, field: PrimeField | None = None) -> ConditionBlock:
    """Unit rows on every degree-k monomial supported inside some face."""
    field = field or PrimeField()
    comp = CoordinatePlanes(tuple(faces))
    E = exponent_matrix(N, k)
    support = E > 0
    inside = np.zeros(len(E), dtype=bool)
    for face in comp.faces:
        outside = np.ones(N + 1, dtype=bool)
        outside[list(face)] = False
        inside |= ~support[:, outside].any(axis=1)
    cols = np.flatnonzero(inside)
    rows = field.zeros((len(cols), len(E)))
    rows[np.arange(len(cols)), cols] = 1
    return ConditionBlock(FpMatrix(rows, field), comp, len(cols))


def veronese_point(n: int, d: int, rng: np.random.Generator, field: PrimeField) -> np.ndarray:
    """nu_d(l) for a random l in F_p^{n+1}: the d-th power monomials of l."""
    while True:
        ell = field.random_point(rng, n + 1)
        if any(int(x) for x in ell):
            break
    A = exponent_matrix(n, d)
    p = field.p
    pts = []
    for alpha in A:
        v = 1
        for li, ai in zip(ell, alpha):
            v = v * pow(int(li), int(ai), p) % p
        pts.append(v)
    return field.array(pts)


def support_point(comp: FatPoint, N: int, rng: np.random.Generator, field: PrimeField) -> np.ndarray:
    if comp.support == "coordinate":
        if not 0 <= comp.index <= N:
            raise ValueError(f"coordinate index {comp.index} outside P^{N}")
        q = field.zeros(N + 1)
        q[comp.index] = 1
        return q
    if comp.support == "veronese":
        if N_d(comp.n, comp.d) != N:
            raise ValueError("Veronese-supported point does not fit the ambient space")
        return veronese_point(comp.n, comp.d, rng, field)
    while True:
        q = field.random_point(rng, N + 1)
        if any(int(x) for x in q):
            return q


def build_block(comp: BaseComponent, N: int, k: int, rng: np.random.Generator,
                field: PrimeField) -> ConditionBlock:
    """Dispatch on the component type; randomness is drawn from ``rng``."""
    if isinstance(comp, VeroneseImage):
        if N_d(comp.n, comp.d) != N:
            raise ValueError(f"V_{{{comp.n},{comp.d}}} lives in P^{N_d(comp.n, comp.d)}, not P^{N}")
        return build_veronese_block(comp.n, comp.d, k, field)
    if isinstance(comp, LinearSubspace):
        return build_linear_subspace_block(N, k, comp.n, comp.placement, field=field, rng=rng)
    if isinstance(comp, CoordinatePlanes):
        if any(i > N for f in comp.faces for i in f):
            raise ValueError("face index outside the ambient space")
        return build_planes_block(N, k, comp.faces, field)
    if isinstance(comp, FatPoint):
        block = build_fatpoint_block(N, k, comp.multiplicity, support_point(comp, N, rng, field), field)
        return ConditionBlock(block.rows, comp, block.nominal_row_count)
    raise TypeError(f"unknown component {comp!r}")
