"""Interpolation matrices, their dimensions, and verdicts.

A verdict of ``Certified-Expected`` is sound: the rank reached at a random
specialisation over F_p bounds the generic rank in characteristic 0 from
below, so the true dimension can only be smaller, and it is never smaller
than the expected dimension. An excess is never taken as proof of
speciality unless a closed form for the special dimension is known.
"""
from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field as dc_field
from typing import Sequence

import numpy as np

from . import combinatorics as cb
from .combinatorics import N_d, binom
from .conditions import (BaseComponent, CoordinatePlanes, FatPoint, LinearSubspace,
                         VeroneseImage, build_block)
from .modlinalg import DEFAULT_PRIME, FpMatrix, PrimeField, make_rng, rank

DEFAULT_TRIALS = 3
DEFAULT_SIZE_CAP = 6000


class Verdict(str, enum.Enum):
    CERTIFIED = "Certified-Expected"
    INCONCLUSIVE = "Inconclusive-Excess"
    CLOSED_FORM = "Closed-Form"
    UNDEFINED = "Formula-Undefined"


class FormulaUndefined(ValueError):
    """No expected-dimension formula covers this combination of components."""


class ResourceLimitError(RuntimeError):
    pass


@dataclass(frozen=True)
class LinearSystemSpec:
    N: int
    k: int
    components: tuple[BaseComponent, ...] = ()
    label: str = ""

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        if self.N < 0 or self.k < 0:
            raise ValueError("need N >= 0 and k >= 0")
        for c in self.components:
            if isinstance(c, VeroneseImage) and N_d(c.n, c.d) != self.N:
                raise ValueError(f"V_{{{c.n},{c.d}}} does not live in P^{self.N}")
            if isinstance(c, LinearSubspace) and not 0 <= c.n <= self.N:
                raise ValueError(f"a {c.n}-plane does not fit in P^{self.N}")
            if isinstance(c, CoordinatePlanes) and any(i > self.N for f in c.faces for i in f):
                raise ValueError("face index outside the ambient space")
            if isinstance(c, FatPoint) and c.support == "coordinate" and not 0 <= c.index <= self.N:
                raise ValueError("coordinate point outside the ambient space")

    @property
    def columns(self) -> int:
        return binom(self.N + self.k, self.N)

    def max_degree(self) -> int:
        """Largest integer whose factorial may enter a matrix entry."""
        dk = self.k
        for c in self.components:
            if isinstance(c, VeroneseImage):
                dk = max(dk, c.d * self.k)
        return dk


@dataclass(frozen=True)
class DimensionReport:
    label: str
    N: int
    k: int
    components: tuple
    computed_dim: int
    expected_dim: int | None
    virtual_dim: int | None
    verdict: Verdict
    seed: int
    prime: int
    trials: int

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "N": self.N,
            "k": self.k,
            "components": [c.to_dict() for c in self.components],
            "computed_dim": self.computed_dim,
            "expected_dim": self.expected_dim,
            "virtual_dim": self.virtual_dim,
            "verdict": self.verdict.value,
            "seed": self.seed,
            "prime": self.prime,
            "trials": self.trials,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @property
    def certified(self) -> bool:
        return self.verdict is Verdict.CERTIFIED


# -- constructors for the systems that appear in the theory -----------------

def double_points(h: int) -> tuple[FatPoint, ...]:
    return tuple(FatPoint(2) for _ in range(h))


def veronese_double_points(n: int, d: int, k: int, h: int) -> LinearSystemSpec:
    """L_{N,k}(V, 2^h): contains V_{n,d}, double at h general points."""
    N = N_d(n, d)
    return LinearSystemSpec(N, k, (VeroneseImage(n, d),) + double_points(h),
                            f"L_{{{N},{k}}}(V_{{{n},{d}}},2^{h})")


def lambda_double_points(N: int, k: int, n: int, h: int, placement: str = "coordinate") -> LinearSystemSpec:
    """L_{N,k}(Lambda, 2^h) with Lambda an n-plane."""
    return LinearSystemSpec(N, k, (LinearSubspace(n, placement),) + double_points(h),
                            f"L_{{{N},{k}}}(Lambda_{n},2^{h})")


def plain_double_points(N: int, k: int, h: int) -> LinearSystemSpec:
    return LinearSystemSpec(N, k, double_points(h), f"L_{{{N},{k}}}(2^{h})")


def veronese_fatpoint(n: int, d: int, k: int, a: int) -> LinearSystemSpec:
    """L_{N,k}(V, a): contains V_{n,d} and a general a-fold point of V."""
    N = N_d(n, d)
    return LinearSystemSpec(N, k, (VeroneseImage(n, d), FatPoint(a, "veronese", n=n, d=d)),
                            f"L_{{{N},{k}}}(V_{{{n},{d}}},{a})")


def planes_fatpoint(n: int, d: int, k: int, a: int, triangulation=None) -> LinearSystemSpec:
    """L_{N,k}(Pi, a): the toric degeneration of V plus an a-fold point at the sink vertex."""
    from .toric import sink_hyperplane, standard_triangulation, union_planes

    t = triangulation or standard_triangulation(n, d)
    comps = [CoordinatePlanes(tuple(union_planes(t)))]
    if a > 0:
        comps.append(FatPoint(a, "coordinate", index=sink_hyperplane(t)))
    N = N_d(n, d)
    return LinearSystemSpec(N, k, tuple(comps), f"L_{{{N},{k}}}(Pi_{{{n},{d}}},{a})")


# -- expected dimensions ----------------------------------------------------

def ah_exception(N: int, k: int, h: int) -> bool:
    """Is L_{N,k}(2^h) one of the special double-point systems?"""
    if k == 2:
        return N >= 2 and 2 <= h <= N
    if k == 3:
        return (N, h) == (4, 7)
    if k == 4:
        return (N, h) in ((2, 5), (3, 9), (4, 14))
    return False


def _infer_d(N: int, n: int) -> int | None:
    d = 1
    while binom(n + d, n) - 1 < N:
        d += 1
    return d if binom(n + d, n) - 1 == N else None


def _classify(spec: LinearSystemSpec):
    by_type: dict[type, list] = {}
    for c in spec.components:
        by_type.setdefault(type(c), []).append(c)
    fat = by_type.pop(FatPoint, [])
    others = [c for cs in by_type.values() for c in cs]
    return others, fat


def expected_dimension(spec: LinearSystemSpec) -> tuple[int, int]:
    """(virtual, expected) dimension from the matching parameter count.

    Raises FormulaUndefined for component combinations without one.
    """
    N, k = spec.N, spec.k
    others, fat = _classify(spec)
    generic_doubles = all(f.multiplicity == 2 and f.support == "ambient" for f in fat)

    if not others and generic_doubles:
        v = cb.vdim_double_points(N, k, len(fat))
    elif len(others) == 1 and isinstance(others[0], VeroneseImage) and generic_doubles:
        c = others[0]
        v = cb.vdim_veronese_double_points(c.n, c.d, k, len(fat))
    elif len(others) == 1 and isinstance(others[0], LinearSubspace) and generic_doubles:
        v = cb.vdim_lambda_double_points(N, k, others[0].n, len(fat))
    elif (len(others) == 1 and isinstance(others[0], VeroneseImage) and len(fat) == 1
          and fat[0].support == "veronese"):
        c, a = others[0], fat[0].multiplicity
        if a > k:
            raise FormulaUndefined("the fat-point count is only a lower bound for a <= k")
        v = cb.vdim_veronese_fatpoint(c.n, c.d, k, a)
    elif len(others) == 1 and isinstance(others[0], CoordinatePlanes) and len(fat) <= 1:
        v = _planes_closed_form(spec, others[0], fat)
    else:
        raise FormulaUndefined(f"no expected-dimension formula for {spec.label or spec.components}")
    return v, cb.expected(v)


def _planes_closed_form(spec, planes: CoordinatePlanes, fat) -> int:
    from .apolarity import dim_L_planes_fatpoint

    n = len(planes.faces[0]) - 1
    d = _infer_d(spec.N, n)
    if d is None or len(planes.faces) != d**n:
        raise FormulaUndefined("the planes are not a degenerate Veronese")
    a = 0
    if fat:
        f = fat[0]
        if f.support != "coordinate" or sum(f.index in face for face in planes.faces) != 1:
            raise FormulaUndefined("the fat point must sit at a vertex of the sink only")
        a = f.multiplicity
        if a > spec.k:
            raise FormulaUndefined("the planes count needs a <= k")
    return dim_L_planes_fatpoint(n, d, spec.k, a)


def closed_form_dimension(spec: LinearSystemSpec) -> int | None:
    """Known special dimension, for plain double points on quadrics."""
    others, fat = _classify(spec)
    if others or any(f.multiplicity != 2 or f.support != "ambient" for f in fat):
        return None
    if spec.k == 2:
        return cb.quadric_double_points_dim(spec.N, len(fat))
    return None


def _is_known_special(spec: LinearSystemSpec) -> bool:
    others, fat = _classify(spec)
    if others or any(f.multiplicity != 2 or f.support != "ambient" for f in fat):
        return False
    return ah_exception(spec.N, spec.k, len(fat))


# -- computation ------------------------------------------------------------

def interpolation_matrix(spec: LinearSystemSpec, rng: np.random.Generator,
                         field: PrimeField) -> FpMatrix:
    blocks = [build_block(c, spec.N, spec.k, rng, field).rows.entries for c in spec.components]
    if not blocks:
        return FpMatrix(field.zeros((0, spec.columns)), field)
    return FpMatrix(np.vstack(blocks), field)


def compute_dimension(spec: LinearSystemSpec, seed: int = 0, trials: int = DEFAULT_TRIALS,
                      field: PrimeField | None = None,
                      size_cap: int = DEFAULT_SIZE_CAP) -> DimensionReport:
    """Projective dimension of ``spec`` at random points over F_p.

    Up to ``trials`` independent draws are made (stopping early once the
    expected dimension is reached); the smallest dimension seen is kept.
    """
    field = field or PrimeField(DEFAULT_PRIME)
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if spec.columns > size_cap:
        raise ResourceLimitError(f"{spec.columns} columns exceeds the size cap {size_cap}")
    if field.p <= spec.max_degree():
        raise ValueError(f"prime {field.p} must exceed dk = {spec.max_degree()}")
    try:
        virtual, exp = expected_dimension(spec)
    except FormulaUndefined:
        virtual = exp = None

    best = None
    done = 0
    for t in range(trials):
        M = interpolation_matrix(spec, make_rng(seed, t), field)
        dim = spec.columns - rank(M) - 1
        done += 1
        best = dim if best is None else min(best, dim)
        if exp is not None and best <= exp:
            break
    verdict = _verdict(spec, best, exp)
    return DimensionReport(spec.label, spec.N, spec.k, spec.components, best, exp, virtual,
                           verdict, seed, field.p, done)


def _verdict(spec, computed: int, exp: int | None) -> Verdict:
    if exp is None:
        return Verdict.UNDEFINED
    if computed == exp:
        return Verdict.CERTIFIED
    if _is_known_special(spec):
        closed = closed_form_dimension(spec)
        if closed is None and computed > exp or closed == computed:
            return Verdict.CLOSED_FORM
    return Verdict.INCONCLUSIVE


def main_bound(n: int, d: int, k: int) -> int:
    """floor(C(N+k-3, N) / (N+1)) with N = N_d(n, d)."""
    if k < 3:
        raise ValueError("the bound needs k >= 3")
    N = N_d(n, d)
    return binom(N + k - 3, N) // (N + 1)


def certify_main_theorem(n: int, d: int, k: int, h_max: int | None = None, seed: int = 0,
                         trials: int = DEFAULT_TRIALS, field: PrimeField | None = None,
                         size_cap: int = DEFAULT_SIZE_CAP) -> list[DimensionReport]:
    """Reports on L_{N,k}(V, 2^h) for h = 0 .. min(h_max, bound)."""
    top = main_bound(n, d, k)
    if h_max is not None:
        top = min(top, h_max)
    return [compute_dimension(veronese_double_points(n, d, k, h), seed=seed, trials=trials,
                              field=field, size_cap=size_cap)
            for h in range(top + 1)]


def reports_to_json(reports: Sequence[DimensionReport]) -> str:
    return json.dumps([r.to_dict() for r in reports])
