"""Inverse systems of coordinate ideals and the count for Pi plus a fat point.

For monomial ideals the degree-k inverse system is spanned by the degree-k
monomials outside the ideal, so every dimension below is a monomial count.
"""
from __future__ import annotations

from dataclasses import dataclass

from .combinatorics import N_d, binom, exponent_matrix, vdim_veronese_fatpoint


@dataclass(frozen=True)
class InverseSystemSlice:
    """Degree-k part of the inverse system of a coordinate ideal in P^N.

    ``kind`` is ``"face"`` (ideal of the coordinate plane spanned by the
    vertices in ``data``) or ``"fatpoint"`` (a-th power of the ideal of the
    coordinate point ``data[0]``, with ``data[1] = a``).
    """

    kind: str
    data: tuple
    N: int
    k: int

    def contains(self, exponents) -> bool:
        if self.kind == "face":
            return all(e == 0 for i, e in enumerate(exponents) if i not in self.data)
        index, a = self.data
        return exponents[index] >= self.k - a + 1

    @property
    def dim(self) -> int:
        if self.kind == "face":
            return binom(len(self.data) - 1 + self.k, self.k)
        a = self.data[1]
        return binom(self.N + min(a, self.k + 1) - 1, self.N)

    def members(self):
        return [tuple(int(x) for x in e) for e in exponent_matrix(self.N, self.k) if self.contains(e)]


def face_slice(N: int, face, k: int) -> InverseSystemSlice:
    return InverseSystemSlice("face", tuple(sorted(face)), N, k)


def fatpoint_slice(N: int, a: int, k: int, index: int = 0) -> InverseSystemSlice:
    return InverseSystemSlice("fatpoint", (index, a), N, k)


def sink_intersection_dim(n: int, a: int) -> int:
    """dim of the overlap of the fat-point slice with the sink face slice.

    The overlap is y_0^{k-l} F_l(y_1..y_n) for l < a, and the graded pieces
    add up to C(n+a-1, n).
    """
    return binom(n + a - 1, n)


def conditions_count_planes_plus_fatpoint(n: int, d: int, k: int, a: int, triangulation=None) -> int:
    """Conditions imposed on degree-k forms by Pi and an a-fold point at the sink."""
    if not 1 <= a <= k:
        raise ValueError(f"need 1 <= a <= k, got a={a}, k={k}")
    if triangulation is not None:
        from .toric import sink_hyperplane, union_planes

        faces = union_planes(triangulation)
        j = sink_hyperplane(triangulation)
        if sum(j in f for f in faces) != 1:
            raise ValueError("the sink vertex must belong to the sink face only")
    N = N_d(n, d)
    return binom(N + a - 1, N) + binom(n + k * d, n) - sink_intersection_dim(n, a)


def dim_L_planes_fatpoint(n: int, d: int, k: int, a: int) -> int:
    """dim L_{N,k}(Pi, a) = C(N+k,N) - C(n+kd,n) - C(N+a-1,N) + C(n+a-1,n) - 1.

    ``a = 0`` is the plain union of planes.
    """
    if not 0 <= a <= k:
        raise ValueError(f"need 0 <= a <= k, got a={a}, k={k}")
    N = N_d(n, d)
    return binom(N + k, N) - binom(n + k * d, n) - binom(N + a - 1, N) + binom(n + a - 1, n) - 1


def expected_dim_V_fatpoint(n: int, d: int, k: int, a: int) -> int:
    """Expected dimension of L_{N,k}(V, a), clamped at -1."""
    if a < 1:
        raise ValueError("a must be >= 1")
    return max(-1, vdim_veronese_fatpoint(n, d, k, a))


def span_count(slices) -> int:
    """Brute-force dimension of the span of monomial inverse-system slices."""
    seen = set()
    for s in slices:
        seen.update(s.members())
    return len(seen)
