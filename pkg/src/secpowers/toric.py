"""Alcove triangulation of the dilated simplex and the union of planes Pi.

Write a lattice point x of d*Delta_n in order coordinates
s_i = x_i + ... + x_n, so that d >= s_1 >= ... >= s_n >= 0. The affine
hyperplanes s_i = c and s_i - s_j = c (c integer) cut this region into
d**n unimodular simplices. A cell is fixed by the integer parts
a = floor(s) and by the order in which the fractional parts decrease; its
vertices are a, a + e_{sigma(1)}, ..., a + e_{sigma(1)} + ... + e_{sigma(n)}.
For n = 2 these are the horizontal, vertical and anti-diagonal cuts of
the usual picture of 3*Delta_2 into nine triangles.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np
from scipy.optimize import linprog

from .combinatorics import binom, exponent_matrix

Point = tuple[int, ...]


@dataclass(frozen=True)
class Simplex:
    vertices: tuple[Point, ...]

    def __post_init__(self):
        verts = tuple(tuple(int(c) for c in v) for v in self.vertices)
        if len({len(v) for v in verts}) != 1 or len(verts) != len(verts[0]) + 1:
            raise ValueError("a simplex in Z^n needs n+1 vertices")
        object.__setattr__(self, "vertices", verts)

    @property
    def dim(self) -> int:
        return len(self.vertices) - 1

    def volume(self) -> int:
        """Normalized volume |det(v_i - v_0)|."""
        v0 = self.vertices[0]
        rows = [[a - b for a, b in zip(v, v0)] for v in self.vertices[1:]]
        return abs(int_det(rows))

    def is_unimodular(self) -> bool:
        return self.volume() == 1


@dataclass(frozen=True)
class Triangulation:
    n: int
    d: int
    simplices: tuple[Simplex, ...]
    vertex_index: dict
    sink_index: int = 0

    def faces(self) -> list[tuple[int, ...]]:
        return [tuple(sorted(self.vertex_index[v] for v in s.vertices)) for s in self.simplices]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "d": self.d,
            "simplices": [[list(v) for v in s.vertices] for s in self.simplices],
            "sink_index": self.sink_index,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def int_det(rows) -> int:
    """Exact determinant of a square integer matrix (Bareiss)."""
    M = [list(r) for r in rows]
    n = len(M)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for i in range(n - 1):
        if M[i][i] == 0:
            swap = next((r for r in range(i + 1, n) if M[r][i] != 0), None)
            if swap is None:
                return 0
            M[i], M[swap] = M[swap], M[i]
            sign = -sign
        for r in range(i + 1, n):
            for c in range(i + 1, n):
                M[r][c] = (M[r][c] * M[i][i] - M[r][i] * M[i][c]) // prev
        prev = M[i][i]
    return sign * M[n - 1][n - 1]


def lattice_points(n: int, d: int) -> list[Point]:
    """Points of d*Delta_n in Z^n, ordered like the coordinates of P^{N_d}.

    Point x corresponds to the monomial x_0^{d-|x|} x_1^{x_1} ... x_n^{x_n},
    so the origin is coordinate 0.
    """
    if n < 1 or d < 1:
        raise ValueError("n and d must be positive")
    return [tuple(int(c) for c in e[1:]) for e in exponent_matrix(n, d)]


def _to_x(s) -> Point:
    n = len(s)
    return tuple(s[i] - (s[i + 1] if i + 1 < n else 0) for i in range(n))


def _to_s(x) -> tuple[int, ...]:
    return tuple(sum(x[i:]) for i in range(len(x)))


@lru_cache(maxsize=None)
def standard_triangulation(n: int, d: int) -> Triangulation:
    """The alcove triangulation of d*Delta_n; the sink is the corner cell at 0."""
    if n < 1 or d < 1:
        raise ValueError("n and d must be positive")
    cells = []
    for a in itertools.product(range(d), repeat=n):
        if any(a[i] < a[i + 1] for i in range(n - 1)):
            continue
        for sigma in itertools.permutations(range(n)):
            pos = {v: i for i, v in enumerate(sigma)}
            if any(a[i] == a[i + 1] and pos[i] > pos[i + 1] for i in range(n - 1)):
                continue
            s = list(a)
            verts = [_to_x(s)]
            for i in sigma:
                s[i] += 1
                verts.append(_to_x(s))
            cells.append(Simplex(tuple(verts)))
    origin = (0,) * n
    cells.sort(key=lambda c: (origin not in c.vertices, sorted(c.vertices)))
    index = {p: i for i, p in enumerate(lattice_points(n, d))}
    return Triangulation(n, d, tuple(cells), index, 0)


def union_planes(t: Triangulation) -> list[tuple[int, ...]]:
    """Coordinate index sets of the planes Pi_i, the sink first."""
    faces = t.faces()
    return [faces[t.sink_index]] + [f for i, f in enumerate(faces) if i != t.sink_index]


def sink_hyperplane(t: Triangulation) -> int:
    """Coordinate j with {y_j = 0} containing every plane except the sink."""
    j = t.vertex_index[(0,) * t.n]
    faces = t.faces()
    if j not in faces[t.sink_index]:
        raise RuntimeError("the origin is not a vertex of the sink")
    offenders = [i for i, f in enumerate(faces) if i != t.sink_index and j in f]
    if offenders:
        raise RuntimeError(f"cells {offenders} also contain the origin; no sink hyperplane")
    return j


# -- verification -----------------------------------------------------------

def total_volume(t: Triangulation) -> int:
    return sum(s.volume() for s in t.simplices)


def _properly_intersect(A, B) -> bool:
    """Do two full-dimensional simplices meet in a common face (or not at all)?

    Decided by looking for a hyperplane c.x = c0 with A on one side, B on
    the other, and exactly the shared vertices on it.
    """
    common = set(A) & set(B)
    only_a = [v for v in A if v not in common]
    only_b = [v for v in B if v not in common]
    n = len(A[0])
    A_ub, b_ub = [], []
    for v in only_a:
        A_ub.append([-x for x in v] + [1])
        b_ub.append(-1)
    for v in only_b:
        A_ub.append(list(v) + [-1])
        b_ub.append(-1)
    A_eq = [list(v) + [-1] for v in common] or None
    b_eq = [0] * len(common) or None
    res = linprog(np.zeros(n + 1), A_ub=A_ub, b_ub=b_ub, A_eq=A_eq, b_eq=b_eq,
                  bounds=[(None, None)] * (n + 1), method="highs")
    return res.status == 0


def check_face_to_face(t: Triangulation) -> list[tuple[int, int]]:
    """Pairs of cells that do not meet in a common face (empty when valid)."""
    bad = []
    cells = [s.vertices for s in t.simplices]
    boxes = [(np.min(c, axis=0), np.max(c, axis=0)) for c in cells]
    for i, j in itertools.combinations(range(len(cells)), 2):
        lo = np.maximum(boxes[i][0], boxes[j][0])
        hi = np.minimum(boxes[i][1], boxes[j][1])
        if np.any(lo > hi):
            continue
        if not _properly_intersect(cells[i], cells[j]):
            bad.append((i, j))
    return bad


def lifting_height(x) -> int:
    """Strictly convex across every alcove wall: sum of squares of s_i - s_j, s_0 = 0."""
    z = (0,) + _to_s(x)
    return sum((z[i] - z[j]) ** 2 for i in range(len(z)) for j in range(i + 1, len(z)))


def _affine_through(points, heights):
    """Coefficients (c, c0) of the affine map with c.p + c0 = height at each point.

    None when the points are affinely dependent.
    """
    n = len(points[0])
    M = [[Fraction(x) for x in p] + [Fraction(1), Fraction(h)] for p, h in zip(points, heights)]
    for col in range(n + 1):
        piv = next((r for r in range(col, n + 1) if M[r][col] != 0), None)
        if piv is None:
            return None
        M[col], M[piv] = M[piv], M[col]
        inv = 1 / M[col][col]
        M[col] = [v * inv for v in M[col]]
        for r in range(n + 1):
            if r != col and M[r][col] != 0:
                f = M[r][col]
                M[r] = [a - f * b for a, b in zip(M[r], M[col])]
    sol = [M[r][n + 1] for r in range(n + 1)]
    return sol[:n], sol[n]


def check_regular(t: Triangulation, height=lifting_height) -> list[tuple[int, int]]:
    """Interior facets across which the lifted cells fail to fold strictly upward.

    For each facet shared by cells A and B, the affine function of A must
    lie strictly below the lift at the apex of B. Local convexity across
    all interior facets is equivalent to regularity for this lifting.
    """
    facet_owner: dict[frozenset, list[int]] = {}
    for idx, s in enumerate(t.simplices):
        for v in s.vertices:
            facet_owner.setdefault(frozenset(set(s.vertices) - {v}), []).append(idx)
    bad = []
    for facet, owners in facet_owner.items():
        if len(owners) != 2:
            continue
        i, j = owners
        for a, b in ((i, j), (j, i)):
            A = t.simplices[a].vertices
            apex = next(v for v in t.simplices[b].vertices if v not in facet)
            fit = _affine_through(A, [height(v) for v in A])
            if fit is None:
                bad.append((a, b))
                continue
            c, c0 = fit
            if not height(apex) > sum(ci * x for ci, x in zip(c, apex)) + c0:
                bad.append((a, b))
    return bad


def facet_multiplicities_ok(t: Triangulation) -> bool:
    """Every facet lies in one cell on the boundary of d*Delta_n, two inside."""
    counts: dict[frozenset, int] = {}
    for s in t.simplices:
        for v in s.vertices:
            f = frozenset(set(s.vertices) - {v})
            counts[f] = counts.get(f, 0) + 1
    for f, c in counts.items():
        on_boundary = _on_boundary(f, t.n, t.d)
        if c != (1 if on_boundary else 2):
            return False
    return True


def _on_boundary(facet, n, d) -> bool:
    pts = list(facet)
    if any(all(p[i] == 0 for p in pts) for i in range(n)):
        return True
    return all(sum(p) == d for p in pts)


def validate(t: Triangulation) -> dict:
    """Run every structural check; returns a name -> bool map."""
    return {
        "cell_count": len(t.simplices) == t.d ** t.n,
        "unimodular": all(s.is_unimodular() for s in t.simplices),
        "volume": total_volume(t) == t.d ** t.n,
        "face_to_face": not check_face_to_face(t),
        "facets": facet_multiplicities_ok(t),
        "regular": not check_regular(t),
        "lattice_points": len(t.vertex_index) == binom(t.n + t.d, t.n),
        "unique_sink": _has_unique_sink(t),
    }


def _has_unique_sink(t: Triangulation) -> bool:
    try:
        sink_hyperplane(t)
    except RuntimeError:
        return False
    return True


# -- rendering --------------------------------------------------------------

def to_svg(t: Triangulation, size: int = 400, margin: int = 20) -> str:
    """SVG drawing of a planar triangulation; the sink is shaded."""
    if t.n != 2:
        raise ValueError("only n = 2 triangulations can be drawn")
    scale = (size - 2 * margin) / t.d

    def xy(p):
        return margin + p[0] * scale, size - margin - p[1] * scale

    parts = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
             f'viewBox="0 0 {size} {size}">']
    for i, s in enumerate(t.simplices):
        pts = " ".join(f"{x:.2f},{y:.2f}" for x, y in map(xy, s.vertices))
        fill = "#f4c542" if i == t.sink_index else "none"
        parts.append(f'<polygon points="{pts}" fill="{fill}" stroke="black" stroke-width="1.5"/>')
    for p in t.vertex_index:
        x, y = xy(p)
        parts.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="3" fill="black"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
