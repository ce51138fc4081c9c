"""Non-defectivity bounds for V^k_{n,d} and the table/plot comparing them."""
from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass
from fractions import Fraction

from .combinatorics import N_d, binom
from .engine import main_bound as bound_main
from .secant import identifiability_bound as bound_thm2

CSV_COLUMNS = ("d", "main_bound", "thm2_bound", "nenashev_bound",
               "generic_rank_num", "generic_rank_den", "fos_bound")


def nenashev_value(n: int, d: int, k: int) -> Fraction:
    return Fraction(binom(n + d * k, n), binom(n + d, n)) - binom(n + d, n)


def bound_nenashev(n: int, d: int, k: int) -> int:
    """floor(C(n+dk, n)/C(n+d, n) - C(n+d, n)); negative means vacuous."""
    if min(n, d, k) < 1:
        raise ValueError("n, d, k must be positive")
    return math.floor(nenashev_value(n, d, k))


def generic_rank_expected(n: int, d: int, k: int) -> Fraction:
    return Fraction(binom(n + d * k, n), binom(n + d, n))


@dataclass(frozen=True)
class BoundsRow:
    n: int
    k: int
    d: int
    main_bound: int
    thm2_bound: int
    nenashev_bound: int
    generic_rank: Fraction
    fos_bound: int

    @property
    def generic_rank_num(self) -> int:
        # unreduced, so the denominator is always C(n+d, n)
        return binom(self.n + self.d * self.k, self.n)

    @property
    def generic_rank_den(self) -> int:
        return binom(self.n + self.d, self.n)

    @property
    def generic_rank_ceil(self) -> int:
        return math.ceil(self.generic_rank)

    def to_dict(self) -> dict:
        return {c: getattr(self, c) for c in CSV_COLUMNS}


def bounds_row(n: int, d: int, k: int) -> BoundsRow:
    return BoundsRow(n, k, d, bound_main(n, d, k), bound_thm2(n, d, k), bound_nenashev(n, d, k),
                     generic_rank_expected(n, d, k), k ** n)


def comparison_table(n: int, k: int, d_range) -> list[BoundsRow]:
    if k < 3:
        raise ValueError("the bounds need k >= 3")
    return [bounds_row(n, d, k) for d in d_range]


def crossover(rows) -> int | None:
    """Smallest d from which thm2_bound stays above nenashev_bound to the end of the table."""
    d_star = None
    for r in reversed(rows):
        if r.thm2_bound > r.nenashev_bound:
            d_star = r.d
        else:
            break
    return d_star


def growth_ratios(n: int, k: int, d_range) -> list[Fraction]:
    """bound_main(d) / d^{n(k-4)}; for n = 2, k = 5 they decrease towards 1/4."""
    e = n * (k - 4)
    return [Fraction(bound_main(n, d, k), d ** e) for d in d_range]


# -- emitters ---------------------------------------------------------------

def to_csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in rows:
        w.writerow([getattr(r, c) for c in CSV_COLUMNS])
    return buf.getvalue()


def to_json(rows) -> str:
    head = {"n": rows[0].n, "k": rows[0].k} if rows else {}
    return json.dumps({**head, "rows": [r.to_dict() for r in rows]}, indent=2) + "\n"


def _curves(n: int, k: int, ds) -> dict:
    """Unfloored values of each bound, keyed by curve name."""
    def main(d):
        N = N_d(n, d)
        return Fraction(binom(N + k - 3, N), N + 1)

    def thm2(d):
        N = N_d(n, d)
        return min(main(d) - 1, Fraction(binom(n + k * d, n) // (N + 1) - 1))

    return {
        "main": [(d, main(d)) for d in ds],
        "thm2": [(d, thm2(d)) for d in ds],
        "nenashev": [(d, nenashev_value(n, d, k)) for d in ds],
        "generic": [(d, generic_rank_expected(n, d, k)) for d in ds],
    }


STYLES = {
    "main": 'stroke="#1f4fd1" stroke-width="2"',
    "thm2": 'stroke="#1f4fd1" stroke-width="2" stroke-dasharray="6 4"',
    "nenashev": 'stroke="#d11f1f" stroke-width="2"',
    "generic": 'stroke="#1f9d3a" stroke-width="2"',
}


def to_svg(rows, width: int = 800, height: int = 600) -> str:
    """Log-scale line chart of the four bounds; non-positive values are dropped."""
    if not rows:
        raise ValueError("nothing to plot")
    n, k = rows[0].n, rows[0].k
    ds = [r.d for r in rows]
    curves = _curves(n, k, ds)
    pts = {name: [(d, math.log10(v)) for d, v in c if v > 0] for name, c in curves.items()}
    ys = [y for c in pts.values() for _, y in c]
    y_lo, y_hi = math.floor(min(ys)), math.ceil(max(ys))
    if y_hi == y_lo:
        y_hi += 1
    left, right, top, bottom = 70, 20, 20, 50
    x_lo, x_hi = min(ds), max(ds) if max(ds) > min(ds) else min(ds) + 1

    def sx(d):
        return left + (d - x_lo) / (x_hi - x_lo) * (width - left - right)

    def sy(y):
        return height - bottom - (y - y_lo) / (y_hi - y_lo) * (height - top - bottom)

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
           f'viewBox="0 0 {width} {height}">',
           f'<rect width="{width}" height="{height}" fill="white"/>',
           f'<line x1="{left}" y1="{height - bottom}" x2="{width - right}" y2="{height - bottom}" stroke="black"/>',
           f'<line x1="{left}" y1="{top}" x2="{left}" y2="{height - bottom}" stroke="black"/>']
    for e in range(y_lo, y_hi + 1):
        y = sy(e)
        out.append(f'<line x1="{left - 5}" y1="{y:.2f}" x2="{left}" y2="{y:.2f}" stroke="black"/>')
        out.append(f'<text x="{left - 8}" y="{y + 4:.2f}" font-size="12" text-anchor="end">1e{e}</text>')
    for d in ds:
        x = sx(d)
        out.append(f'<line x1="{x:.2f}" y1="{height - bottom}" x2="{x:.2f}" y2="{height - bottom + 5}" stroke="black"/>')
        out.append(f'<text x="{x:.2f}" y="{height - bottom + 20}" font-size="12" text-anchor="middle">{d}</text>')
    out.append(f'<text x="{(left + width - right) / 2:.2f}" y="{height - 10}" font-size="13" '
               f'text-anchor="middle">d (n={n}, k={k})</text>')
    for name, c in pts.items():
        if not c:
            continue
        poly = " ".join(f"{sx(d):.2f},{sy(y):.2f}" for d, y in c)
        out.append(f'<polyline id="{name}" fill="none" {STYLES[name]} points="{poly}"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
