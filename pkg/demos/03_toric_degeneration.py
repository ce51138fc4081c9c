"""The alcove triangulation of 3*Delta_2 and the planes it cuts out."""
from pathlib import Path

from secpowers.apolarity import dim_L_planes_fatpoint, expected_dim_V_fatpoint
from secpowers.engine import compute_dimension, planes_fatpoint, veronese_fatpoint
from secpowers.toric import sink_hyperplane, standard_triangulation, to_svg, union_planes, validate


t = standard_triangulation(2, 3)
print(len(t.simplices), "cells")
print(validate(t))
print("planes (coordinate indices):", union_planes(t))
print("sink coordinate:", sink_hyperplane(t))

out = Path("triangulation_2_3.svg")
out.write_text(to_svg(t))
print("wrote", out)


# --- Degenerating V to the planes keeps the fat-point counts ---
n, d = 2, 3
for k in (2, 3):
    for a in range(1, k + 1):
        v = compute_dimension(veronese_fatpoint(n, d, k, a)).computed_dim
        pi = compute_dimension(planes_fatpoint(n, d, k, a)).computed_dim
        print(f"k={k} a={a}: V {v}  Pi {pi}  formula {dim_L_planes_fatpoint(n, d, k, a)}"
              f"  expected {expected_dim_V_fatpoint(n, d, k, a)}")
