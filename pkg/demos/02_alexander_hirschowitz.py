"""Plain double points on P^N: the known special systems show up as excess."""
import numpy as np

from secpowers.combinatorics import quadric_double_points_dim
from secpowers.engine import ah_exception, compute_dimension, plain_double_points


excess = np.zeros((5, 13), dtype=int)
for N in range(1, 6):
    for h in range(13):
        r = compute_dimension(plain_double_points(N, 4, h))
        excess[N - 1, h] = r.computed_dim - r.expected_dim

print("excess for quartics, rows N = 1..5, columns h = 0..12")
print(excess)
print("special:", [(N, h) for N in range(1, 6) for h in range(13) if ah_exception(N, 4, h)])


# --- Quadrics: cones over quadrics in P^{N-h} ---
N = 5
print([compute_dimension(plain_double_points(N, 2, h)).computed_dim for h in range(N + 3)])
print([quadric_double_points_dim(N, h) for h in range(N + 3)])
