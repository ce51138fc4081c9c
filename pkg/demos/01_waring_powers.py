"""Secant dimensions of k-th powers of forms, two ways."""
from secpowers.combinatorics import N_d
from secpowers.engine import compute_dimension, main_bound, veronese_double_points
from secpowers.secant import cross_check, generic_rank_ceiling, secant_dimension


# --- Fourth powers of binary quadrics ---
# V^4_{1,2} sits in P^8 (binary octics) and is a copy of P^2.
n, d, k = 1, 2, 4
for h in range(1, generic_rank_ceiling(n, d, k) + 1):
    r = secant_dimension(n, d, k, h)
    print(f"h={h}: dim Sec_h = {r.computed_secant_dim}  expected {r.expected_secant_dim}")


# --- The same question through a linear system ---
# Quartics on P^2 containing the conic and singular at h general points.
print("bound for this (n, d, k):", main_bound(n, d, k))
for h in range(0, 3):
    rep = compute_dimension(veronese_double_points(n, d, k, h))
    print(rep.label, rep.computed_dim, rep.expected_dim, rep.verdict.value)

# Under the bound both methods agree. One step beyond it the linear system
# picks up the conic times the doubled line through the two points.
agree, sec, lin = cross_check(1, 2, 4, 2)
print("agree at h=2:", agree, "| secant", sec.computed_secant_dim, "| system", lin.computed_dim)


# --- Squares of linear forms: for n = 2, h = 2 falls one short ---
for n in (1, 2):
    for h in (2, 3):
        r = secant_dimension(n, 1, 2, h)
        print(f"squares of linear forms, n={n}, h={h}:", r.computed_secant_dim, r.expected_secant_dim)

print("N_d for ternary cubics:", N_d(2, 3))
