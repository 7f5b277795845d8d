# %% How much of the Pauli polytope survives the generalized Pauli constraints
from fractions import Fraction

from fermipoly import (
    best_exact_lower_bound,
    estimate_order_fraction,
    exact_ratio_A_over_P,
    gpc_vs_pauli_ratio_bound,
    ratio_lower_fixed_n,
    ratio_lower_fixed_ratio,
    threshold_t,
)

# cap index m and threshold t with A_{d,N,m,t} inside F
print("t(8, 1) =", threshold_t(8, 1), "  t(1000, 209) =", threshold_t(1000, 209))

# %% Exact Vol(A)/Vol(P) grows towards 1 with d at fixed N
for d in (16, 24, 40, 80, 120, 200):
    m_star, q = best_exact_lower_bound(d, 8)
    print(f"d={d:3d}  m*={m_star}  Vol(A)/Vol(P) >= {float(q):.4g}")

# the same ratio seen by sampling
q = exact_ratio_A_over_P(40, 8, 1).value
est = estimate_order_fraction(40, 8, 1, threshold_t(8, 1), 400_000, seed=5)
print(f"(40, 8, m=1): exact {float(q):.5f}  MC {est.mean:.5f} +- {est.stderr:.1e}")

# %% Closed-form bounds: vacuous at small d, extremely tight at large d
for d in (26, 256, 1000):
    r = ratio_lower_fixed_n(d, 8)
    print(f"fixed N=8, d={d:4d}: vacuous={r.vacuous}  deficit={float(r.deficit):.3e}")
r = ratio_lower_fixed_ratio(10000, 2500)
print("fixed ratio 1/4 at d=10000: deficit <=", r.deficit.to_str(4))

# %% Volume removed by the extra constraints relative to the volume removed by Pauli
for d in (160, 320, 640):
    print(f"N=10, d={d}:", gpc_vs_pauli_ratio_bound(d, 10).to_str(4))
