# %% Exact volumes of the bosonic and Pauli polytopes, checked by sampling
from fractions import Fraction

from fermipoly import estimate_pauli_fraction, pauli_loss_bounds, vol_B, vol_P

# volumes are q * sqrt(d) with q rational
for d, N in [(3, 2), (6, 3), (10, 4)]:
    b, p = vol_B(d, N), vol_P(d, N)
    print(f"d={d:2d} N={N}  Vol(B)={b.coeff}*sqrt({d})  Vol(P)={p.coeff}*sqrt({d})")

# %% Vol(P)/Vol(B) against its bracket and a Monte Carlo estimate
for d, N in [(3, 2), (8, 3), (12, 5)]:
    exact = vol_P(d, N) / vol_B(d, N)
    lo, hi = pauli_loss_bounds(d, N)
    est = estimate_pauli_fraction(d, N, 200_000, seed=1)
    print(f"d={d:2d} N={N}  bracket [{float(lo):+.4f}, {float(hi):.4f}]  "
          f"exact {float(exact):.6f}  MC {est.mean:.6f} +- {est.stderr:.1e}")

# particle-hole symmetry
assert vol_P(9, 2) == vol_P(9, 7)
print("Vol(P_{9,2}) == Vol(P_{9,7}):", vol_P(9, 2) == vol_P(9, 7))

# rational fillings work the same way
print("Vol(P_{5,5/2}) coefficient:", vol_P(5, Fraction(5, 2)).coeff)
