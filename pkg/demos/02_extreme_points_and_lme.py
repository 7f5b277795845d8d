# %% Which extreme points of P_{11,5} are reachable by fermionic states
from fermipoly import PointKind, extreme_points_P, lme_exists, lme_moduli_dim, point_in_F, rep_index

pts = extreme_points_P(11, 5)
print(len(pts), "extreme points")

# grid of verdicts: rows i (ones), columns j (zeros); '#' marks points outside F
grid = [["?"] * 6 for _ in range(5)]
for p in pts:
    if p.kind is PointKind.INTERIOR:
        i, j = p.index
        grid[i][j] = "." if point_in_F(p).in_F else "#"
for i, row in enumerate(grid):
    print(f"i={i}  " + " ".join(row))

# %% Existence of LME states for small d
for N in range(0, 9):
    print(f"N={N}  " + " ".join(("Y" if lme_exists(d, N) else "x") if N <= d else "." for d in range(0, 13)))

# %% Moduli dimension and the representation index
for d, N in [(8, 4), (9, 3), (6, 3), (5, 1)]:
    print(f"d={d} N={N}  dim={lme_moduli_dim(d, N).kind.value} {lme_moduli_dim(d, N).as_int()}  index={rep_index(d, N)}")
