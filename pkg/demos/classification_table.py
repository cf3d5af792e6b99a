# Which Lie hypersurfaces s(theta) carry an algebraic Ricci soliton?
# Sweep n and theta, print a table of verdicts and residuals.

import math

from metriclie import build_lie_hypersurface, soliton_solve

thetas = [k * math.pi / 8 for k in range(5)]
labels = ["0", "pi/8", "pi/4", "3pi/8", "pi/2"]

print("n   " + "".join(f"{lab:>14}" for lab in labels))
for n in range(2, 7):
    row = []
    for theta in thetas:
        res = soliton_solve(build_lie_hypersurface(n, theta).metric_algebra)
        row.append("yes" if res.feasible else f"no ({res.residual:.3f})")
    print(f"{n:<4}" + "".join(f"{cell:>14}" for cell in row))

# the ruled case only works in the lowest dimension,
# the horosphere (theta = pi/2) works everywhere
