# Solve Ric = c id + D and check the answer independently.

from fractions import Fraction as F

import numpy as np

from metriclie import build_lie_hypersurface, soliton_solve, verify_certificate

# n = 2, theta = 0 in exact arithmetic
m = build_lie_hypersurface(2, cos=1, sin=0).metric_algebra
res = soliton_solve(m)
print(res.status.value, "c =", res.c)
print(res.D)
print(verify_certificate(m, res.c, res.D))

# a tampered certificate fails
bad = verify_certificate(m, res.c, np.diag([F(0), F(-1, 4), F(1, 2)]))
print("swapped D ok?", bad.ok, "residual", round(bad.ricci_residual, 4))

# an interior angle: no certificate, but an exact distance and a witness entry
m = build_lie_hypersurface(4, cos=F(3, 5), sin=F(4, 5)).metric_algebra
res = soliton_solve(m)
ob = res.obstruction
print(res.status.value, "residual^2 =", res.residual_squared, "~", round(res.residual, 4))
print("stuck entry:", m.basis_names[ob.row], m.basis_names[ob.col], ob.value)
