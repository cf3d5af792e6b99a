# Curvature of a small metric Lie algebra, computed two ways.

from fractions import Fraction

import numpy as np

from metriclie import LieAlgebra, MetricLieAlgebra, connection, ricci_operator, scalar_curvature

# Heisenberg algebra: [X, Y] = Z, orthonormal basis
h3 = MetricLieAlgebra(LieAlgebra.from_brackets(["X", "Y", "Z"], {("X", "Y"): {"Z": 1}}))

nab = connection(h3).nabla
print("nabla_X Y =", nab[0, 1])  # Z/2
print("nabla_Y X =", nab[1, 0])  # -Z/2
print("torsion free:", np.all(nab[0, 1] - nab[1, 0] == [0, 0, 1]))

ric = ricci_operator(h3)
print(ric)
print("scalar curvature:", scalar_curvature(h3))  # -1/2

# nilpotent, so Ric = c id + D should close with D a derivation
# the well-known answer is c = -3/2, D = diag(1, 1, 2)
D = ric + Fraction(3, 2) * np.eye(3, dtype=int)
print("D =", np.diag(D))

# same thing in floating point
print(ricci_operator(h3.to_float()))
