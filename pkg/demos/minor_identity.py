"""The squared-minor identity for almost-square matrices.

For an (n+1) x n matrix A, write A_i for A with its i-th row deleted.  Then

    sum_i |det(A_i)|^2 = det(A* A)

and the vector of alternating conjugated minors is orthogonal to every
column of A -- the generalized cross product.  In R^3 with n = 2 this is the
classic cross product and the identity is Lagrange's.
"""

import numpy as np

from gramdist import gram_logdets, minor_sum, orthogonal_minor_vector

print("The 3-d cross product as the n = 2 case")
a = np.array([[1.0, 0.0], [0.0, 1.0], [0.0, 0.0]])
v = orthogonal_minor_vector(a)
print(f"  columns e1, e2  ->  minor vector {v}  (= e1 x e2)")

print()
print("A random complex 5 x 4")
rng = np.random.default_rng(4)
a = rng.uniform(-1, 1, (5, 4)) + 1j * rng.uniform(-1, 1, (5, 4))

s = minor_sum(a)
_, ld_ab = gram_logdets(a[:, :3], a[:, 3])
gram_det = np.exp(ld_ab.log_mag)
print(f"  sum of squared minors : {s:.15f}")
print(f"  det(A* A)             : {gram_det:.15f}")
print(f"  relative deviation    : {abs(s - gram_det) / gram_det:.3e}")

b = orthogonal_minor_vector(a)
residual = np.linalg.norm(a.conj().T @ b)
print(f"  ||A* b|| for the minor vector b : {residual:.3e}")
print(f"  ||b||^2 equals the minor sum    : {abs(np.linalg.norm(b) ** 2 - s) / s:.3e}")
