"""Regression diagnostics without running the regression.

After centering the data, the minimized loss value of a multiple linear fit
is

    delta = sqrt( det((Xc|yc)' (Xc|yc)) / det(Xc' Xc) )

and the multiple correlation coefficient follows by Pythagoras:

    rho = sqrt(1 - det((Xc|yc)' (Xc|yc)) / (det(Xc' Xc) * yc'yc))

Both need only determinants of centered Gram matrices -- no normal
equations, no coefficients.  This script computes them that way and then
runs the actual solve to confirm.
"""

import numpy as np

from gramdist import (
    Dataset,
    loss_value_det,
    loss_value_residual,
    mean_squared_loss,
    multiple_correlation_det,
    multiple_correlation_projection,
    normal_solve,
)

print("Small worked dataset: x = 1..4, y = (1, 2, 2, 3)")
d = Dataset(np.array([[1.0], [2.0], [3.0], [4.0]]), np.array([1.0, 2.0, 2.0, 3.0]))
print(f"  loss value (determinants only) : {loss_value_det(d):.15f}   [sqrt(0.2)]")
print(f"  correlation (determinants only): {multiple_correlation_det(d):.15f}   [sqrt(0.9)]")
print(f"  mean squared loss              : {mean_squared_loss(d):.15f}   [0.2 / 3]")

a = normal_solve(d)
print()
print(f"Now the actual fit: intercept {a[0]:.4f}, slope {a[1]:.4f}")
print(f"  residual-norm loss             : {loss_value_residual(d, a):.15f}")
print(f"  cosine-form correlation        : {multiple_correlation_projection(d):.15f}")

print()
print("A larger random dataset, 200 samples, 6 regressors")
rng = np.random.default_rng(8)
x = rng.uniform(-1, 1, (200, 6))
y = x @ rng.uniform(-1, 1, 6) + 0.25 * rng.uniform(-1, 1, 200)
d2 = Dataset(x, y)

delta_det = loss_value_det(d2)
delta_res = loss_value_residual(d2, normal_solve(d2))
rho_det = multiple_correlation_det(d2)
rho_proj = multiple_correlation_projection(d2)
print(f"  loss: determinant route {delta_det:.12f} vs solve route {delta_res:.12f}")
print(f"  correlation: determinant route {rho_det:.12f} vs cosine route {rho_proj:.12f}")
print(f"  agreement: {abs(delta_det - delta_res):.3e} and {abs(rho_det - rho_proj):.3e}")
