"""The intertwining solver for shift-invariant subspaces.

Given a symbol A and an inner polynomial Theta, the solver looks for B
with (A + A*z) Theta = Theta (B + B*z); the invariance check tests the
equivalent geometric statement directly.  Both agree instance by instance.
"""

import numpy as np

from symbidisc import (
    SymbolPoly,
    adj,
    blh_solve,
    invariance_check,
    make_problem,
    opnorm,
    random_inner_poly,
    random_symbol,
    random_unitary,
)
from symbidisc.blh import BlhSolution

rng = np.random.default_rng(4)

print("Theta = z I: B must equal A")
A = random_symbol(rng, 2)
sol = blh_solve(make_problem(A, SymbolPoly([np.zeros((2, 2)), np.eye(2)])))
print(f"  ||B - A|| = {opnorm(sol.B - A):.1e}, kernel_dim = {sol.kernel_dim}")

print("\nTheta = constant unitary W: B = W* A W")
W = random_unitary(rng, 3)
A = random_symbol(rng, 3)
sol = blh_solve(make_problem(A, SymbolPoly([W])))
print(f"  ||B - W*AW|| = {opnorm(sol.B - adj(W) @ A @ W):.1e}, w(B) = {sol.wB:.4f}")

print("\nTheta = diag(z, 1) with A = [[0,2],[0,0]]: provably no solution")
theta = SymbolPoly([np.diag([0.0, 1.0]), np.diag([1.0, 0.0])])
A_bad = np.array([[0.0, 2.0], [0.0, 0.0]])
sol = blh_solve(make_problem(A_bad, theta))
ok, res = invariance_check(A_bad, theta, 8)
print(f"  solver residual {sol.residual:.3f}; invariance check: {ok}, residual {res:.3f}")

print("\nRandom instances: the solver and the geometric test always agree")
agree = total = 0
while total < 30:
    e = int(rng.integers(1, 4))
    theta = random_inner_poly(rng, e, int(rng.integers(1, 4)))
    A = random_symbol(rng, e)
    sol = blh_solve(make_problem(A, theta))
    if 1e-10 < sol.residual < 1e-4:
        continue  # knife-edge draw
    ok, _ = invariance_check(A, theta, 8)
    total += 1
    agree += isinstance(sol, BlhSolution) == ok
print(f"  {agree}/{total} agreements")
