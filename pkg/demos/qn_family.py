"""The zig-zag family Q_n and its representation R.

R glues copies of V and W along a path of Kronecker pairs.  The only
weight R can be semistable for is forced by the dimension vectors of
the summands, and its norm grows like 2^n.  That is the example showing
the exponential null-cone weight bound cannot be improved much.
"""

from quiver_si import ray_weight, sigma_norm
from quiver_si.families import build_R, verify_qn

for n in range(3, 9):
    b = build_R(n)
    r = ray_weight(b.alpha, b.factor_dims)
    print(f"n = {n}: alpha = {b.alpha.values}")
    print(f"        weight = {r.weight.values}, |sigma|_alpha = {sigma_norm(r.weight, b.alpha)}"
          f" (2^n - 2 = {2**n - 2}), coordinate bound {r.coordinate_bound}")

# The expensive check (an exact 30x30 determinant) runs by default for n = 3 only.
report = verify_qn(3)
for check, ok in report.checks.items():
    print(f"  {'ok  ' if ok else 'FAIL'} {check} {report.details.get(check, '')}")
