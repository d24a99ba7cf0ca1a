"""Evaluating the degree bounds exactly.

All bounds are rationals; the integer ceiling is what matters for
degrees.  The r used in the main bound is capped both by dim Rep(Q, alpha)
and by (||alpha||_1^2 - ||alpha||_2^2)/2; at the second cap the main bound
coincides with the bound that only depends on alpha.
"""

from quiver_si import DimVector
from quiver_si.bounds import bounds_report, main_bound, matrix_si_bounds, polarize
from quiver_si.families import build_qn, kronecker_quiver

for q, a in ((kronecker_quiver(), (1, 1)), (kronecker_quiver(), (2, 3)), (build_qn(3), (2, 3, 1))):
    alpha = DimVector(q.vertices, a)
    r = bounds_report(q, alpha)
    print(f"alpha = {a}")
    for name, value in r.rational_fields().items():
        print(f"  {name:24} {value}")
    print(f"  main bound at r_cap equals independent bound: "
          f"{main_bound(r.n, r.l1, r.r_cap) == r.independent_bound}")
    pq = polarize(q, alpha)
    print(f"  polarized quiver has {len(pq.arrows)} arrows")

for n in (2, 3, 4):
    print(f"m-tuples of {n}x{n} matrices:", matrix_si_bounds(n, 2))
