"""Anatomy of a determinantal semi-invariant.

For a weight sigma the linear matrix maps sigma_+ copies of the source
spaces to sigma_- copies of the target spaces, with a fresh indeterminate
for each path in each block.  Scaling every arrow by lambda scales a path
of length l by lambda^l, which is how the degree of the semi-invariant is
read off.
"""

from quiver_si import (
    DimVector,
    Representation,
    Weight,
    build_linear_matrix,
    det_scaling_exponents,
    evaluate_det,
    instantiate,
)
from quiver_si.quiver import Arrow, Quiver

# 1 -> 2 -> 3 together with a shortcut 1 -> 3
q = Quiver(("1", "2", "3"), (Arrow("a", "1", "2"), Arrow("b", "2", "3"), Arrow("c", "1", "3")))
alpha = DimVector(q.vertices, (1, 1, 1))
sigma = Weight(q.vertices, (1, 0, -1))
rep = Representation(q, alpha, {"a": [[2]], "b": [[3]], "c": [[1]]})

lm = build_linear_matrix(q, alpha, sigma)
for i, dom, cod, path in lm.indeterminates():
    print(f"t{i}: {dom.vertex} -> {cod.vertex} along {'.'.join(path.ids)}")

pencil = instantiate(lm, rep)
print("det at t = (1, 1):", evaluate_det(pencil, [1, 1]))  # 6 + 1
print("lambda exponents:", sorted(det_scaling_exponents(q, alpha, sigma, rep)))
