"""Searching for a witness that a representation is outside the null cone.

A representation lies in the null cone when every semi-invariant of
positive degree vanishes on it.  To show it does not, it suffices to
find one weight sigma and one determinantal semi-invariant that is
nonzero.  The search walks weights in order of |sigma|_alpha.
"""

from quiver_si import DimVector, Representation, null_cone_membership
from quiver_si.bounds import bounds_report
from quiver_si.families import build_R, kronecker_quiver

q = kronecker_quiver()
alpha = DimVector(q.vertices, (1, 1))

zero = null_cone_membership(Representation.zero(q, alpha), coord_cap=4)
print(f"zero rep: {zero.decision.value}, exact = {zero.exact}, "
      f"{zero.weights_tested} weights tested")

generic = Representation(q, alpha, {"a": [[3]], "b": [[-5]]})
v = null_cone_membership(generic, coord_cap=4)
bound = bounds_report(q, alpha).null_cone_weight_bound
print(f"generic rep: {v.decision.value} via sigma = {v.certificate.weight.values}; "
      f"the weight bound for this alpha is {bound}")

b = build_R(3)
v = null_cone_membership(b.rep, coord_cap=4)
print(f"R_3: {v.decision.value} via sigma = {v.certificate.weight.values} "
      f"after {v.weights_tested} weights")
