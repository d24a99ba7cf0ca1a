"""Where are the two Kronecker indecomposables semistable?

V = (K -> K^2) and W = (K^2 -> K) each sit on a single ray of weights.
We sweep weights along both candidate directions and watch the
determinantal test flip between Semistable and ProbablyUnstable.
"""

from quiver_si import Weight, is_semistable, replay_certificate
from quiver_si.families import kronecker_V, kronecker_W


def sweep(name, rep, direction):
    print(f"{name}: dimension vector {rep.dim.values}")
    for c in (-2, -1, 1, 2):
        sigma = Weight(rep.quiver.vertices, [c * x for x in direction])
        v = is_semistable(rep, sigma, seed=1)
        note = "exact, every block is empty" if v.exact and v.certificate is None else ""
        if v.certificate is not None:
            # a nonzero determinant is a proof; recompute it to be sure
            assert replay_certificate(rep, v.certificate) == v.certificate.value
            det = str(v.certificate.value)
            det = det if len(det) < 20 else f"a {len(det)}-digit integer"
            note = f"det = {det} at exponent d = {v.certificate.exponent}"
        print(f"  sigma = {sigma.values!s:10} {v.decision.value:17} {note}")


sweep("V", kronecker_V(), (2, -1))
sweep("W", kronecker_W(), (1, -2))
