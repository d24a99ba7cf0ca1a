"""Kronecker indecomposables and the zig-zag family Q_n with its representation R.

Q_n has vertices 1..n; every even vertex i is a source with two arrows to
i-1 and two arrows to i+1 (when i+1 <= n).  R is the direct sum over
i = 1..n-1 of a copy of the Kronecker representation V (i odd) or W
(i even) placed on the vertices {i, i+1}.  Its dimension vector is
(2, 3, ..., 3, 1), and the weight (-1, 2, -4, ..., (-2)^(n-1)) spans the
only ray on which R is semistable, with |sigma|_alpha = 2^n - 2.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .linalg import RationalMatrix
from .quiver import Arrow, DimVector, Quiver, Weight, sigma_norm, weight_apply
from .schofield import Representation
from .stability import Decision, cone_contains, coordinate_bound, is_semistable, ray_weight


def kronecker_quiver() -> Quiver:
    return Quiver(("x", "y"), (Arrow("a", "x", "y"), Arrow("b", "x", "y")))


def kronecker_V() -> Representation:
    """K -> K^2 with a = (1, 0)^T, b = (0, 1)^T; semistable exactly on Z_{>0}(2, -1)."""
    q = kronecker_quiver()
    return Representation(q, DimVector(q.vertices, (1, 2)),
                          {"a": [[1], [0]], "b": [[0], [1]]})


def kronecker_W() -> Representation:
    """K^2 -> K with a = (1 0), b = (0 1); semistable exactly on Z_{>0}(1, -2)."""
    q = kronecker_quiver()
    return Representation(q, DimVector(q.vertices, (2, 1)),
                          {"a": [[1, 0]], "b": [[0, 1]]})


def _qn_arrow_ids(i: int, j: int) -> tuple[str, str]:
    return f"a:{i}:{j}", f"b:{i}:{j}"


def build_qn(n: int) -> Quiver:
    if n < 3:
        raise ValueError(f"Q_n needs n >= 3, got {n}")
    vertices = tuple(str(i) for i in range(1, n + 1))
    arrows = []
    for i in range(2, n + 1, 2):
        for j in (i - 1, i + 1):
            if j <= n:
                a, b = _qn_arrow_ids(i, j)
                arrows += [Arrow(a, str(i), str(j)), Arrow(b, str(i), str(j))]
    return Quiver(vertices, tuple(arrows))


@dataclass(frozen=True)
class QnBundle:
    n: int
    quiver: Quiver
    alpha: DimVector
    rep: Representation
    factor_dims: tuple[DimVector, ...]
    expected_weight: Weight
    expected_norm: int


def build_R(n: int) -> QnBundle:
    """Q_n together with R and the data describing its unique semistable ray.

    Inside R(j) the coordinates of the summand on {j-1, j} come first, then
    those of the summand on {j, j+1}.
    """
    q = build_qn(n)
    # summand k lives on {k, k+1}: dimension 2 at k, 1 at k+1
    def offset(k: int, vertex: int) -> int:
        return 1 if vertex == k and k >= 2 else 0

    alpha = DimVector(q.vertices, [2] + [3] * (n - 2) + [1])
    maps = {a.id: [[Fraction(0)] * alpha[a.tail] for _ in range(alpha[a.head])]
            for a in q.arrows}
    kv, kw = kronecker_V(), kronecker_W()
    for k in range(1, n):
        source, sink = (k + 1, k) if k % 2 else (k, k + 1)
        factor = kv if k % 2 else kw
        for label, arrow_id in zip("ab", _qn_arrow_ids(source, sink)):
            block = factor.maps[label]
            target = maps[arrow_id]
            r0, c0 = offset(k, sink), offset(k, source)
            for i in range(block.rows):
                for j in range(block.cols):
                    target[r0 + i][c0 + j] = block[i, j]
    rep = Representation(q, alpha, {k: RationalMatrix.from_rows(v, alpha[q.arrow(k).tail])
                                    for k, v in maps.items()})

    factor_dims = []
    for k in range(1, n):
        values = [0] * n
        values[k - 1], values[k] = 2, 1
        factor_dims.append(DimVector(q.vertices, values))
    weight = Weight(q.vertices, [(-1) ** j * 2 ** (j - 1) for j in range(1, n + 1)])
    return QnBundle(n, q, alpha, rep, tuple(factor_dims), weight, 2**n - 2)


def factor_subrep_dims(bundle: QnBundle, k: int) -> list[DimVector]:
    """Dimension vectors of the proper nonzero subrepresentations of summand k.

    V (k odd) only has subrepresentations inside its sink k, of dimension 1
    or 2.  For W (k even) a nonzero subspace at the source k maps onto the
    sink k+1, giving dims (0, 1) and (1, 1) on (k, k+1).
    """
    n = bundle.n

    def dims(entries: dict[int, int]) -> DimVector:
        values = [0] * n
        for v, d in entries.items():
            values[v - 1] = d
        return DimVector(bundle.quiver.vertices, values)

    if k % 2:
        return [dims({k: 1}), dims({k: 2})]
    return [dims({k + 1: 1}), dims({k: 1, k + 1: 1})]


@dataclass
class QnReport:
    n: int
    checks: dict[str, bool] = field(default_factory=dict)
    details: dict[str, str] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def failures(self) -> list[str]:
        return [k for k, v in self.checks.items() if not v]


def verify_qn(n: int, trials: int = 8, seed: int = 0, semistability: bool | None = None,
              bundle: QnBundle | None = None) -> QnReport:
    """Run the computable checks on (Q_n, alpha, R).

    ``semistability`` controls the exact determinant check on R, which needs
    (|sigma| - 1)|sigma| square matrices; by default it only runs for n = 3.
    ``bundle`` lets a modified bundle be checked (negative controls).
    """
    bundle = bundle or build_R(n)
    report = QnReport(n)
    alpha, w = bundle.alpha, bundle.expected_weight

    rw = ray_weight(alpha, bundle.factor_dims)
    report.checks["kernel_weight"] = rw.rank_ok and rw.weight in (w, -w)
    report.details["kernel_weight"] = str(list(rw.weight.values))

    norm_ok = weight_apply(w, alpha) == 0 and sigma_norm(w, alpha) == 2**n - 2
    report.checks["sigma_norm"] = norm_ok and bundle.expected_norm == 2**n - 2
    report.details["sigma_norm"] = str(sigma_norm(w, alpha)) if norm_ok else "not orthogonal"

    cb = coordinate_bound(alpha)
    report.checks["coordinate_bound"] = max(abs(v) for v in w.values) <= cb
    report.details["coordinate_bound"] = f"{max(abs(v) for v in w.values)} <= {cb}"

    if semistability is None:
        semistability = n <= 3
    if semistability:
        verdict = is_semistable(bundle.rep, w, trials=trials, seed=seed)
        report.checks["semistable"] = verdict.decision is Decision.SEMISTABLE
        report.details["semistable"] = verdict.decision.value

    ok = True
    for k in range(1, n):
        ok = ok and cone_contains(w, bundle.factor_dims[k - 1], factor_subrep_dims(bundle, k))
    report.checks["factor_cones"] = ok
    return report
