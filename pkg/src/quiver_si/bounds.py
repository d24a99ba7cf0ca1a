"""Closed-form degree bounds for semi-invariants of acyclic quivers, evaluated exactly."""

from __future__ import annotations

import math
from dataclasses import dataclass, fields
from fractions import Fraction

from .quiver import Arrow, DimVector, Quiver, Weight, sigma_norm, vector_norms


def beta_from_gamma(r: int, gamma) -> Fraction:
    """max{2, (3/8) r gamma^2}: generator degree from the null-cone degree and Krull dimension."""
    if r < 0 or gamma < 0:
        raise ValueError("r and gamma must be non-negative")
    return max(Fraction(2), Fraction(3, 8) * r * Fraction(gamma) ** 2)


@dataclass(frozen=True)
class MatrixSIBounds:
    gamma_lower: int
    gamma_upper: int
    beta_bound_m: int
    beta_bound_universal: int


def matrix_si_bounds(n: int, m: int) -> MatrixSIBounds:
    """Known bounds for the left-right SL_n x SL_n invariants of m-tuples of n x n matrices."""
    if n < 1 or m < 1:
        raise ValueError("n and m must be positive")
    return MatrixSIBounds(n * math.isqrt(n * n - 1), n * (n - 1), m * n**4, n**6)


def subring_degree_bound(sigma: Weight, alpha: DimVector) -> int:
    """|sigma|_alpha ** 5, a generating degree for the subring of weights d*sigma."""
    return sigma_norm(sigma, alpha) ** 5


def dim_rep(q: Quiver, alpha: DimVector) -> int:
    return sum(alpha[a.head] * alpha[a.tail] for a in q.arrows)


@dataclass(frozen=True)
class BoundsReport:
    n: int
    l1: int
    l2sq: int
    null_cone_weight_bound: Fraction
    gamma_bound: Fraction
    r_cap: Fraction
    dim_rep: int
    r_used: int
    main_bound: Fraction
    generator_degree_bound: Fraction
    independent_bound: Fraction
    degenerate: bool = False

    def rational_fields(self) -> dict[str, Fraction]:
        return {f.name: getattr(self, f.name) for f in fields(self)
                if isinstance(getattr(self, f.name), Fraction)}

    def ceilings(self) -> dict[str, int]:
        return {k: math.ceil(v) for k, v in self.rational_fields().items()}


def null_cone_weight_bound(n: int, l1: int) -> Fraction:
    """||alpha||_1^{2n} / (4 (n-1)^{2n-2})."""
    return Fraction(l1 ** (2 * n), 4 * (n - 1) ** (2 * n - 2))


def main_bound(n: int, l1: int, r) -> Fraction:
    """3 r n^2 ||alpha||_1^{4n} / (128 (n-1)^{4n-4})."""
    return Fraction(3 * n * n * l1 ** (4 * n), 128 * (n - 1) ** (4 * n - 4)) * Fraction(r)


def independent_bound(n: int, l1: int, l2sq: int) -> Fraction:
    """(3/256) (||alpha||_1^2 - ||alpha||_2^2) n^2 ||alpha||_1^{4n} / (n-1)^{4n-4}."""
    return Fraction(3 * (l1 * l1 - l2sq) * n * n * l1 ** (4 * n), 256 * (n - 1) ** (4 * n - 4))


def bounds_report(q: Quiver, alpha: DimVector, r_override: int | None = None) -> BoundsReport:
    """Every weight and degree bound for (q, alpha).

    r_used defaults to min(dim Rep(Q, alpha), floor(r_cap)), both of which
    bound the Krull dimension of SI(Q, alpha).  With one vertex there are no
    nonzero weights and the report is all zeros with ``degenerate`` set; a
    zero alpha also gives all zeros, since SI(Q, 0) is the ground field.
    """
    alpha = alpha.reordered(q.vertices)
    n = q.n
    l1, l2sq = vector_norms(alpha)
    r_cap = Fraction(l1 * l1 - l2sq, 2)
    dr = dim_rep(q, alpha)
    r_used = min(dr, math.floor(r_cap)) if r_override is None else r_override
    if n < 2 or l1 == 0:
        zero = Fraction(0)
        return BoundsReport(n, l1, l2sq, zero, zero, r_cap, dr, r_used, zero, zero, zero,
                            degenerate=n < 2)
    nc = null_cone_weight_bound(n, l1)
    gamma = n * nc
    return BoundsReport(
        n=n, l1=l1, l2sq=l2sq,
        null_cone_weight_bound=nc,
        gamma_bound=gamma,
        r_cap=r_cap,
        dim_rep=dr,
        r_used=r_used,
        main_bound=main_bound(n, l1, r_used),
        generator_degree_bound=beta_from_gamma(r_used, gamma),
        independent_bound=independent_bound(n, l1, l2sq),
    )


def polarize(q: Quiver, alpha: DimVector) -> Quiver:
    """Quiver with alpha_i * alpha_j arrows i -> j for every pair joined by an arrow of ``q``.

    Vertices are listed in topological order.  Only pairs that carry arrows
    in ``q`` are amplified; arrow ids are ``pol:<tail>:<head>:<k>``, k from 1.
    """
    order = q.topological_order
    pairs = []
    for a in q.arrows:
        if (a.tail, a.head) not in pairs:
            pairs.append((a.tail, a.head))
    position = {v: i for i, v in enumerate(order)}
    pairs.sort(key=lambda p: (position[p[0]], position[p[1]]))
    arrows = []
    for i, j in pairs:
        for k in range(1, alpha[i] * alpha[j] + 1):
            arrows.append(Arrow(f"pol:{i}:{j}:{k}", i, j))
    return Quiver(order, tuple(arrows))
