"""Semistability by randomized identity testing, null-cone search and ray weights.

A representation V is sigma-semistable when some semi-invariant of weight
d*sigma (d > 0) does not vanish at V.  If V is semistable then already
d = |sigma|_alpha - 1 works, and the weight-d*sigma semi-invariants are the
determinants det(A(t)).  So semistability is equivalent to det(A(t)) being a
nonzero polynomial in t, which is tested by evaluating at random integer
points (Schwartz-Zippel).  A nonzero value is an exact certificate; all-zero
outcomes only bound the error probability.
"""

from __future__ import annotations

import enum
import itertools
import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import DomainMismatchError, RankDeficientWarning, ShapeError, ZeroWeightError
from .linalg import RationalMatrix, minor_kernel, primitive
from .quiver import DimVector, Weight, sigma_norm, vector_norms, weight_apply
from .schofield import (
    Representation,
    build_linear_matrix,
    evaluate_det,
    instantiate,
    random_t,
)

SAMPLE_BOUND = 2**20
DEFAULT_TRIALS = 8


class Decision(str, enum.Enum):
    SEMISTABLE = "Semistable"
    PROBABLY_UNSTABLE = "ProbablyUnstable"
    IN_NULL_CONE_PROBABLY = "InNullConeProbably"
    NOT_IN_NULL_CONE = "NotInNullCone"


@dataclass(frozen=True)
class Certificate:
    """det(A(t)) = value != 0 for the linear matrix of weight exponent * weight."""

    weight: Weight
    exponent: int
    t: tuple[int, ...]
    value: Fraction


@dataclass(frozen=True)
class Verdict:
    decision: Decision
    certificate: Certificate | None
    trials: int
    failure_probability_bound: Fraction
    seed: int
    exact: bool = False
    weights_tested: int = 1

    @property
    def positive(self) -> bool:
        return self.decision in (Decision.SEMISTABLE, Decision.NOT_IN_NULL_CONE)


def cone_contains(sigma: Weight, alpha: DimVector, betas: Sequence[DimVector]) -> bool:
    """sigma(alpha) == 0 and sigma(beta) <= 0 for every beta given.

    Only the linear conditions are checked; whether ``betas`` exhaust the
    subrepresentation dimension vectors is the caller's business.
    """
    if weight_apply(sigma, alpha) != 0:
        return False
    return all(weight_apply(sigma, b) <= 0 for b in betas)


def blowup_exponent(sigma: Weight, alpha: DimVector) -> int:
    return max(1, sigma_norm(sigma, alpha) - 1)


def is_semistable(rep: Representation, sigma: Weight, trials: int = DEFAULT_TRIALS,
                  seed: int = 0, exponent: int | None = None) -> Verdict:
    """Decide sigma-semistability of ``rep`` by testing det(A(t)) for weight d*sigma.

    ``d`` defaults to max(1, |sigma|_alpha - 1).  Each trial draws t uniformly
    from [1, 2**20]^m with its own child seed of ``seed``.  When every trial
    gives 0 the verdict is ProbablyUnstable with failure bound
    (d |sigma|_alpha / 2**20) ** trials; it is marked exact when every X_i is
    zero, since then the determinant vanishes identically.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    alpha = rep.dim
    sigma = sigma.reordered(rep.quiver.vertices)
    norm = sigma_norm(sigma, alpha)
    if sigma.is_zero():
        raise ZeroWeightError("semistability is only defined for nonzero weights")
    d = blowup_exponent(sigma, alpha) if exponent is None else exponent
    lm = build_linear_matrix(rep.quiver, alpha, sigma * d)
    pencil = instantiate(lm, rep)
    degree = d * norm

    if pencil.is_identically_zero():
        return Verdict(Decision.PROBABLY_UNSTABLE, None, trials,
                       Fraction(0), seed, exact=True)
    for child in np.random.SeedSequence(seed).spawn(trials):
        t = random_t(pencil.m, child, SAMPLE_BOUND)
        value = evaluate_det(pencil, t)
        if value:
            return Verdict(Decision.SEMISTABLE, Certificate(sigma, d, tuple(t), value),
                           trials, Fraction(0), seed, exact=True)
    bound = min(Fraction(degree, SAMPLE_BOUND) ** trials, Fraction(1))
    return Verdict(Decision.PROBABLY_UNSTABLE, None, trials, bound, seed)


def replay_certificate(rep: Representation, cert: Certificate) -> Fraction:
    """Recompute det(A(t)) for a certificate from scratch."""
    lm = build_linear_matrix(rep.quiver, rep.dim, cert.weight * cert.exponent)
    return evaluate_det(instantiate(lm, rep), cert.t)


def coordinate_bound(alpha: DimVector) -> Fraction:
    """(||alpha||_1 / (n-1)) ** (n-1): the largest coordinate needed on an extremal ray."""
    n = len(alpha)
    if n < 2:
        raise ShapeError("bounds need at least two vertices")
    l1, _ = vector_norms(alpha)
    return Fraction(l1, n - 1) ** (n - 1)


def sigma_norm_bound(alpha: DimVector) -> Fraction:
    """||alpha||_1 ** n / (2 (n-1) ** (n-1))."""
    n = len(alpha)
    if n < 2:
        raise ShapeError("bounds need at least two vertices")
    l1, _ = vector_norms(alpha)
    return Fraction(l1**n, 2 * (n - 1) ** (n - 1))


def _candidate_weights(alpha: DimVector, cap: int) -> list[Weight]:
    """Nonzero sigma with sigma . alpha = 0, |sigma(x)| <= cap, |sigma|_alpha > 0.

    Coordinates where alpha vanishes are fixed at 0: they do not change the
    linear matrix.  The last free coordinate is solved for when possible.
    Both signs of every weight are returned, the representative with negative
    first nonzero entry first; ordering is by |sigma|_alpha, then pair.
    """
    support = [i for i, a in enumerate(alpha.values) if a]
    if len(support) < 2:
        return []
    *free, last = support
    a_last = alpha.values[last]
    reps = []
    for combo in itertools.product(range(-cap, cap + 1), repeat=len(free)):
        partial = sum(c * alpha.values[i] for c, i in zip(combo, free))
        if partial % a_last:
            continue
        c_last = -partial // a_last
        if abs(c_last) > cap:
            continue
        values = [0] * len(alpha)
        for c, i in zip(combo, free):
            values[i] = c
        values[last] = c_last
        if not any(values):
            continue
        if next(v for v in values if v) > 0:
            continue  # the negated weight is the pair representative
        reps.append(Weight(alpha.vertices, values))
    reps.sort(key=lambda w: (sigma_norm(w, alpha), w.values))
    out = []
    for w in reps:
        out.extend([w, -w])
    return out


def search_box(alpha: DimVector, coord_cap: int) -> int:
    if len(alpha) < 2:
        return 0
    return min(coord_cap, math.ceil(coordinate_bound(alpha)))


def null_cone_membership(rep: Representation, coord_cap: int, trials: int = DEFAULT_TRIALS,
                         seed: int = 0) -> Verdict:
    """Search for a nonzero weight sigma with ``rep`` sigma-semistable.

    Weights range over sigma . alpha = 0 with
    |sigma(x)| <= min(coord_cap, ceil((||alpha||_1/(n-1))**(n-1))), in order
    of increasing |sigma|_alpha, both signs.  The first semistable weight
    gives NotInNullCone; otherwise InNullConeProbably with the summed
    failure bounds.  The box grows exponentially with n.
    """
    if coord_cap < 1:
        raise ValueError("coord_cap must be >= 1")
    weights = _candidate_weights(rep.dim, search_box(rep.dim, coord_cap))
    total, bound, exact = 0, Fraction(0), True
    for k, w in enumerate(weights, start=1):
        v = is_semistable(rep, w, trials, seed)
        total += v.trials
        if v.decision is Decision.SEMISTABLE:
            return Verdict(Decision.NOT_IN_NULL_CONE, v.certificate, total, Fraction(0), seed,
                           exact=True, weights_tested=k)
        bound += v.failure_probability_bound
        exact = exact and v.exact
    return Verdict(Decision.IN_NULL_CONE_PROBABLY, None, total, min(bound, Fraction(1)), seed,
                   exact=exact, weights_tested=len(weights))


@dataclass(frozen=True)
class RayWeightResult:
    weight: Weight
    rank_ok: bool
    coordinate_bound: Fraction
    sigma_norm_bound: Fraction
    alpha: DimVector

    @property
    def orthogonal(self) -> bool:
        """weight . alpha == 0; fails when alpha is not in the span of the betas."""
        return weight_apply(self.weight, self.alpha) == 0


def ray_weight(alpha: DimVector, betas: Sequence[DimVector]) -> RayWeightResult:
    """Primitive integral weight vanishing on the n-1 dimension vectors ``betas``.

    The weight is the minor kernel of the stacked betas, made primitive with
    negative first nonzero entry; the zero weight with rank_ok=False when the
    betas are dependent.  Which of +-weight lies in C(V) is not decided here.
    """
    n = len(alpha)
    if n < 2:
        raise ShapeError("ray_weight needs at least two vertices")
    if len(betas) != n - 1:
        raise ShapeError(f"need exactly {n - 1} dimension vectors, got {len(betas)}")
    rows = []
    for b in betas:
        if set(b.vertices) != set(alpha.vertices):
            raise DomainMismatchError("beta and alpha have different vertex sets")
        rows.append([b[x] for x in alpha.vertices])
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RankDeficientWarning)
        u = minor_kernel(RationalMatrix.from_rows(rows, n))
    rank_ok = any(u)
    weight = Weight(alpha.vertices, primitive(u) if rank_ok else u)
    return RayWeightResult(weight, rank_ok, coordinate_bound(alpha), sigma_norm_bound(alpha),
                           alpha)


@dataclass(frozen=True)
class WeightBoundCheck:
    coord_ok: bool
    norm_ok: bool
    coordinate_bound: Fraction
    sigma_norm_bound: Fraction
    max_coordinate: int
    sigma_norm: int


def weight_bound_check(sigma: Weight, alpha: DimVector) -> WeightBoundCheck:
    """Compare sigma against the coordinate and |sigma|_alpha bounds for extremal rays."""
    norm = sigma_norm(sigma, alpha)
    cb, nb = coordinate_bound(alpha), sigma_norm_bound(alpha)
    biggest = max((abs(s) for s in sigma.values), default=0)
    return WeightBoundCheck(biggest <= cb, norm <= nb, cb, nb, biggest, norm)
