"""Determinantal semi-invariants of weight sigma.

For a weight sigma with sigma . alpha = 0 the linear matrix

    A : (+)_x V(x)^{sigma_+(x)}  ->  (+)_y V(y)^{sigma_-(y)}

has, in the block from a copy of V(x) to a copy of V(y), the sum
t_1 V(p_1) + ... + t_r V(p_r) over all paths p_i from x to y, with fresh
indeterminates for every block.  The determinants det(A(t)), t in Q^m, span
SI(Q, alpha)_sigma.  This module builds the block layout, instantiates it
on a representation and evaluates determinants exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

import numpy as np

from .errors import DimensionMismatchError, LengthMismatchError, ShapeError
from .linalg import RationalMatrix, as_fraction, det_of_rows
from .quiver import DimVector, Path, Quiver, Weight, enumerate_paths, sigma_norm, weight_decompose


@dataclass(frozen=True)
class Representation:
    """A representation of ``quiver``: one matrix of shape dim(head) x dim(tail) per arrow."""

    quiver: Quiver
    dim: DimVector
    maps: Mapping[str, RationalMatrix]

    def __post_init__(self):
        q = self.quiver
        dim = self.dim.reordered(q.vertices)
        object.__setattr__(self, "dim", dim)
        maps = {}
        for a in q.arrows:
            if a.id not in self.maps:
                raise ShapeError(f"no matrix for arrow {a.id!r}")
            mat = self.maps[a.id]
            if not isinstance(mat, RationalMatrix):
                try:
                    mat = RationalMatrix.from_rows(mat, dim[a.tail])
                except ShapeError:
                    raise ShapeError(f"arrow {a.id!r}: expected {dim[a.head]}x{dim[a.tail]} "
                                     "matrix") from None
            if mat.shape != (dim[a.head], dim[a.tail]):
                raise ShapeError(
                    f"arrow {a.id!r}: expected {dim[a.head]}x{dim[a.tail]}, got {mat.rows}x{mat.cols}"
                )
            maps[a.id] = mat
        extra = set(self.maps) - set(maps)
        if extra:
            raise ShapeError(f"matrices given for unknown arrows {sorted(extra)}")
        object.__setattr__(self, "maps", maps)

    @classmethod
    def zero(cls, quiver: Quiver, dim: DimVector) -> Representation:
        return cls(quiver, dim, {a.id: RationalMatrix.zeros(dim[a.head], dim[a.tail])
                                 for a in quiver.arrows})

    def path_map(self, p: Path) -> RationalMatrix:
        """V(p) = V(a_l) ... V(a_1)."""
        out = self.maps[p.arrows[0].id]
        for a in p.arrows[1:]:
            out = self.maps[a.id] @ out
        return out

    def scaled(self, lam) -> Representation:
        return Representation(self.quiver, self.dim,
                              {k: m.scale(lam) for k, m in self.maps.items()})

    def __eq__(self, other):
        if not isinstance(other, Representation):
            return NotImplemented
        return (self.quiver == other.quiver and self.dim == other.dim
                and self.maps == other.maps)

    __hash__ = None


@dataclass(frozen=True)
class Slot:
    """One copy of V(vertex) inside the domain or codomain of the linear matrix."""

    vertex: str
    copy: int
    offset: int
    size: int


@dataclass(frozen=True)
class Block:
    domain: Slot
    codomain: Slot
    terms: tuple[tuple[int, Path], ...]  # (indeterminate id, path)


@dataclass(frozen=True)
class LinearMatrix:
    quiver: Quiver
    dim: DimVector
    weight: Weight
    size: int
    domain_slots: tuple[Slot, ...]
    codomain_slots: tuple[Slot, ...]
    blocks: tuple[Block, ...]

    @property
    def m(self) -> int:
        return sum(len(b.terms) for b in self.blocks)

    def indeterminates(self):
        """Yield (indeterminate id, domain slot, codomain slot, path) in id order."""
        for b in self.blocks:
            for i, p in b.terms:
                yield i, b.domain, b.codomain, p


def _slots(order, mult: Weight, alpha: DimVector) -> tuple[Slot, ...]:
    slots, offset = [], 0
    for x in order:
        for k in range(mult[x]):
            slots.append(Slot(x, k, offset, alpha[x]))
            offset += alpha[x]
    return tuple(slots)


def build_linear_matrix(q: Quiver, alpha: DimVector, sigma: Weight) -> LinearMatrix:
    """Block layout of the weight-sigma linear matrix.

    Domain slots run over the topological order then copy index, likewise
    codomain slots.  Indeterminates are numbered 1..m block by block (domain
    slot major, then codomain slot) and, within a block, in path order.
    Blocks without paths are zero and omitted.
    """
    order = q.topological_order
    alpha = alpha.reordered(q.vertices)
    sigma = sigma.reordered(q.vertices)
    size = sigma_norm(sigma, alpha)
    plus, minus = weight_decompose(sigma)
    domain = _slots(order, plus, alpha)
    codomain = _slots(order, minus, alpha)

    paths: dict[tuple[str, str], list[Path]] = {}
    blocks, next_id = [], 1
    for ds in domain:
        for cs in codomain:
            key = (ds.vertex, cs.vertex)
            if key not in paths:
                paths[key] = enumerate_paths(q, *key)
            if not paths[key]:
                continue
            terms = tuple((next_id + i, p) for i, p in enumerate(paths[key]))
            next_id += len(terms)
            blocks.append(Block(ds, cs, terms))
    return LinearMatrix(q, alpha, sigma, size, domain, codomain, tuple(blocks))


@dataclass(frozen=True)
class InstantiatedPencil:
    """A(t) = sum_i t_i X_i with each X_i stored sparsely as (row, col, value) triples.

    Rows index the codomain, columns the domain.
    """

    size: int
    terms: tuple[tuple[int, tuple[tuple[int, int, Fraction], ...]], ...]
    path_lengths: tuple[int, ...] = field(default=())

    @property
    def m(self) -> int:
        return len(self.terms)

    def matrix(self, index: int) -> RationalMatrix:
        """Dense X_index (1-based, matching the indeterminate ids)."""
        ident, triples = self.terms[index - 1]
        assert ident == index
        entries = [Fraction(0)] * (self.size * self.size)
        for r, c, v in triples:
            entries[r * self.size + c] = v
        return RationalMatrix(self.size, self.size, tuple(entries))

    def is_identically_zero(self) -> bool:
        """True when every X_i vanishes, so det(A(t)) = 0 for all t (size > 0)."""
        return self.size > 0 and not any(triples for _, triples in self.terms)

    def evaluate(self, t: Sequence) -> list[list[Fraction]]:
        if len(t) != self.m:
            raise LengthMismatchError(f"expected {self.m} values of t, got {len(t)}")
        a = [[Fraction(0)] * self.size for _ in range(self.size)]
        for (_, triples), ti in zip(self.terms, t):
            if not ti:
                continue
            ti = as_fraction(ti)
            for r, c, v in triples:
                a[r][c] += ti * v
        return a


def instantiate(lm: LinearMatrix, rep: Representation) -> InstantiatedPencil:
    """Place V(p) for every (indeterminate, path) into its block."""
    if rep.quiver != lm.quiver or rep.dim != lm.dim:
        raise DimensionMismatchError(
            f"representation of dimension {rep.dim.as_dict()} does not match "
            f"linear matrix for {lm.dim.as_dict()}"
        )
    cache: dict[tuple[str, ...], RationalMatrix] = {}
    terms, lengths = [], []
    for ident, dom, cod, p in lm.indeterminates():
        if p.ids not in cache:
            cache[p.ids] = rep.path_map(p)
        vp = cache[p.ids]
        triples = tuple((cod.offset + i, dom.offset + j, vp[i, j])
                        for i in range(vp.rows) for j in range(vp.cols) if vp[i, j])
        terms.append((ident, triples))
        lengths.append(len(p))
    return InstantiatedPencil(lm.size, tuple(terms), tuple(lengths))


def evaluate_det(pencil: InstantiatedPencil, t: Sequence) -> Fraction:
    """det(sum_i t_i X_i), exactly.  The empty (size 0) pencil has determinant 1."""
    return det_of_rows(pencil.evaluate(t))


def random_t(m: int, seed, high: int = 2**20) -> list[int]:
    """Uniform integers in [1, high]; ``seed`` is anything numpy accepts as a seed."""
    rng = np.random.default_rng(seed)
    return [int(v) for v in rng.integers(1, high, size=m, endpoint=True)]


def interpolate(xs: Sequence, ys: Sequence) -> list[Fraction]:
    """Monomial coefficients c_0..c_{k-1} of the polynomial through (xs, ys)."""
    xs = [as_fraction(x) for x in xs]
    coef = [as_fraction(y) for y in ys]
    k = len(xs)
    for j in range(1, k):  # divided differences, in place
        for i in range(k - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    poly = [Fraction(0)] * k
    for i in range(k - 1, -1, -1):  # Horner on the Newton form
        poly = _newton_step(poly, coef[i], xs[i])
    return poly


def _newton_step(poly: list[Fraction], c: Fraction, x: Fraction) -> list[Fraction]:
    # poly(z) <- poly(z) * (z - x) + c
    out = [Fraction(0)] * len(poly)
    for d, p in enumerate(poly):
        if not p:
            continue
        if d + 1 < len(out):
            out[d + 1] += p
        out[d] -= p * x
    out[0] += c
    return out


def det_scaling_exponents(q: Quiver, alpha: DimVector, sigma: Weight, rep: Representation,
                          tries: int = 4, seed: int = 0) -> set[int]:
    """Exponents of lambda occurring in det(A(t)) evaluated on the lambda-scaled representation.

    A path of length l contributes lambda**l, so the exponents are the total
    degrees of the homogeneous components of the semi-invariant
    V -> det(A_V(t)) for a fixed random t.  Up to ``tries`` t-vectors are
    drawn until the polynomial in lambda is nonzero; if none is, the empty
    set is returned.  Recovered exactly by interpolation at lambda = 1, 2, ...
    """
    lm = build_linear_matrix(q, alpha, sigma)
    if lm.size == 0:
        return set()
    npts = lm.size * (q.n - 1) + 1
    scaled = [instantiate(lm, rep.scaled(lam)) for lam in range(1, npts + 1)]
    for child in np.random.SeedSequence(seed).spawn(tries):
        t = random_t(lm.m, child)
        values = [evaluate_det(p, t) for p in scaled]
        if any(values):
            poly = interpolate(range(1, npts + 1), values)
            return {d for d, c in enumerate(poly) if c}
    return set()
