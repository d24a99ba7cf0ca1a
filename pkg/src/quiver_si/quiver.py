"""Quivers, dimension vectors, weights and paths.

Vertex and arrow ids are strings.  Everything here is immutable; operations
are plain functions so they compose freely with the rest of the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Mapping, Sequence

from .errors import (
    CycleError,
    DanglingEndpointError,
    DomainMismatchError,
    DuplicateIdError,
    NotOrthogonalError,
    UnknownVertexError,
)


@dataclass(frozen=True)
class Arrow:
    id: str
    tail: str
    head: str


@dataclass(frozen=True)
class Quiver:
    """A finite directed multigraph.

    Construction checks ids and endpoints; acyclicity is checked by
    :func:`validate_quiver` (and lazily by :attr:`topological_order`).
    """

    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(str(v) for v in self.vertices))
        arrows = tuple(a if isinstance(a, Arrow) else Arrow(*map(str, a)) for a in self.arrows)
        object.__setattr__(self, "arrows", arrows)
        if len(set(self.vertices)) != len(self.vertices):
            raise DuplicateIdError(f"duplicate vertex id in {self.vertices}")
        ids = [a.id for a in arrows]
        if len(set(ids)) != len(ids):
            dup = next(i for i in ids if ids.count(i) > 1)
            raise DuplicateIdError(f"duplicate arrow id {dup!r}")
        known = set(self.vertices)
        for a in arrows:
            for end in (a.tail, a.head):
                if end not in known:
                    raise DanglingEndpointError(f"arrow {a.id!r} has unknown endpoint {end!r}")

    @property
    def n(self) -> int:
        return len(self.vertices)

    def arrow(self, arrow_id: str) -> Arrow:
        return self._arrow_index[arrow_id]

    @cached_property
    def _arrow_index(self) -> dict[str, Arrow]:
        return {a.id: a for a in self.arrows}

    @cached_property
    def topological_order(self) -> tuple[str, ...]:
        return validate_quiver(self)

    def check_vertex(self, x: str) -> None:
        if x not in self._vertex_set:
            raise UnknownVertexError(f"unknown vertex {x!r}")

    @cached_property
    def _vertex_set(self) -> frozenset[str]:
        return frozenset(self.vertices)


def validate_quiver(q: Quiver) -> tuple[str, ...]:
    """Return a topological order of ``q``, or raise :class:`CycleError`.

    Kahn's algorithm; among available vertices the one appearing first in
    ``q.vertices`` is taken, so the result is deterministic.
    """
    indeg = {v: 0 for v in q.vertices}
    out: dict[str, list[str]] = {v: [] for v in q.vertices}
    for a in q.arrows:
        indeg[a.head] += 1
        out[a.tail].append(a.head)
    position = {v: i for i, v in enumerate(q.vertices)}

    order: list[str] = []
    ready = sorted((v for v in q.vertices if indeg[v] == 0), key=position.__getitem__)
    while ready:
        v = ready.pop(0)
        order.append(v)
        for w in out[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                ready.append(w)
        ready.sort(key=position.__getitem__)

    if len(order) < q.n:
        raise CycleError(_find_cycle(q, {v for v in q.vertices if indeg[v] > 0}))
    return tuple(order)


def _find_cycle(q: Quiver, remaining: set[str]) -> list[str]:
    # every vertex left over by Kahn has a predecessor that is also left over,
    # so walking predecessors must revisit a vertex
    pred = {}
    for a in q.arrows:
        if a.head in remaining and a.tail in remaining:
            pred.setdefault(a.head, a.tail)
    start = next(v for v in q.vertices if v in remaining)
    seen: dict[str, int] = {}
    walk = []
    v = start
    while v not in seen:
        seen[v] = len(walk)
        walk.append(v)
        v = pred[v]
    cycle = walk[seen[v]:][::-1]
    # rotate so the cycle starts at its earliest vertex in input order
    position = {u: i for i, u in enumerate(q.vertices)}
    k = min(range(len(cycle)), key=lambda i: position[cycle[i]])
    cycle = cycle[k:] + cycle[:k]
    return cycle + [cycle[0]]


@dataclass(frozen=True)
class Path:
    """A directed path of length >= 1, stored as its arrow sequence."""

    arrows: tuple[Arrow, ...]

    def __post_init__(self):
        if not self.arrows:
            raise ValueError("paths have length >= 1")
        for a, b in zip(self.arrows, self.arrows[1:]):
            if a.head != b.tail:
                raise ValueError(f"arrows {a.id!r} and {b.id!r} do not compose")

    @property
    def ids(self) -> tuple[str, ...]:
        return tuple(a.id for a in self.arrows)

    @property
    def source(self) -> str:
        return self.arrows[0].tail

    @property
    def target(self) -> str:
        return self.arrows[-1].head

    def __len__(self) -> int:
        return len(self.arrows)

    def __repr__(self) -> str:
        return f"Path({', '.join(self.ids)})"


def enumerate_paths(q: Quiver, x: str, y: str) -> list[Path]:
    """All paths of length >= 1 from ``x`` to ``y``, sorted by arrow-id sequence."""
    q.check_vertex(x)
    q.check_vertex(y)
    validate_quiver(q)
    outgoing: dict[str, list[Arrow]] = {v: [] for v in q.vertices}
    for a in q.arrows:
        outgoing[a.tail].append(a)

    found: list[tuple[Arrow, ...]] = []
    stack: list[tuple[str, tuple[Arrow, ...]]] = [(x, ())]
    while stack:
        v, prefix = stack.pop()
        for a in outgoing[v]:
            walk = prefix + (a,)
            if a.head == y:
                found.append(walk)
            stack.append((a.head, walk))
    found.sort(key=lambda walk: tuple(a.id for a in walk))
    return [Path(walk) for walk in found]


def path_counts(q: Quiver) -> dict[str, dict[str, int]]:
    """``b[x][y]`` = number of paths of length >= 1 from x to y.

    Counted by dynamic programming over the topological order rather than
    by listing paths.
    """
    order = validate_quiver(q)
    b = {x: {y: 0 for y in q.vertices} for x in q.vertices}
    incoming: dict[str, list[str]] = {v: [] for v in q.vertices}
    for a in q.arrows:
        incoming[a.head].append(a.tail)
    for x in q.vertices:
        for y in order:
            b[x][y] = sum((1 if z == x else 0) + b[x][z] for z in incoming[y])
    return b


class VertexVector:
    """Integer-valued function on a fixed, ordered vertex set."""

    __slots__ = ("vertices", "values")

    def __init__(self, vertices: Sequence[str], values: Sequence[int] | Mapping[str, int]):
        vertices = tuple(str(v) for v in vertices)
        if isinstance(values, Mapping):
            keys = {str(k) for k in values}
            if keys != set(vertices):
                raise DomainMismatchError(
                    f"vector keys {sorted(keys)} do not match vertices {sorted(vertices)}"
                )
            lookup = {str(k): v for k, v in values.items()}
            values = [lookup[v] for v in vertices]
        values = tuple(values)
        if len(values) != len(vertices):
            raise DomainMismatchError(f"{len(values)} values for {len(vertices)} vertices")
        for v in values:
            if isinstance(v, bool) or int(v) != v:
                raise TypeError(f"entries must be integers, got {v!r}")
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "values", tuple(int(v) for v in values))
        self._check()

    def _check(self) -> None:
        pass

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    def __getitem__(self, x: str) -> int:
        try:
            return self.values[self.vertices.index(x)]
        except ValueError:
            raise UnknownVertexError(f"unknown vertex {x!r}") from None

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def items(self):
        return zip(self.vertices, self.values)

    def as_dict(self) -> dict[str, int]:
        return dict(self.items())

    def __eq__(self, other):
        if not isinstance(other, VertexVector):
            return NotImplemented
        return self.as_dict() == other.as_dict()

    def __hash__(self):
        return hash(frozenset(self.items()))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.as_dict()})"

    def reordered(self, vertices: Sequence[str]):
        return type(self)(vertices, self.as_dict())


class DimVector(VertexVector):
    __slots__ = ()

    def _check(self) -> None:
        if any(v < 0 for v in self.values):
            raise ValueError(f"dimension vectors are non-negative: {self.as_dict()}")

    def __add__(self, other: DimVector) -> DimVector:
        _same_domain(self, other)
        return DimVector(self.vertices, [self[v] + other[v] for v in self.vertices])


class Weight(VertexVector):
    __slots__ = ()

    def __mul__(self, k: int) -> Weight:
        return Weight(self.vertices, [k * v for v in self.values])

    __rmul__ = __mul__

    def __neg__(self) -> Weight:
        return self * -1

    def __sub__(self, other: Weight) -> Weight:
        _same_domain(self, other)
        return Weight(self.vertices, [self[v] - other[v] for v in self.vertices])

    def is_zero(self) -> bool:
        return not any(self.values)


def _same_domain(a: VertexVector, b: VertexVector) -> None:
    if set(a.vertices) != set(b.vertices):
        raise DomainMismatchError(f"vertex sets differ: {a.vertices} vs {b.vertices}")


def weight_apply(sigma: VertexVector, beta: VertexVector) -> int:
    """sigma(beta) = sum over vertices of sigma(x) * beta(x)."""
    _same_domain(sigma, beta)
    return sum(s * beta[x] for x, s in sigma.items())


def weight_decompose(sigma: Weight) -> tuple[Weight, Weight]:
    plus = Weight(sigma.vertices, [max(s, 0) for s in sigma.values])
    minus = Weight(sigma.vertices, [max(-s, 0) for s in sigma.values])
    return plus, minus


def sigma_norm(sigma: Weight, alpha: DimVector) -> int:
    """|sigma|_alpha, the common value of sigma_+ . alpha and sigma_- . alpha."""
    if weight_apply(sigma, alpha) != 0:
        raise NotOrthogonalError(
            f"sigma . alpha = {weight_apply(sigma, alpha)} != 0; SI(Q, alpha)_sigma = 0"
        )
    plus, minus = weight_decompose(sigma)
    norm = weight_apply(plus, alpha)
    assert norm == weight_apply(minus, alpha)
    return norm


def vector_norms(alpha: VertexVector | Sequence[int]) -> tuple[int, int]:
    """(l1 norm, squared l2 norm), both exact."""
    values = alpha.values if isinstance(alpha, VertexVector) else tuple(alpha)
    return sum(abs(v) for v in values), sum(v * v for v in values)
