import sys
from pathlib import Path

import pytest
from hypothesis import settings, strategies as st

from quiver_si import Arrow, DimVector, Quiver, Representation, Weight

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


def kronecker():
    return Quiver(("x", "y"), (Arrow("a", "x", "y"), Arrow("b", "x", "y")))


def q3():
    return Quiver(("1", "2", "3"), (Arrow("a", "2", "1"), Arrow("b", "2", "1"),
                                    Arrow("c", "2", "3"), Arrow("d", "2", "3")))


def triangle():
    """1 -a-> 2 -b-> 3 and 1 -c-> 3: the smallest quiver with a length-2 path."""
    return Quiver(("1", "2", "3"), (Arrow("a", "1", "2"), Arrow("b", "2", "3"),
                                    Arrow("c", "1", "3")))


def dim(q, *values):
    return DimVector(q.vertices, values)


def weight(q, *values):
    return Weight(q.vertices, values)


@pytest.fixture
def kq():
    return kronecker()


@st.composite
def dags(draw, min_n=1, max_n=5, max_mult=2):
    """Acyclic quivers with vertices listed in a shuffled order."""
    n = draw(st.integers(min_n, max_n))
    arrows = []
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(draw(st.integers(0, max_mult))):
                arrows.append(Arrow(f"e{i}{j}{k}", str(i), str(j)))
    order = draw(st.permutations([str(i) for i in range(n)]))
    return Quiver(tuple(order), tuple(arrows))


def random_rep(rng, q, alpha, low=-2, high=2, rank_one=False):
    """Representation with integer entries drawn from ``rng`` (a random.Random)."""
    maps = {}
    for a in q.arrows:
        r, c = alpha[a.head], alpha[a.tail]
        if rank_one:
            u = [rng.randint(low, high) for _ in range(r)]
            v = [rng.randint(low, high) for _ in range(c)]
            maps[a.id] = [[ui * vj for vj in v] for ui in u]
        else:
            maps[a.id] = [[rng.randint(low, high) for _ in range(c)] for _ in range(r)]
    return Representation(q, alpha, maps)
