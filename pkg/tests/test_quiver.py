import pytest
from hypothesis import given, strategies as st

from conftest import dags, dim, kronecker, q3, triangle, weight
from oracles import recursive_paths
from quiver_si import (
    Arrow,
    DimVector,
    Quiver,
    Weight,
    enumerate_paths,
    path_counts,
    sigma_norm,
    validate_quiver,
    vector_norms,
    weight_apply,
    weight_decompose,
)
from quiver_si.errors import (
    CycleError,
    DanglingEndpointError,
    DomainMismatchError,
    DuplicateIdError,
    NotOrthogonalError,
    UnknownVertexError,
)


class TestValidate:
    def test_kronecker(self):
        assert validate_quiver(kronecker()) == ("x", "y")

    def test_q3_source_first(self):
        assert validate_quiver(q3()) == ("2", "1", "3")

    def test_two_cycle(self):
        q = Quiver(("1", "2"), (Arrow("a", "1", "2"), Arrow("b", "2", "1")))
        with pytest.raises(CycleError) as exc:
            validate_quiver(q)
        assert exc.value.cycle == ("1", "2", "1")

    def test_cycle_behind_acyclic_part(self):
        q = Quiver(("0", "1", "2", "3"), (Arrow("s", "0", "1"), Arrow("a", "1", "2"),
                                          Arrow("b", "2", "3"), Arrow("c", "3", "1")))
        with pytest.raises(CycleError) as exc:
            q.topological_order
        assert exc.value.cycle == ("1", "2", "3", "1")

    def test_loop_is_a_cycle(self):
        with pytest.raises(CycleError):
            validate_quiver(Quiver(("1",), (Arrow("l", "1", "1"),)))

    def test_dangling(self):
        with pytest.raises(DanglingEndpointError):
            Quiver(("1",), (Arrow("a", "1", "2"),))

    @pytest.mark.parametrize("vertices, arrows", [
        (("1", "1"), ()),
        (("1", "2"), (Arrow("a", "1", "2"), Arrow("a", "1", "2"))),
    ])
    def test_duplicates(self, vertices, arrows):
        with pytest.raises(DuplicateIdError):
            Quiver(vertices, arrows)

    @given(dags())
    def test_order_respects_arrows(self, q):
        order = validate_quiver(q)
        pos = {v: i for i, v in enumerate(order)}
        assert sorted(order) == sorted(q.vertices)
        assert all(pos[a.tail] < pos[a.head] for a in q.arrows)


class TestPaths:
    def test_kronecker(self):
        assert [p.ids for p in enumerate_paths(kronecker(), "x", "y")] == [("a",), ("b",)]

    def test_no_trivial_paths(self):
        assert enumerate_paths(kronecker(), "x", "x") == []

    def test_length_two(self):
        paths = enumerate_paths(triangle(), "1", "3")
        assert [p.ids for p in paths] == [("a", "b"), ("c",)]
        assert paths[0].source == "1" and paths[0].target == "3" and len(paths[0]) == 2

    def test_unknown_vertex(self):
        with pytest.raises(UnknownVertexError):
            enumerate_paths(kronecker(), "x", "z")

    def test_counts_kronecker(self):
        b = path_counts(kronecker())
        assert b == {"x": {"x": 0, "y": 2}, "y": {"x": 0, "y": 0}}

    def test_counts_q3(self):
        b = path_counts(q3())
        assert b["2"]["1"] == 2 and b["2"]["3"] == 2
        assert sum(sum(r.values()) for r in b.values()) == 4

    def test_counts_triangle(self):
        b = path_counts(triangle())
        assert (b["1"]["3"], b["1"]["2"], b["2"]["3"]) == (2, 1, 1)

    @given(dags(max_n=5))
    def test_paths_match_recursive_search(self, q):
        b = path_counts(q)
        arrows = [(a.id, a.tail, a.head) for a in q.arrows]
        for x in q.vertices:
            for y in q.vertices:
                paths = enumerate_paths(q, x, y)
                assert [p.ids for p in paths] == recursive_paths(arrows, x, y)
                assert b[x][y] == len(paths)
                assert all(1 <= len(p) <= q.n - 1 for p in paths)


class TestWeights:
    @pytest.mark.parametrize("s, b", [
        ((-1, 2, -4), (2, 3, 1)),
        ((0, 0, 0), (5, 1, 7)),
    ])
    def test_apply_zero(self, s, b):
        q = q3()
        assert weight_apply(weight(q, *s), dim(q, *b)) == 0

    def test_apply_kronecker(self):
        q = kronecker()
        assert weight_apply(weight(q, 2, -1), dim(q, 1, 2)) == 0
        assert weight_apply(weight(q, 1, 0), dim(q, 3, 2)) == 3

    def test_apply_domain_mismatch(self):
        with pytest.raises(DomainMismatchError):
            weight_apply(weight(kronecker(), 1, -1), dim(q3(), 1, 1, 1))

    def test_mapping_constructor_checks_keys(self):
        with pytest.raises(DomainMismatchError):
            Weight(("x", "y"), {"x": 1, "z": 2})
        assert Weight(("x", "y"), {"y": 2, "x": 1}).values == (1, 2)

    def test_negative_dimension_rejected(self):
        with pytest.raises(ValueError):
            DimVector(("x",), (-1,))

    @pytest.mark.parametrize("s, plus, minus", [
        ((-1, 2, -4), (0, 2, 0), (1, 0, 4)),
        ((0, 0), (0, 0), (0, 0)),
        ((3, -3), (3, 0), (0, 3)),
    ])
    def test_decompose(self, s, plus, minus):
        p, m = weight_decompose(Weight([str(i) for i in range(len(s))], s))
        assert p.values == plus and m.values == minus

    @pytest.mark.parametrize("s, a, norm", [
        ((-1, 2, -4), (2, 3, 1), 6),
        ((-1, 2, -4, 8), (2, 3, 3, 1), 14),
        ((0, 0), (4, 1), 0),
    ])
    def test_sigma_norm(self, s, a, norm):
        vs = [str(i) for i in range(len(s))]
        assert sigma_norm(Weight(vs, s), DimVector(vs, a)) == norm

    def test_sigma_norm_not_orthogonal(self):
        q = kronecker()
        with pytest.raises(NotOrthogonalError):
            sigma_norm(weight(q, 2, -1), dim(q, 1, 1))

    @given(st.lists(st.integers(-20, 20), min_size=1, max_size=6))
    def test_decompose_roundtrip(self, s):
        w = Weight([str(i) for i in range(len(s))], s)
        p, m = weight_decompose(w)
        assert p - m == w
        assert all(min(a, b) == 0 and a >= 0 and b >= 0 for a, b in zip(p, m))

    @given(st.lists(st.tuples(st.integers(-9, 9), st.integers(0, 9)), min_size=2, max_size=6))
    def test_norm_identities(self, pairs):
        # force sigma . alpha = 0 by fixing the last coordinate pair
        s = [p[0] for p in pairs[:-1]]
        a = [p[1] for p in pairs[:-1]]
        total = sum(x * y for x, y in zip(s, a))
        s.append(-total)
        a.append(1)
        vs = [str(i) for i in range(len(s))]
        w, alpha = Weight(vs, s), DimVector(vs, a)
        p, m = weight_decompose(w)
        norm = sigma_norm(w, alpha)
        assert weight_apply(p, alpha) == weight_apply(m, alpha) == norm
        assert sum(abs(x) * y for x, y in zip(s, a)) == 2 * norm


class TestNorms:
    @pytest.mark.parametrize("a, expected", [((2, 3, 1), (6, 14)), ((1, 1), (2, 2)),
                                             ((0, 0, 0), (0, 0))])
    def test_examples(self, a, expected):
        assert vector_norms(a) == expected

    @given(st.lists(st.integers(0, 50), min_size=1, max_size=8))
    def test_norm_inequalities(self, a):
        l1, l2sq = vector_norms(a)
        assert l2sq <= l1 * l1 <= len(a) * l2sq
