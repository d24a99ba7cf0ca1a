"""Acceptance criteria, one test each; every test prints a PASS/FAIL line."""

import random
import time
from fractions import Fraction

import pytest

from conftest import dim, kronecker, q3, random_rep, triangle, weight
from oracles import symbolic_pencil_det
from quiver_si import (
    Arrow,
    Decision,
    DimVector,
    Quiver,
    RationalMatrix,
    Representation,
    Weight,
    build_linear_matrix,
    det_scaling_exponents,
    instantiate,
    is_semistable,
    minor_kernel,
    null_cone_membership,
    rank,
    replay_certificate,
    sigma_norm,
    vector_norms,
    weight_bound_check,
)
from quiver_si.bounds import bounds_report, independent_bound, main_bound
from quiver_si.cli import main
from quiver_si.families import build_qn, build_R, kronecker_V, kronecker_W
from quiver_si.stability import SAMPLE_BOUND, blowup_exponent


@pytest.fixture
def report(capsys):
    def emit(number, title, ok, elapsed, limit, detail=""):
        within = limit is None or elapsed < limit
        status = "PASS" if ok and within else "FAIL"
        timing = f"{elapsed:.2f}s" + (f" (< {limit}s)" if limit is not None else "")
        with capsys.disabled():
            print(f"\n[{status}] criterion {number}: {title}; {timing}; {detail}")
        assert ok, detail
        assert within, f"took {elapsed:.2f}s, limit {limit}s"
    return emit


def path_quiver(n):
    vs = tuple(str(i) for i in range(1, n + 1))
    return Quiver(vs, tuple(Arrow(f"e{i}", vs[i - 1], vs[i]) for i in range(1, n)))


def diamond():
    return Quiver(("1", "2", "3", "4"), (Arrow("a", "1", "2"), Arrow("b", "1", "3"),
                                         Arrow("c", "2", "4"), Arrow("d", "3", "4")))


CORPUS_QUIVERS = {
    "kronecker": kronecker(), "q3": q3(), "triangle": triangle(), "path4": path_quiver(4),
    "diamond": diamond(), "q4": build_qn(4), "q5": build_qn(5),
}


def test_criterion_1_qn_family(report, capsys):
    start = time.perf_counter()
    failures = []
    for n in range(3, 11):
        code = main(["family", "qn", "--n", str(n), "--verify", "--no-semistable"])
        capsys.readouterr()
        b = build_R(n)
        expected = tuple((-1) ** j * 2 ** (j - 1) for j in range(1, n + 1))
        if code != 0 or b.expected_weight.values != expected or \
                sigma_norm(b.expected_weight, b.alpha) != 2**n - 2:
            failures.append(n)
    elapsed = time.perf_counter() - start
    report(1, "Q_n kernel weight and |sigma|_alpha = 2^n - 2 for n = 3..10", not failures,
           elapsed, 1.0, f"failing n: {failures}" if failures else "8/8 verified")


def test_criterion_2_kronecker_rays(report):
    start = time.perf_counter()
    problems = []
    for rep, direction in ((kronecker_V(), (2, -1)), (kronecker_W(), (1, -2))):
        for c in (-3, -2, -1, 1, 2, 3):
            s = Weight(rep.quiver.vertices, (direction[0] * c, direction[1] * c))
            v = is_semistable(rep, s)
            expected = Decision.SEMISTABLE if c > 0 else Decision.PROBABLY_UNSTABLE
            norm = sigma_norm(s, rep.dim)
            d = blowup_exponent(s, rep.dim)
            if v.decision is not expected:
                problems.append(f"{s.values}: {v.decision.value}")
            elif c > 0 and replay_certificate(rep, v.certificate) != v.certificate.value:
                problems.append(f"{s.values}: certificate does not replay")
            elif c < 0 and not v.exact:
                problems.append(f"{s.values}: unstable verdict not exact")
            elif v.failure_probability_bound > Fraction(d * norm, SAMPLE_BOUND) ** 8:
                problems.append(f"{s.values}: failure bound too large")
    elapsed = time.perf_counter() - start
    report(2, "Kronecker V/W semistable exactly on the positive ray", not problems, elapsed, 5.0,
           "; ".join(problems) or "12/12 weights")


def test_criterion_3_r3_end_to_end(report):
    start = time.perf_counter()
    b = build_R(3)
    v = is_semistable(b.rep, b.expected_weight)
    ok = v.decision is Decision.SEMISTABLE and v.certificate.exponent == 5
    ok = ok and replay_certificate(b.rep, v.certificate) == v.certificate.value != 0
    nc = null_cone_membership(b.rep, coord_cap=4)
    ok = ok and nc.decision is Decision.NOT_IN_NULL_CONE
    ok = ok and replay_certificate(b.rep, nc.certificate) != 0
    elapsed = time.perf_counter() - start
    report(3, "R_3 semistable at d = 5 and not in the null cone", ok, elapsed, 60.0,
           f"semistable: {v.decision.value}, null cone: {nc.decision.value} "
           f"via {nc.certificate.weight.values if nc.certificate else None}")


def test_criterion_4_kernel_bound(report):
    start = time.perf_counter()
    rng = random.Random(2024)
    checked, problems = 0, []
    while checked < 150:
        n = rng.randint(2, 6)
        rows = [[rng.randint(0, 9) for _ in range(n)] for _ in range(n - 1)]
        m = RationalMatrix.from_rows(rows, n)
        if rank(m) != n - 1:
            continue
        u = minor_kernel(m)
        total = sum(map(sum, rows))
        bound = Fraction(total, n - 1) ** (n - 1)
        if any(sum(a * b for a, b in zip(r, u)) for r in rows):
            problems.append(f"{rows}: M u != 0")
        if max(abs(x) for x in u) > bound:
            problems.append(f"{rows}: |u| exceeds {bound}")
        checked += 1
    elapsed = time.perf_counter() - start
    report(4, "minor kernel annihilates M and obeys the coordinate bound", not problems,
           elapsed, 5.0, "; ".join(problems[:3]) or f"{checked} matrices")


def test_criterion_5_bound_identities(report):
    start = time.perf_counter()
    rng = random.Random(77)
    problems = []
    for _ in range(100):
        n = rng.randint(2, 6)
        vs = [str(i) for i in range(n)]
        a = [rng.randint(0, 9) for _ in vs]
        l1, l2sq = vector_norms(a)
        r = bounds_report(Quiver(vs), DimVector(vs, a))
        if main_bound(n, l1, r.r_cap) != independent_bound(n, l1, l2sq):
            problems.append(f"{a}: main(r_cap) != independent")
        if r.gamma_bound != n * r.null_cone_weight_bound:
            problems.append(f"{a}: gamma != n * null-cone bound")
    elapsed = time.perf_counter() - start
    report(5, "main bound at r_cap equals the alpha-only bound; gamma = n * weight bound",
           not problems, elapsed, 1.0, "; ".join(problems[:3]) or "100 random alpha")


def degree_window_corpus():
    rng = random.Random(31)
    out = [
        ("kronecker V", kronecker_V(), (2, -1)),
        ("kronecker W", kronecker_W(), (1, -2)),
        ("R_3", build_R(3).rep, (-1, 2, -4)),
    ]
    specs = [
        ("kronecker (2,2)", kronecker(), (2, 2), (1, -1)),
        ("kronecker (2,3)", kronecker(), (3, 2), (2, -3)),
        ("triangle (1,1,1)", triangle(), (1, 1, 1), (1, 0, -1)),
        ("triangle (1,1,2)", triangle(), (1, 1, 2), (2, 0, -1)),
        ("triangle (2,1,2)", triangle(), (2, 1, 2), (1, 0, -1)),
        ("triangle (1,2,1)", triangle(), (1, 2, 1), (2, 0, -2)),
        ("path4", path_quiver(4), (1, 1, 1, 1), (1, 0, 0, -1)),
        ("path4 (2,2,2,2)", path_quiver(4), (2, 2, 2, 2), (1, 0, 0, -1)),
        ("diamond", diamond(), (1, 1, 1, 1), (1, 0, 0, -1)),
        ("diamond (2,2,1,1)", diamond(), (2, 2, 1, 1), (1, -1, 0, 0)),
    ]
    for name, q, a, s in specs:
        out.append((name, random_rep(rng, q, DimVector(q.vertices, a), low=1, high=5), s))
    return out


def test_criterion_6_degree_windows(report):
    start = time.perf_counter()
    problems, nonempty, strict = [], 0, 0
    corpus = degree_window_corpus()
    for name, rep, s in corpus:
        q = rep.quiver
        sigma = Weight(q.vertices, s)
        norm = sigma_norm(sigma, rep.dim)
        exps = det_scaling_exponents(q, rep.dim, sigma, rep)
        if exps:
            nonempty += 1
        if not all(norm <= e <= q.n * norm for e in exps):
            problems.append(f"{name}: {sorted(exps)} outside [{norm}, {q.n * norm}]")
        if all(e <= (q.n - 1) * norm for e in exps):
            strict += 1
    has_long_path = any(n.startswith(("triangle", "path4")) for n, *_ in corpus)
    ok = not problems and nonempty >= 10 and has_long_path
    elapsed = time.perf_counter() - start
    report(6, "lambda-degrees of det(A) lie in [|sigma|, n|sigma|]", ok, elapsed, 10.0,
           "; ".join(problems) or f"{len(corpus)} instances, {nonempty} nonvanishing, "
           f"{strict} also inside [|sigma|, (n-1)|sigma|]")


def pit_corpus():
    rng = random.Random(5)
    reps = [
        (kronecker_V(), (2, -1)), (kronecker_W(), (1, -2)),
        (Representation(kronecker(), dim(kronecker(), 2, 2),
                        {"a": [[1, 2], [0, 0]], "b": [[3, -1], [0, 0]]}), (1, -1)),
    ]
    for q, a, s in ((kronecker(), (1, 1), (1, -1)), (kronecker(), (2, 2), (1, -1)),
                    (triangle(), (1, 1, 1), (1, 0, -1)), (triangle(), (1, 1, 2), (2, 0, -1)),
                    (path_quiver(4), (1, 1, 1, 1), (1, 0, 0, -1)),
                    (diamond(), (1, 1, 1, 1), (1, 0, 0, -1)),
                    (diamond(), (1, 1, 1, 1), (1, -1, 0, 0)),
                    (q3(), (1, 2, 2), (2, -1, 0))):
        alpha = DimVector(q.vertices, a)
        reps.append((Representation.zero(q, alpha), s))
        for rank_one in (False, True):
            for _ in range(3):
                reps.append((random_rep(rng, q, alpha, low=-1, high=1, rank_one=rank_one), s))
    return reps


def test_criterion_7_pit_vs_oracle(report):
    start = time.perf_counter()
    disagreements, compared, zeros = [], 0, 0
    for rep, s in pit_corpus():
        sigma = Weight(rep.quiver.vertices, s)
        lm = build_linear_matrix(rep.quiver, rep.dim, sigma)
        if not (lm.size <= 4 and lm.m <= 4):
            continue
        pencil = instantiate(lm, rep)
        poly = symbolic_pencil_det(pencil.size, [(i, pencil.matrix(i).tolist())
                                                 for i, _ in pencil.terms])
        oracle_zero = not any(poly.values())
        v = is_semistable(rep, sigma, trials=8, exponent=1)
        pit_zero = v.decision is Decision.PROBABLY_UNSTABLE
        compared += 1
        zeros += oracle_zero
        if oracle_zero != pit_zero:
            disagreements.append(f"{rep.dim.values} {s}")
    ok = not disagreements and compared >= 20 and 0 < zeros < compared
    elapsed = time.perf_counter() - start
    report(7, "randomized zero test agrees with symbolic expansion", ok, elapsed, None,
           "; ".join(disagreements) or f"{compared} pencils, {zeros} identically zero, "
           "100% agreement")


def test_criterion_8_null_cone_smoke(report):
    start = time.perf_counter()
    problems = []
    for name, q in CORPUS_QUIVERS.items():
        alpha = DimVector(q.vertices, [1 + i % 2 for i in range(q.n)])
        v = null_cone_membership(Representation.zero(q, alpha), coord_cap=3)
        if v.decision is not Decision.IN_NULL_CONE_PROBABLY or not v.exact:
            problems.append(f"zero rep of {name}: {v.decision.value}, exact={v.exact}")
    rng = random.Random(8)
    k = kronecker()
    generic = Representation(k, dim(k, 1, 1), {"a": [[rng.randint(1, 99)]],
                                               "b": [[rng.randint(1, 99)]]})
    v = null_cone_membership(generic, coord_cap=4)
    norm = None
    if v.decision is not Decision.NOT_IN_NULL_CONE:
        problems.append(f"generic Kronecker: {v.decision.value}")
    else:
        norm = sigma_norm(v.certificate.weight, generic.dim)
        bound = bounds_report(k, generic.dim).null_cone_weight_bound
        chk = weight_bound_check(v.certificate.weight, generic.dim)
        if not (norm <= 4 and bound == 4 and norm <= bound and chk.norm_ok):
            problems.append(f"certificate norm {norm} vs bound {bound}")
    elapsed = time.perf_counter() - start
    report(8, "zero reps lie in the null cone exactly; generic Kronecker does not",
           not problems, elapsed, None,
           "; ".join(problems) or f"{len(CORPUS_QUIVERS)} zero reps exact; "
           f"certificate |sigma|_alpha = {norm} <= 4")
