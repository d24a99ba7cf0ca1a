"""Command-line front end: ``quiver-si <subcommand> ...``.

Exit codes: 0 success / Semistable / NotInNullCone / verified,
2 ProbablyUnstable / InNullConeProbably / verification failed,
1 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from . import jsonio
from .bounds import bounds_report, polarize
from .errors import QuiverSIError
from .families import build_R, kronecker_V, kronecker_W, verify_qn
from .quiver import DimVector, Weight, enumerate_paths, path_counts, validate_quiver
from .schofield import build_linear_matrix, instantiate
from .stability import (
    DEFAULT_TRIALS,
    Decision,
    is_semistable,
    null_cone_membership,
    ray_weight,
    weight_bound_check,
)

EXIT_OK, EXIT_ERROR, EXIT_NEGATIVE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _read(path: str):
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise QuiverSIError(f"cannot read {path}: {exc.strerror}") from None
    return jsonio._load(text)


def _load_quiver_or_rep(path: str):
    obj = _read(path)
    if isinstance(obj, dict) and "maps" in obj:
        rep = jsonio.parse_representation(obj)
        return rep.quiver, rep
    return jsonio.parse_quiver(obj), None


def _load_rep(path: str):
    return jsonio.parse_representation(_read(path))


def _vector(text: str, vertices, kind):
    return jsonio.parse_vector(text, vertices, kind)


def _alpha(args, q, rep):
    if args.alpha is not None:
        return _vector(args.alpha, q.vertices, DimVector)
    if rep is not None:
        return rep.dim
    raise QuiverSIError("--alpha is required when the input is a bare quiver")


def _emit(args, payload: dict, text: str) -> None:
    print(jsonio.dumps(payload) if args.json else text)


def _fmt_vec(v) -> str:
    return "(" + ", ".join(str(x) for x in v.values) + ")"


def cmd_validate(args) -> int:
    q = jsonio.parse_quiver(_read(args.quiver))
    order = validate_quiver(q)
    _emit(args, {"valid": True, "topological_order": list(order)},
          "acyclic; topological order: " + " ".join(order))
    return EXIT_OK


def cmd_paths(args) -> int:
    q, _ = _load_quiver_or_rep(args.quiver)
    if args.source is not None or args.target is not None:
        if args.source is None or args.target is None:
            raise QuiverSIError("--from and --to go together")
        paths = enumerate_paths(q, args.source, args.target)
        _emit(args, {"from": args.source, "to": args.target,
                     "paths": [list(p.ids) for p in paths]},
              "\n".join(" ".join(p.ids) for p in paths) or "(no paths)")
        return EXIT_OK
    b = path_counts(q)
    lines = ["\t" + "\t".join(q.vertices)]
    lines += [x + "\t" + "\t".join(str(b[x][y]) for y in q.vertices) for x in q.vertices]
    _emit(args, {"path_counts": b}, "\n".join(lines))
    return EXIT_OK


def cmd_matrix(args) -> int:
    q, rep = _load_quiver_or_rep(args.input)
    alpha = _alpha(args, q, rep)
    sigma = _vector(args.sigma, q.vertices, Weight)
    lm = build_linear_matrix(q, alpha, sigma)
    payload = {"linear_matrix": jsonio.linear_matrix_to_obj(lm)}
    lines = [f"size {lm.size}, {lm.m} indeterminates"]
    for blk in lm.blocks:
        terms = " + ".join(f"t{i}*V({'.'.join(p.ids)})" for i, p in blk.terms)
        lines.append(f"  [{blk.codomain.vertex}#{blk.codomain.copy} <- "
                     f"{blk.domain.vertex}#{blk.domain.copy}] {terms}")
    if rep is not None:
        payload["pencil"] = jsonio.pencil_to_obj(instantiate(lm, rep))
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def _verdict_text(v) -> str:
    lines = [f"decision: {v.decision.value}" + (" (exact)" if v.exact else ""),
             f"seed: {v.seed}", f"trials: {v.trials}",
             f"failure probability bound: {jsonio.rational_str(v.failure_probability_bound)}"]
    if v.certificate is not None:
        c = v.certificate
        lines += [f"certificate weight: {_fmt_vec(c.weight)}", f"exponent d: {c.exponent}",
                  f"det value: {jsonio.rational_str(c.value)}"]
    return "\n".join(lines)


def cmd_semistable(args) -> int:
    rep = _load_rep(args.rep)
    sigma = _vector(args.sigma, rep.quiver.vertices, Weight)
    v = is_semistable(rep, sigma, trials=args.trials, seed=args.seed, exponent=args.exponent)
    _emit(args, {"verdict": jsonio.verdict_to_obj(v)}, _verdict_text(v))
    return EXIT_OK if v.decision is Decision.SEMISTABLE else EXIT_NEGATIVE


def cmd_nullcone(args) -> int:
    rep = _load_rep(args.rep)
    v = null_cone_membership(rep, args.max_coord, trials=args.trials, seed=args.seed)
    _emit(args, {"verdict": jsonio.verdict_to_obj(v)},
          _verdict_text(v) + f"\nweights tested: {v.weights_tested}")
    return EXIT_OK if v.decision is Decision.NOT_IN_NULL_CONE else EXIT_NEGATIVE


def cmd_ray_weight(args) -> int:
    q, rep = _load_quiver_or_rep(args.quiver)
    alpha = _alpha(args, q, rep)
    betas_obj = jsonio._load(args.betas)
    if not isinstance(betas_obj, list):
        raise QuiverSIError("--betas must be a JSON list of dimension vectors")
    betas = [jsonio.parse_vector(b, q.vertices, DimVector, f"/{i}") for i, b in enumerate(betas_obj)]
    r = ray_weight(alpha, betas)
    payload = {"ray_weight": jsonio.ray_weight_to_obj(r)}
    text = [f"weight: {_fmt_vec(r.weight)}", f"rank ok: {r.rank_ok}",
            f"coordinate bound: {jsonio.rational_str(r.coordinate_bound)}",
            f"|sigma|_alpha bound: {jsonio.rational_str(r.sigma_norm_bound)}"]
    if r.rank_ok and r.orthogonal:
        chk = weight_bound_check(r.weight, alpha)
        payload["bound_check"] = jsonio.weight_bound_check_to_obj(chk)
        text.append(f"|sigma|_alpha: {chk.sigma_norm}")
    elif r.rank_ok:
        text.append("weight . alpha != 0: alpha is not in the span of the betas")
    _emit(args, payload, "\n".join(text))
    return EXIT_OK


def cmd_bounds(args) -> int:
    q, rep = _load_quiver_or_rep(args.quiver)
    alpha = _alpha(args, q, rep)
    r = bounds_report(q, alpha, args.r)
    obj = jsonio.bounds_report_to_obj(r)
    ceil = obj["ceilings"]
    width = max(len(k) for k in obj)
    lines = []
    for k, v in obj.items():
        if k == "ceilings":
            continue
        extra = f"  (ceil {ceil[k]})" if k in ceil and str(ceil[k]) != v else ""
        lines.append(f"{k:<{width}}  {v}{extra}")
    _emit(args, {"bounds": obj}, "\n".join(lines))
    return EXIT_OK


def cmd_polarize(args) -> int:
    q, rep = _load_quiver_or_rep(args.quiver)
    alpha = _alpha(args, q, rep)
    pq = polarize(q, alpha)
    note = "only vertex pairs joined by an arrow are amplified"
    if args.json:
        print(jsonio.dumps({"quiver": jsonio.quiver_to_obj(pq), "note": note}))
    else:
        print(json.dumps(jsonio.quiver_to_obj(pq), indent=2))
    return EXIT_OK


def cmd_family(args) -> int:
    if args.name == "kronecker-v":
        print(json.dumps(jsonio.representation_to_obj(kronecker_V()), indent=2))
        return EXIT_OK
    if args.name == "kronecker-w":
        print(json.dumps(jsonio.representation_to_obj(kronecker_W()), indent=2))
        return EXIT_OK
    if args.n is None:
        raise QuiverSIError("family qn needs --n")
    if args.n < 3:
        raise QuiverSIError("family qn needs --n >= 3")
    bundle = build_R(args.n)
    payload = {"bundle": jsonio.bundle_to_obj(bundle)}
    code = EXIT_OK
    if args.verify:
        report = verify_qn(args.n, trials=args.trials, seed=args.seed,
                           semistability=args.semistable, bundle=bundle)
        payload["report"] = jsonio.qn_report_to_obj(report)
        payload["seed"] = args.seed
        payload["trials"] = args.trials
        code = EXIT_OK if report.ok else EXIT_NEGATIVE
    if args.json or not args.verify:
        print(jsonio.dumps(payload))
    else:
        print(f"Q_{args.n}: alpha = {_fmt_vec(bundle.alpha)}, "
              f"expected weight = {_fmt_vec(bundle.expected_weight)}, "
              f"|sigma|_alpha = {bundle.expected_norm}")
        print(f"seed: {args.seed}, trials: {args.trials}")
        for k, ok in payload["report"]["checks"].items():
            detail = payload["report"]["details"].get(k, "")
            print(f"  {'PASS' if ok else 'FAIL'}  {k}  {detail}".rstrip())
    return code


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="quiver-si", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version",
                   version=f"quiver-si {__version__} (format schema {jsonio.SCHEMA_VERSION})")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.set_defaults(func=func)
        return sp

    def randomized(sp):
        sp.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
        sp.add_argument("--seed", type=int, default=0)

    sp = add("validate", cmd_validate, "check a quiver for oriented cycles")
    sp.add_argument("quiver")

    sp = add("paths", cmd_paths, "list paths or the path-count matrix")
    sp.add_argument("quiver")
    sp.add_argument("--from", dest="source")
    sp.add_argument("--to", dest="target")

    sp = add("matrix", cmd_matrix, "block structure (and pencil) of the weight-sigma linear matrix")
    sp.add_argument("input", help="quiver or representation JSON")
    sp.add_argument("--sigma", required=True)
    sp.add_argument("--alpha")

    sp = add("semistable", cmd_semistable, "randomized sigma-semistability test")
    sp.add_argument("rep")
    sp.add_argument("--sigma", required=True)
    sp.add_argument("--exponent", type=int, help="blow-up exponent d (default |sigma|_alpha - 1)")
    randomized(sp)

    sp = add("nullcone", cmd_nullcone, "search for a weight certifying V is not in the null cone")
    sp.add_argument("rep")
    sp.add_argument("--max-coord", type=int, default=4)
    randomized(sp)

    sp = add("ray-weight", cmd_ray_weight, "primitive weight vanishing on n-1 dimension vectors")
    sp.add_argument("quiver")
    sp.add_argument("--alpha")
    sp.add_argument("--betas", required=True, help="JSON list of dimension vectors")

    sp = add("bounds", cmd_bounds, "evaluate every degree bound for (Q, alpha)")
    sp.add_argument("quiver")
    sp.add_argument("--alpha")
    sp.add_argument("--r", type=int, help="override the Krull dimension cap")

    sp = add("polarize", cmd_polarize, "emit the polarized quiver")
    sp.add_argument("quiver")
    sp.add_argument("--alpha")

    sp = add("family", cmd_family, "Kronecker indecomposables and the Q_n family")
    sp.add_argument("name", choices=["qn", "kronecker-v", "kronecker-w"])
    sp.add_argument("--n", type=int)
    sp.add_argument("--verify", action="store_true")
    sp.add_argument("--semistable", action=argparse.BooleanOptionalAction, default=None,
                    help="run the determinant check on R (default: only for n = 3)")
    randomized(sp)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (QuiverSIError, ValueError, TypeError) as exc:
        print(f"quiver-si: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
