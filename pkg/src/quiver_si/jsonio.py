"""JSON encoding of quivers, vectors, representations and results.

Rationals are written as strings ``"p/q"`` (``"p"`` when q = 1); integers
appear as JSON numbers only where they are exact integers by nature.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Any

from .bounds import BoundsReport, MatrixSIBounds
from .errors import SchemaError, ShapeError
from .families import QnBundle, QnReport
from .linalg import RationalMatrix
from .quiver import Arrow, DimVector, Quiver, VertexVector, Weight
from .schofield import InstantiatedPencil, LinearMatrix, Representation
from .stability import RayWeightResult, Verdict, WeightBoundCheck

SCHEMA_VERSION = "1"

_RATIONAL = re.compile(r"^[+-]?\d+(/\d+)?$")


def rational_str(x) -> str:
    return str(Fraction(x))


def parse_rational(value: Any, pointer: str = "") -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise SchemaError(f"expected an integer or a 'p/q' string, got {value!r}", pointer)
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str) and _RATIONAL.match(value.strip()):
        try:
            return Fraction(value.strip())
        except ZeroDivisionError:
            raise SchemaError("zero denominator", pointer) from None
    raise SchemaError(f"expected an integer or a 'p/q' string, got {value!r}", pointer)


def _load(text_or_obj) -> Any:
    if isinstance(text_or_obj, (str, bytes)):
        try:
            return json.loads(text_or_obj)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"invalid JSON: {exc}") from None
    return text_or_obj


def _expect(obj, kind, pointer, what):
    if not isinstance(obj, kind):
        raise SchemaError(f"expected {what}", pointer)
    return obj


def quiver_to_obj(q: Quiver) -> dict:
    return {"vertices": list(q.vertices),
            "arrows": [{"id": a.id, "tail": a.tail, "head": a.head} for a in q.arrows]}


def parse_quiver(data, pointer: str = "") -> Quiver:
    obj = _expect(_load(data), dict, pointer, "an object with 'vertices' and 'arrows'")
    vertices = _expect(obj.get("vertices"), list, f"{pointer}/vertices", "a list of vertex ids")
    for i, v in enumerate(vertices):
        _expect(v, str, f"{pointer}/vertices/{i}", "a string vertex id")
    arrows = []
    for i, a in enumerate(_expect(obj.get("arrows", []), list, f"{pointer}/arrows", "a list")):
        here = f"{pointer}/arrows/{i}"
        _expect(a, dict, here, "an arrow object")
        for key in ("id", "tail", "head"):
            _expect(a.get(key), str, f"{here}/{key}", "a string")
        arrows.append(Arrow(a["id"], a["tail"], a["head"]))
    return Quiver(tuple(vertices), tuple(arrows))


def vector_to_obj(v: VertexVector) -> dict:
    return v.as_dict()


def parse_vector(data, vertices, kind=Weight, pointer: str = ""):
    obj = _expect(_load(data), dict, pointer, "an object mapping vertex ids to integers")
    if set(obj) != set(vertices):
        raise SchemaError(f"keys {sorted(obj)} do not match vertices {sorted(vertices)}", pointer)
    for k, v in obj.items():
        if isinstance(v, bool) or not isinstance(v, int):
            raise SchemaError("expected an integer", f"{pointer}/{k}")
    try:
        return kind(vertices, obj)
    except ValueError as exc:
        raise SchemaError(str(exc), pointer) from None


def matrix_to_obj(m: RationalMatrix) -> list:
    return [[rational_str(e) for e in row] for row in m.tolist()]


def representation_to_obj(rep: Representation) -> dict:
    return {"quiver": quiver_to_obj(rep.quiver),
            "dim": vector_to_obj(rep.dim),
            "maps": {a.id: matrix_to_obj(rep.maps[a.id]) for a in rep.quiver.arrows}}


def parse_representation(data) -> Representation:
    obj = _expect(_load(data), dict, "", "an object with 'quiver', 'dim' and 'maps'")
    if "quiver" not in obj:
        raise SchemaError("missing 'quiver'", "")
    q = parse_quiver(obj["quiver"], "/quiver")
    if "dim" not in obj:
        raise SchemaError("missing 'dim'", "")
    dim = parse_vector(obj["dim"], q.vertices, DimVector, "/dim")
    maps_obj = _expect(obj.get("maps"), dict, "/maps", "an object mapping arrow ids to matrices")
    maps = {}
    for a in q.arrows:
        here = f"/maps/{a.id}"
        if a.id not in maps_obj:
            raise SchemaError(f"no matrix for arrow {a.id!r}", "/maps")
        rows = _expect(maps_obj[a.id], list, here, "a list of rows")
        if len(rows) != dim[a.head] or any(
                not isinstance(r, list) or len(r) != dim[a.tail] for r in rows):
            raise ShapeError(f"{a.id}: expected a {dim[a.head]}x{dim[a.tail]} matrix")
        maps[a.id] = RationalMatrix.from_rows(
            [[parse_rational(e, f"{here}/{i}/{j}") for j, e in enumerate(r)]
             for i, r in enumerate(rows)], dim[a.tail])
    extra = set(maps_obj) - set(maps)
    if extra:
        raise SchemaError(f"matrices for unknown arrows {sorted(extra)}", "/maps")
    return Representation(q, dim, maps)


def verdict_to_obj(v: Verdict) -> dict:
    cert = None
    if v.certificate is not None:
        c = v.certificate
        cert = {"weight": vector_to_obj(c.weight), "exponent": c.exponent,
                "t": list(c.t), "value": rational_str(c.value)}
    return {"decision": v.decision.value, "exact": v.exact, "certificate": cert,
            "trials": v.trials, "weights_tested": v.weights_tested,
            "failure_probability_bound": rational_str(v.failure_probability_bound),
            "seed": v.seed}


def linear_matrix_to_obj(lm: LinearMatrix) -> dict:
    def slot(s):
        return {"vertex": s.vertex, "copy": s.copy, "offset": s.offset, "size": s.size}

    return {
        "size": lm.size, "m": lm.m,
        "weight": vector_to_obj(lm.weight), "dim": vector_to_obj(lm.dim),
        "domain_slots": [slot(s) for s in lm.domain_slots],
        "codomain_slots": [slot(s) for s in lm.codomain_slots],
        "blocks": [{"domain": [b.domain.vertex, b.domain.copy],
                    "codomain": [b.codomain.vertex, b.codomain.copy],
                    "terms": [{"indeterminate": i, "path": list(p.ids)} for i, p in b.terms]}
                   for b in lm.blocks],
    }


def pencil_to_obj(p: InstantiatedPencil) -> dict:
    return {"size": p.size, "m": p.m,
            "terms": [{"indeterminate": i,
                       "entries": [[r, c, rational_str(v)] for r, c, v in triples]}
                      for i, triples in p.terms]}


def bounds_report_to_obj(r: BoundsReport) -> dict:
    out = {}
    for k, v in vars(r).items():
        out[k] = rational_str(v) if isinstance(v, Fraction) else v
    out["ceilings"] = r.ceilings()
    return out


def matrix_si_bounds_to_obj(b: MatrixSIBounds) -> dict:
    return dict(vars(b))


def ray_weight_to_obj(r: RayWeightResult) -> dict:
    return {"weight": vector_to_obj(r.weight), "rank_ok": r.rank_ok,
            "orthogonal": r.orthogonal,
            "coordinate_bound": rational_str(r.coordinate_bound),
            "sigma_norm_bound": rational_str(r.sigma_norm_bound)}


def weight_bound_check_to_obj(c: WeightBoundCheck) -> dict:
    return {"coord_ok": c.coord_ok, "norm_ok": c.norm_ok,
            "max_coordinate": c.max_coordinate, "sigma_norm": c.sigma_norm,
            "coordinate_bound": rational_str(c.coordinate_bound),
            "sigma_norm_bound": rational_str(c.sigma_norm_bound)}


def bundle_to_obj(b: QnBundle) -> dict:
    return {"n": b.n, "quiver": quiver_to_obj(b.quiver), "alpha": vector_to_obj(b.alpha),
            "rep": representation_to_obj(b.rep),
            "factor_dims": [vector_to_obj(d) for d in b.factor_dims],
            "expected_weight": vector_to_obj(b.expected_weight),
            "expected_norm": b.expected_norm}


def qn_report_to_obj(r: QnReport) -> dict:
    return {"n": r.n, "ok": r.ok, "checks": dict(r.checks), "details": dict(r.details)}


def dumps(obj: dict) -> str:
    """Serialize a payload with the schema version embedded; output is deterministic."""
    return json.dumps({"schema_version": SCHEMA_VERSION, **obj}, indent=2)
