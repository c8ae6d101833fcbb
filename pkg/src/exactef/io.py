"""JSON readers and writers. Rationals travel as strings ("22/3") or ints."""
from __future__ import annotations

import json
from pathlib import Path

from .arith import RMatrix, format_rational, parse_rational
from .ef import EfVerdict, SizeReport
from .lp import LpOutcome
from .maps import AffineMap
from .polyhedra import Polyhedron
from .reduction import EquivalenceReport, ReductionInstance, normalize_graph
from .reps import HRep, VRep


class ParseError(ValueError):
    pass


def _only(obj, allowed, where):
    if not isinstance(obj, dict):
        raise ParseError(f"{where}: expected an object")
    extra = set(obj) - set(allowed)
    if extra:
        raise ParseError(f"{where}: unknown keys {sorted(extra)}")


def _rat(value, where):
    try:
        return parse_rational(value)
    except ValueError as exc:
        raise ParseError(f"{where}: {exc}") from None


def _vector(values, where, length=None):
    if not isinstance(values, list):
        raise ParseError(f"{where}: expected a list")
    out = tuple(_rat(v, where) for v in values)
    if length is not None and len(out) != length:
        raise ParseError(f"{where}: expected length {length}, got {len(out)}")
    return out


def _matrix(rows, where) -> RMatrix:
    if not isinstance(rows, list) or not rows:
        raise ParseError(f"{where}: expected a non-empty list of rows")
    data = [_vector(r, where) for r in rows]
    if len({len(r) for r in data}) != 1 or not data[0]:
        raise ParseError(f"{where}: ragged or empty rows")
    return RMatrix(tuple(data), len(data[0]))


def _constraints(items, dim, where):
    if not isinstance(items, list):
        raise ParseError(f"{where}: expected a list")
    out = []
    for k, item in enumerate(items):
        _only(item, ("coef", "rhs"), f"{where}[{k}]")
        if "coef" not in item or "rhs" not in item:
            raise ParseError(f"{where}[{k}]: needs coef and rhs")
        out.append((_vector(item["coef"], f"{where}[{k}].coef", dim), _rat(item["rhs"], f"{where}[{k}].rhs")))
    return tuple(out)


def polyhedron_from_obj(obj, where="polyhedron") -> Polyhedron:
    _only(obj, ("dim", "hrep", "vrep"), where)
    dim = obj.get("dim")
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise ParseError(f"{where}: dim must be a positive integer")
    if "hrep" not in obj and "vrep" not in obj:
        raise ParseError(f"{where}: needs hrep or vrep")
    h = v = None
    if "hrep" in obj:
        _only(obj["hrep"], ("inequalities", "equalities"), f"{where}.hrep")
        hr = obj["hrep"]
        h = HRep(dim, _constraints(hr.get("inequalities", []), dim, f"{where}.hrep.inequalities"),
                 _constraints(hr.get("equalities", []), dim, f"{where}.hrep.equalities"))
    if "vrep" in obj:
        _only(obj["vrep"], ("points", "rays", "lines"), f"{where}.vrep")
        vr = obj["vrep"]
        gens = {}
        for key in ("points", "rays", "lines"):
            items = vr.get(key, [])
            if not isinstance(items, list):
                raise ParseError(f"{where}.vrep.{key}: expected a list")
            gens[key] = [_vector(g, f"{where}.vrep.{key}", dim) for g in items]
        try:
            v = VRep(dim, **gens)
        except ValueError as exc:
            raise ParseError(f"{where}.vrep: {exc}") from None
    try:
        return Polyhedron(h=h, v=v)
    except ValueError as exc:
        raise ParseError(f"{where}: {exc}") from None


def map_from_obj(obj, where="map") -> AffineMap:
    _only(obj, ("matrix", "offset"), where)
    if "matrix" not in obj:
        raise ParseError(f"{where}: needs matrix")
    m = _matrix(obj["matrix"], f"{where}.matrix")
    offset = _vector(obj["offset"], f"{where}.offset", m.nrows) if "offset" in obj else None
    return AffineMap(m, offset)


def instance_from_obj(obj, where="instance") -> ReductionInstance:
    _only(obj, ("X", "Y", "graph", "alpha"), where)
    for key in ("Y", "graph", "alpha"):
        if key not in obj:
            raise ParseError(f"{where}: missing {key}")
    X = None if obj.get("X") is None else polyhedron_from_obj(obj["X"], f"{where}.X")
    Y = polyhedron_from_obj(obj["Y"], f"{where}.Y")
    g = obj["graph"]
    _only(g, ("B", "C", "b"), f"{where}.graph")
    B, C = _matrix(g.get("B"), f"{where}.graph.B"), _matrix(g.get("C"), f"{where}.graph.C")
    b = _vector(g.get("b"), f"{where}.graph.b", B.nrows)
    graph = normalize_graph(B, C, b)
    alpha = _vector(obj["alpha"], f"{where}.alpha", B.ncols)
    try:
        return ReductionInstance(Y=Y, graph=graph, alpha=alpha, X=X)
    except ValueError as exc:
        raise ParseError(f"{where}: {exc}") from None


def load_json(path) -> object:
    try:
        return json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc})") from None


# -- writers -------------------------------------------------------------------

def rat(q) -> str:
    return format_rational(q)


def vector_json(v) -> list:
    return None if v is None else [rat(a) for a in v]


def hrep_json(h: HRep) -> dict:
    return {
        "inequalities": [{"coef": vector_json(c), "rhs": rat(r)} for c, r in h.inequalities],
        "equalities": [{"coef": vector_json(c), "rhs": rat(r)} for c, r in h.equalities],
    }


def vrep_json(v: VRep) -> dict:
    return {"points": [vector_json(p) for p in v.points],
            "rays": [vector_json(r) for r in v.rays],
            "lines": [vector_json(l) for l in v.lines]}


def polyhedron_json(p, which: str = "both") -> dict:
    p = Polyhedron.coerce(p)
    out = {"dim": p.dim}
    if which in ("h", "both") and (which == "h" or p.has_h):
        out["hrep"] = hrep_json(p.hrep())
    if which in ("v", "both") and (which == "v" or p.has_v):
        out["vrep"] = vrep_json(p.vrep())
    return out


def map_json(m: AffineMap) -> dict:
    return {"matrix": [vector_json(r) for r in m.matrix.data], "offset": vector_json(m.offset)}


def verdict_json(v: EfVerdict) -> dict:
    return {"holds": v.holds, "detail": v.detail.value, "witness": vector_json(v.witness)}


def sizes_json(s: SizeReport) -> dict:
    return {
        "ext_inequalities": s.ext_inequalities,
        "ext_equalities": s.ext_equalities,
        "target_inequalities": s.target_inequalities,
        "target_equalities": s.target_equalities,
        "ext_size": s.ext_size,
        "target_size": s.target_size,
        "ext_ge_target": s.ext_ge_target,
        "convention": "equality counts as two inequalities",
        "note": "sizes of irredundant given representations, not extension complexities",
    }


def outcome_json(o: LpOutcome) -> dict:
    return {"status": o.status.value,
            "point": vector_json(o.point),
            "value": None if o.value is None else rat(o.value),
            "ray": vector_json(o.ray)}


def equivalence_json(r: EquivalenceReport) -> dict:
    leg = lambda l: {"status": l.status.value,
                     "value": None if l.value is None else rat(l.value),
                     "x": vector_json(l.point)}
    return {
        "lp0": leg(r.lp0), "lp1": leg(r.lp1), "lp2": leg(r.lp2),
        "retrieved_x": vector_json(r.retrieved_x),
        "retrieved_y": vector_json(r.retrieved_y),
        "retrieved_x_optimal": r.retrieved_optimal,
        "values_equal": r.values_equal,
        "equivalent": r.equivalent,
        "redundancy_reading": r.reading,
        "notes": list(r.notes),
    }


def dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"
