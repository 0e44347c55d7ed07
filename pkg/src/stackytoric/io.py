"""JSON encoding of exact data and the input schemas.

Exact numbers travel as literals ``{"a": "p/q", "b": "p/q"}`` meaning
``a + b sqrt(field_d)``.  Reports render every number as
``{"exact": literal, "decimal": "..."}``; the decimal is for people.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

import jsonschema

from .abelian import FgAbelianGroup
from .crossedmod import QuasiLattice
from .field import Scalar
from .fingroupoid import CrossedAction, FiniteCrossedModule, FiniteGroup, FiniteGroupoid
from .linalg import Matrix
from .polytope import HPolytope

SCHEMA_ID = "stacky-moment/1"
DECIMAL_DIGITS = 20


class SchemaError(Exception):
    """Input does not match the expected JSON shape."""

    def __init__(self, message: str, path: str = ""):
        super().__init__(message)
        self.message = message
        self.path = path

    def to_json(self) -> dict:
        return {"error": "schema", "message": self.message, "details": {"path": self.path}}


# -- schemas --------------------------------------------------------------------

_RAT = {"oneOf": [{"type": "integer"},
                  {"type": "string", "pattern": r"^\s*-?\d+(\s*/\s*\d+)?\s*$"}]}
LITERAL = {"oneOf": [
    {"type": "object", "properties": {"a": _RAT, "b": _RAT}, "required": ["a"],
     "additionalProperties": False},
    _RAT]}
_INT_MATRIX = {"type": "array", "items": {"type": "array", "items": {"type": "integer"}}}
_LIT_MATRIX = {"type": "array", "items": {"type": "array", "items": LITERAL}}

QUASI_LATTICE = {
    "type": "object",
    "properties": {
        "A": {"type": "object",
              "properties": {"generators": {"type": "integer", "minimum": 0},
                             "relations": _INT_MATRIX},
              "required": ["generators"], "additionalProperties": False},
        "E_dim": {"type": "integer", "minimum": 0},
        "del": _LIT_MATRIX,
    },
    "required": ["A", "E_dim", "del"],
    "additionalProperties": False,
}

STACKY_SCHEMA = {
    "type": "object",
    "properties": {
        "schema": {"const": SCHEMA_ID},
        "field_d": {"type": "integer", "minimum": 0},
        "quasi_lattice": QUASI_LATTICE,
        "polytope": {"type": "object",
                     "properties": {"normals": _LIT_MATRIX,
                                    "offsets": {"type": "array", "items": LITERAL}},
                     "required": ["normals", "offsets"], "additionalProperties": False},
        "labels": _INT_MATRIX,
        "cover": {"enum": ["labels", "universal", "full-preimage", "quotient"]},
        "Z": _INT_MATRIX,
        "name": {"type": "string"},
    },
    "required": ["schema", "field_d", "quasi_lattice", "polytope", "labels"],
    "additionalProperties": False,
}

MORITA_SCHEMA = {
    "type": "object",
    "properties": {
        "schema": {"const": SCHEMA_ID},
        "field_d": {"type": "integer", "minimum": 0},
        "source": QUASI_LATTICE,
        "target": QUASI_LATTICE,
        "certificate": {"type": "object",
                        "properties": {"U": _INT_MATRIX, "T": _LIT_MATRIX},
                        "required": ["U", "T"], "additionalProperties": False},
        "name": {"type": "string"},
    },
    "required": ["schema", "field_d", "source", "target"],
    "additionalProperties": False,
}

_TABLE = _INT_MATRIX
_INT_LIST = {"type": "array", "items": {"type": "integer"}}
FINITE_SCHEMA = {
    "type": "object",
    "properties": {
        "schema": {"const": SCHEMA_ID},
        "name": {"type": "string"},
        "groups": {"type": "object", "properties": {"G": _TABLE, "H": _TABLE},
                   "required": ["G", "H"], "additionalProperties": False},
        "del": _INT_LIST,
        "alpha": _INT_MATRIX,
        "groupoid": {
            "type": "object",
            "properties": {"objects": {"type": "integer", "minimum": 0},
                           "arrows": {"type": "integer", "minimum": 0},
                           "s": _INT_LIST, "t": _INT_LIST,
                           "comp": {"type": "array",
                                    "items": {"type": "array", "items": {"type": "integer"},
                                              "minItems": 3, "maxItems": 3}},
                           "inv": _INT_LIST, "unit": _INT_LIST},
            "required": ["objects", "arrows", "s", "t", "comp", "inv", "unit"],
            "additionalProperties": False},
        "action": {"type": "object",
                   "properties": {"G0": _INT_MATRIX, "G1": _INT_MATRIX, "H1": _INT_MATRIX},
                   "required": ["G0", "G1", "H1"], "additionalProperties": False},
        "moves": {"type": "object",
                  "properties": {"subgroup": _INT_LIST, "normal": _INT_LIST},
                  "additionalProperties": False},
    },
    "required": ["schema", "groups", "del", "alpha", "groupoid", "action"],
    "additionalProperties": False,
}


def validate(doc: Any, schema: dict) -> None:
    try:
        jsonschema.validate(doc, schema)
    except jsonschema.ValidationError as exc:
        path = "/".join(str(p) for p in exc.absolute_path)
        raise SchemaError(exc.message, path) from None


# -- literals -------------------------------------------------------------------

def parse_literal(lit: Any, d: int) -> Scalar:
    if isinstance(lit, dict):
        a = Fraction(str(lit["a"]).replace(" ", ""))
        b = Fraction(str(lit.get("b", 0)).replace(" ", ""))
    else:
        a, b = Fraction(str(lit).replace(" ", "")), Fraction(0)
    if b and d in (0, 1):
        raise SchemaError("irrational literal in a rational field (field_d is 0 or 1)")
    try:
        return Scalar(a, b, d)
    except ValueError as exc:
        raise SchemaError(str(exc)) from None


def literal(x) -> dict:
    return Scalar(x).literal() if not isinstance(x, Scalar) else x.literal()


def number(x) -> dict:
    """``{"exact": literal, "decimal": str}`` for a scalar or fraction."""
    s = x if isinstance(x, Scalar) else Scalar(x)
    dec = s.to_decimal(DECIMAL_DIGITS)
    return {"exact": s.literal(), "decimal": format(dec, "f") if abs(dec) >= 1e-6 or not s
            else format(dec, "e")}


def jsonable(obj: Any) -> Any:
    """Recursively convert results into JSON-ready values."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, (str, int)):
        return obj
    if isinstance(obj, float):
        return obj
    if isinstance(obj, (Scalar, Fraction)):
        return number(obj)
    if isinstance(obj, Matrix):
        return [[number(x) for x in r] for r in obj.rows]
    if isinstance(obj, dict):
        return {key_label(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (frozenset, set)):
        items = [jsonable(x) for x in obj]
        return sorted(items, key=lambda v: json.dumps(v, sort_keys=True))
    if isinstance(obj, (list, tuple)):
        return [jsonable(x) for x in obj]
    if hasattr(obj, "as_dict"):
        return jsonable(obj.as_dict())
    return str(obj)


def key_label(k: Any) -> str:
    if isinstance(k, str):
        return k
    return json.dumps(jsonable(k), sort_keys=True, separators=(",", ":"))


def dumps(obj: Any) -> str:
    return json.dumps(jsonable(obj), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


# -- documents ------------------------------------------------------------------

def parse_quasilattice(doc: dict, d: int) -> QuasiLattice:
    g = doc["A"]["generators"]
    rels = tuple(tuple(r) for r in doc["A"].get("relations", []))
    if any(len(r) != g for r in rels):
        raise SchemaError("relation length differs from the generator count", "A/relations")
    e = doc["E_dim"]
    rows = [[parse_literal(x, d) for x in r] for r in doc["del"]]
    if len(rows) != e or any(len(r) != g for r in rows):
        raise SchemaError(f"del must be an E_dim x generators matrix ({e} x {g})", "del")
    return QuasiLattice(FgAbelianGroup(g, rels), e, Matrix(rows, g))


def quasilattice_to_json(Q: QuasiLattice) -> dict:
    return {"A": {"generators": Q.generators, "relations": [list(r) for r in Q.A.relations]},
            "E_dim": Q.e_dim, "del": [[x.literal() for x in r] for r in Q.boundary.rows]}


def parse_stacky(doc: dict):
    from .prato import StackyPolytope

    validate(doc, STACKY_SCHEMA)
    d = doc["field_d"]
    Q = parse_quasilattice(doc["quasi_lattice"], d)
    poly = doc["polytope"]
    normals = [[parse_literal(x, d) for x in r] for r in poly["normals"]]
    offsets = [parse_literal(x, d) for x in poly["offsets"]]
    if len(normals) != len(offsets):
        raise SchemaError("normals and offsets differ in length", "polytope")
    if any(len(a) != Q.e_dim for a in normals):
        raise SchemaError("normal length differs from E_dim", "polytope/normals")
    labels = doc["labels"]
    if len(labels) != len(normals) or any(len(b) != Q.generators for b in labels):
        raise SchemaError("labels must give one vector in Z^generators per facet", "labels")
    P = HPolytope(Q.e_dim, normals, offsets, check_normals=False)
    return StackyPolytope(Q, P, labels), doc.get("cover"), [tuple(z) for z in doc.get("Z", [])]


def stacky_to_json(S, cover: str | None = None, Z=(), name: str | None = None) -> dict:
    d = S.Q.field_d or S.P.field_d
    doc = {"schema": SCHEMA_ID, "field_d": d, "quasi_lattice": quasilattice_to_json(S.Q),
           "polytope": {"normals": [[x.literal() for x in a] for a in S.P.normals],
                        "offsets": [x.literal() for x in S.P.offsets]},
           "labels": [list(b) for b in S.labels]}
    if cover:
        doc["cover"] = cover
    if Z:
        doc["Z"] = [list(z) for z in Z]
    if name:
        doc["name"] = name
    return doc


def parse_morita(doc: dict):
    validate(doc, MORITA_SCHEMA)
    d = doc["field_d"]
    Q1 = parse_quasilattice(doc["source"], d)
    Q2 = parse_quasilattice(doc["target"], d)
    cert = None
    if "certificate" in doc:
        c = doc["certificate"]
        cert = {"U": c["U"], "T": Matrix([[parse_literal(x, d) for x in r] for r in c["T"]],
                                          Q1.e_dim)}
    return Q1, Q2, cert


def parse_finite(doc: dict):
    """Build (crossed module, groupoid, action) from integer tables."""
    validate(doc, FINITE_SCHEMA)
    G = FiniteGroup.from_table(doc["groups"]["G"], "G")
    H = FiniteGroup.from_table(doc["groups"]["H"], "H")
    bd = doc["del"]
    al = doc["alpha"]
    if len(bd) != len(H) or len(al) != len(G) or any(len(r) != len(H) for r in al):
        raise SchemaError("del or alpha table has the wrong size")
    cm = FiniteCrossedModule(G, H, {h: bd[h] for h in H},
                             {(g, h): al[g][h] for g in G for h in H}, doc.get("name", "cm"))
    gd = doc["groupoid"]
    n0, n1 = gd["objects"], gd["arrows"]
    for key, size in (("s", n1), ("t", n1), ("inv", n1), ("unit", n0)):
        if len(gd[key]) != size:
            raise SchemaError(f"groupoid table {key} has the wrong length", f"groupoid/{key}")
    X = FiniteGroupoid(range(n0), range(n1), dict(enumerate(gd["s"])), dict(enumerate(gd["t"])),
                       {(f, g): h for f, g, h in gd["comp"]}, dict(enumerate(gd["inv"])),
                       dict(enumerate(gd["unit"])), name="X")
    act = doc["action"]
    G0, G1, H1 = act["G0"], act["G1"], act["H1"]
    if (len(G0) != len(G) or len(G1) != len(G) or len(H1) != len(H)
            or any(len(r) != n0 for r in G0) or any(len(r) != n1 for r in G1 + H1)):
        raise SchemaError("action tables have the wrong size", "action")
    a = CrossedAction({(g, x): G0[g][x] for g in G for x in range(n0)},
                      {(g, f): G1[g][f] for g in G for f in range(n1)},
                      {(h, f): H1[h][f] for h in H for f in range(n1)})
    return cm, X, a, doc.get("moves", {})


def finite_to_json(cm: FiniteCrossedModule, X: FiniteGroupoid, a: CrossedAction,
                   name: str | None = None) -> dict:
    """Serialize a model, renumbering elements, objects and arrows from 0."""
    gi = {g: i for i, g in enumerate(cm.G.elements)}
    hi = {h: i for i, h in enumerate(cm.H.elements)}
    oi = {x: i for i, x in enumerate(X.objects)}
    ai = {f: i for i, f in enumerate(X.arrows)}
    doc = {
        "schema": SCHEMA_ID,
        "groups": {"G": [[gi[cm.G.mul(x, y)] for y in cm.G] for x in cm.G],
                   "H": [[hi[cm.H.mul(x, y)] for y in cm.H] for x in cm.H]},
        "del": [gi[cm.bd(h)] for h in cm.H],
        "alpha": [[hi[cm.act(g, h)] for h in cm.H] for g in cm.G],
        "groupoid": {"objects": len(X.objects), "arrows": len(X.arrows),
                     "s": [oi[X.s[f]] for f in X.arrows], "t": [oi[X.t[f]] for f in X.arrows],
                     "comp": sorted([ai[f], ai[g], ai[h]] for (f, g), h in X.comp.items()),
                     "inv": [ai[X.inv[f]] for f in X.arrows],
                     "unit": [ai[X.unit[x]] for x in X.objects]},
        "action": {"G0": [[oi[a.g0[g, x]] for x in X.objects] for g in cm.G],
                   "G1": [[ai[a.g1[g, f]] for f in X.arrows] for g in cm.G],
                   "H1": [[ai[a.h1[h, f]] for f in X.arrows] for h in cm.H]},
    }
    if name:
        doc["name"] = name
    return doc
