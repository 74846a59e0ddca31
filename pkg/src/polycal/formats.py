"""JSON instance documents.

Every rational travels as a string ``"p/q"`` or ``"p"``.  Four document
types exist: ``hpoly``, ``maxaffine``, ``svmap`` and ``check``.  Canonical
serialisation sorts keys, normalises rationals and uses compact separators,
so equal objects always produce equal bytes.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .errors import FormatError
from .polyhedra import HPoly
from .rational import parse_rat, rat_str

_FIELDS = {
    "hpoly": {"type", "dim", "ineq", "eq"},
    "maxaffine": {"type", "n", "pieces", "dom"},
    "svmap": {"type", "n", "m", "graph"},
    "check": {"type", "theorem", "instances", "points", "params"},
}


@dataclass(frozen=True)
class CheckDoc:
    """A request to run one theorem check on explicit data."""

    theorem: str
    instances: tuple
    points: tuple = ()
    params: dict = field(default_factory=dict)


# -- to documents -----------------------------------------------------------

def rats(v) -> list:
    return [rat_str(x) for x in v]


def hpoly_doc(P: HPoly) -> dict:
    return {"type": "hpoly", "dim": P.dim,
            "ineq": [{"a": rats(a), "b": rat_str(b)} for a, b in P.ineqs],
            "eq": [{"c": rats(c), "d": rat_str(d)} for c, d in P.eqs]}


def maxaffine_doc(f) -> dict:
    return {"type": "maxaffine", "n": f.n,
            "pieces": [{"a": rats(a), "b": rat_str(b)} for a, b in f.pieces],
            "dom": hpoly_doc(f.dom)}


def svmap_doc(F) -> dict:
    return {"type": "svmap", "n": F.n, "m": F.m, "graph": hpoly_doc(F.graph)}


def param_doc(x):
    if isinstance(x, Fraction):
        return rat_str(x)
    if isinstance(x, (list, tuple)):
        return [param_doc(v) for v in x]
    if isinstance(x, dict):
        return {str(k): param_doc(v) for k, v in x.items()}
    return x


def check_doc(c: CheckDoc) -> dict:
    return {"type": "check", "theorem": c.theorem,
            "instances": [to_doc(i) for i in c.instances],
            "points": [rats(p) for p in c.points],
            "params": param_doc(c.params)}


def to_doc(obj) -> dict:
    from .functions import MaxAffineFn
    from .maps import SVMap
    if isinstance(obj, HPoly):
        return hpoly_doc(obj)
    if isinstance(obj, MaxAffineFn):
        return maxaffine_doc(obj)
    if isinstance(obj, SVMap):
        return svmap_doc(obj)
    if isinstance(obj, CheckDoc):
        return check_doc(obj)
    raise TypeError(f"no document form for {type(obj).__name__}")


def dumps(doc) -> str:
    """Canonical text for a JSON-compatible value."""
    return json.dumps(doc, sort_keys=True, separators=(",", ":"), ensure_ascii=True)


def serialize(obj) -> bytes:
    doc = obj if isinstance(obj, dict) else to_doc(obj)
    return (dumps(doc) + "\n").encode("utf-8")


# -- from documents ---------------------------------------------------------

def _fail(msg, path):
    raise FormatError(msg, field=path)


def _rat(x, path) -> Fraction:
    if not isinstance(x, str):
        _fail("rationals must be JSON strings", path)
    try:
        return parse_rat(x)
    except ValueError as exc:
        _fail(str(exc), path)


def _rat_list(xs, length, path) -> tuple:
    if not isinstance(xs, list):
        _fail("expected a list of rational strings", path)
    if length is not None and len(xs) != length:
        _fail(f"expected {length} entries, got {len(xs)}", path)
    return tuple(_rat(x, f"{path}[{i}]") for i, x in enumerate(xs))


def _nat(x, path) -> int:
    if isinstance(x, bool) or not isinstance(x, int) or x < 0:
        _fail("expected a nonnegative integer", path)
    return x


def _obj(d, kind, path, optional_type=False):
    if not isinstance(d, dict):
        _fail("expected a JSON object", path)
    allowed = _FIELDS[kind]
    for k in d:
        if k not in allowed:
            _fail(f"unknown field {k!r}", f"{path}.{k}" if path else k)
    t = d.get("type")
    if t is None and not optional_type:
        _fail("missing field", f"{path}.type" if path else "type")
    if t is not None and t != kind:
        _fail(f"expected type {kind!r}, got {t!r}", f"{path}.type" if path else "type")


def _rows(d, key, vec_key, rhs_key, dim, path):
    rows = d.get(key, [])
    p = f"{path}.{key}" if path else key
    if not isinstance(rows, list):
        _fail("expected a list of rows", p)
    out = []
    for i, r in enumerate(rows):
        rp = f"{p}[{i}]"
        if not isinstance(r, dict):
            _fail("expected a row object", rp)
        for k in r:
            if k not in (vec_key, rhs_key):
                _fail(f"unknown field {k!r}", f"{rp}.{k}")
        if vec_key not in r or rhs_key not in r:
            _fail(f"row needs {vec_key!r} and {rhs_key!r}", rp)
        out.append((_rat_list(r[vec_key], dim, f"{rp}.{vec_key}"), _rat(r[rhs_key], f"{rp}.{rhs_key}")))
    return tuple(out)


def hpoly_from(d, path="", optional_type=False) -> HPoly:
    _obj(d, "hpoly", path, optional_type)
    if "dim" not in d:
        _fail("missing field", f"{path}.dim" if path else "dim")
    dim = _nat(d["dim"], f"{path}.dim" if path else "dim")
    return HPoly(dim, _rows(d, "ineq", "a", "b", dim, path), _rows(d, "eq", "c", "d", dim, path))


def maxaffine_from(d, path="", optional_type=False):
    from .errors import EmptySet
    from .functions import MaxAffineFn
    _obj(d, "maxaffine", path, optional_type)
    sub = (lambda k: f"{path}.{k}") if path else (lambda k: k)
    if "n" not in d:
        _fail("missing field", sub("n"))
    n = _nat(d["n"], sub("n"))
    pieces = _rows(d, "pieces", "a", "b", n, path)
    if not pieces:
        _fail("at least one piece is required", sub("pieces"))
    dom = None
    if "dom" in d:
        dom = hpoly_from(d["dom"], sub("dom"), optional_type=True)
        if dom.dim != n:
            _fail(f"domain dimension {dom.dim} differs from n = {n}", sub("dom.dim"))
    try:
        return MaxAffineFn(n, pieces, dom)
    except EmptySet:
        _fail("domain is empty; functions must be proper", sub("dom"))


def svmap_from(d, path="", optional_type=False):
    from .maps import SVMap
    _obj(d, "svmap", path, optional_type)
    sub = (lambda k: f"{path}.{k}") if path else (lambda k: k)
    for k in ("n", "m", "graph"):
        if k not in d:
            _fail("missing field", sub(k))
    n, m = _nat(d["n"], sub("n")), _nat(d["m"], sub("m"))
    graph = hpoly_from(d["graph"], sub("graph"), optional_type=True)
    if graph.dim != n + m:
        _fail(f"graph dimension {graph.dim} differs from n + m = {n + m}", sub("graph.dim"))
    return SVMap(n, m, graph)


def _param_from(x, path):
    if isinstance(x, str):
        return _rat(x, path)
    if isinstance(x, bool) or x is None:
        return x
    if isinstance(x, int):
        return x
    if isinstance(x, list):
        return [_param_from(v, f"{path}[{i}]") for i, v in enumerate(x)]
    if isinstance(x, dict):
        return {k: _param_from(v, f"{path}.{k}") for k, v in x.items()}
    _fail("parameters hold rational strings, integers, booleans, lists or objects", path)


def check_from(d, path=""):
    _obj(d, "check", path)
    if not isinstance(d.get("theorem"), str):
        _fail("expected a theorem id string", "theorem")
    insts = d.get("instances", [])
    if not isinstance(insts, list):
        _fail("expected a list of instance documents", "instances")
    instances = tuple(from_doc(x, f"instances[{i}]") for i, x in enumerate(insts))
    pts = d.get("points", [])
    if not isinstance(pts, list):
        _fail("expected a list of points", "points")
    points = tuple(_rat_list(p, None, f"points[{i}]") for i, p in enumerate(pts))
    params = d.get("params", {})
    if not isinstance(params, dict):
        _fail("expected an object", "params")
    return CheckDoc(d["theorem"], instances, points, _param_from(params, "params"))


_READERS = {"hpoly": hpoly_from, "maxaffine": maxaffine_from, "svmap": svmap_from, "check": check_from}


def from_doc(d, path=""):
    if not isinstance(d, dict):
        _fail("expected a JSON object", path or "<document>")
    t = d.get("type")
    if t not in _READERS:
        _fail(f"unknown document type {t!r}", f"{path}.type" if path else "type")
    return _READERS[t](d, path)


def parse(data) -> Any:
    """Parse UTF-8 JSON bytes (or text) into an HPoly, MaxAffineFn, SVMap or CheckDoc."""
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise FormatError(f"input is not UTF-8 ({exc.reason})") from None
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as exc:
        raise FormatError(exc.msg, line=exc.lineno, column=exc.colno) from None
    return from_doc(doc)


def canonical(data) -> bytes:
    """``serialize(parse(data))``."""
    return serialize(parse(data))
