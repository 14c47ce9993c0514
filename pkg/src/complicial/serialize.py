"""Text formats for objects, maps and reports, and the expression language.

Objects are JSON documents

    {"dim_bound": 2,
     "cells": [{"id": 0, "dim": 0, "faces": []}, ...],
     "t": [ids], "c": [ids]?, "labels": [...]?}

with one cell per line so that golden files diff cleanly.  Expressions are
parsed with :mod:`ast` and evaluated against a fixed table of constructors.
"""

from __future__ import annotations

import ast
import json
from pathlib import Path
from typing import Any, Callable, Dict, List, Tuple

from .core import Complex, SMap
from .shapes import StratMap, StratSet


class SchemaError(ValueError):
    """A malformed document; ``where`` names the offending field or source position."""

    def __init__(self, where: str, msg: str):
        super().__init__(f"{where}: {msg}")
        self.where = where
        self.msg = msg


# ------------------------------------------------------------ labels

def _label_out(x):
    if isinstance(x, tuple):
        return [_label_out(y) for y in x]
    return x


def _label_in(x):
    if isinstance(x, list):
        return tuple(_label_in(y) for y in x)
    return x


# ------------------------------------------------------------ objects

def to_dict(X: StratSet) -> Dict[str, Any]:
    cx = X.cx
    cells = []
    for c in cx.cells():
        cells.append({"id": c, "dim": cx.dims[c],
                      "faces": [{"eta": list(eta), "cell": b} for (eta, b) in cx.faces[c]]})
    out: Dict[str, Any] = {"dim_bound": cx.dim_bound, "cells": cells, "t": sorted(X.t)}
    if X.c is not None:
        out["c"] = sorted(X.c)
    if cx.labels is not None:
        out["labels"] = [_label_out(v) for v in cx.labels]
    return out


def _int(v, where: str) -> int:
    if not isinstance(v, int) or isinstance(v, bool):
        raise SchemaError(where, f"expected an integer, got {v!r}")
    return v


def _list(v, where: str) -> list:
    if not isinstance(v, list):
        raise SchemaError(where, f"expected a list, got {type(v).__name__}")
    return v


def from_dict(doc: Any) -> StratSet:
    if not isinstance(doc, dict):
        raise SchemaError("$", "expected an object")
    for key in ("dim_bound", "cells", "t"):
        if key not in doc:
            raise SchemaError("$", f"missing field {key!r}")
    unknown = set(doc) - {"dim_bound", "cells", "t", "c", "labels"}
    if unknown:
        raise SchemaError("$", f"unknown fields {sorted(unknown)}")
    bound = _int(doc["dim_bound"], "dim_bound")
    dims: List[int] = []
    faces: List[Tuple] = []
    for j, cell in enumerate(_list(doc["cells"], "cells")):
        where = f"cells[{j}]"
        if not isinstance(cell, dict) or set(cell) != {"id", "dim", "faces"}:
            raise SchemaError(where, "expected fields id, dim, faces")
        if _int(cell["id"], where + ".id") != j:
            raise SchemaError(where + ".id", f"ids must be consecutive; expected {j}")
        d = _int(cell["dim"], where + ".dim")
        if d < 0 or (dims and d < dims[-1]):
            raise SchemaError(where + ".dim", "dimensions must be >= 0 and nondecreasing")
        fs = _list(cell["faces"], where + ".faces")
        if len(fs) != (d + 1 if d > 0 else 0):
            raise SchemaError(where + ".faces", f"a {d}-cell has {d + 1 if d else 0} faces, got {len(fs)}")
        row = []
        for i, f in enumerate(fs):
            fw = f"{where}.faces[{i}]"
            if not isinstance(f, dict) or set(f) != {"eta", "cell"}:
                raise SchemaError(fw, "expected fields eta, cell")
            eta = tuple(_int(x, fw + ".eta") for x in _list(f["eta"], fw + ".eta"))
            b = _int(f["cell"], fw + ".cell")
            if not 0 <= b < j:
                raise SchemaError(fw + ".cell", "faces must point to earlier cells")
            if len(eta) != d or eta[0] != 0 or any(eta[k + 1] - eta[k] not in (0, 1) for k in range(len(eta) - 1)):
                raise SchemaError(fw + ".eta", f"expected a surjection [{d - 1}] -> [{dims[b]}]")
            if eta[-1] != dims[b]:
                raise SchemaError(fw + ".eta", f"codomain [{eta[-1]}] does not match the dimension {dims[b]} of cell {b}")
            row.append((eta, b))
        dims.append(d)
        faces.append(tuple(row))
    if bound != (dims[-1] if dims else -1):
        raise SchemaError("dim_bound", f"is {bound} but the top cell has dimension {dims[-1] if dims else -1}")
    labels = None
    if "labels" in doc:
        labels = [_label_in(v) for v in _list(doc["labels"], "labels")]
        if len(labels) != sum(1 for d in dims if d == 0):
            raise SchemaError("labels", "one label per vertex expected")
        if len(set(labels)) != len(labels):
            raise SchemaError("labels", "labels must be distinct")
    cx = Complex(dims, faces, labels=labels)
    errs = cx.check()
    if errs:
        raise SchemaError("cells", errs[0])

    def marks(key: str):
        out = []
        for i, x in enumerate(_list(doc[key], key)):
            x = _int(x, f"{key}[{i}]")
            if not 0 <= x < len(dims):
                raise SchemaError(f"{key}[{i}]", f"cell {x} does not exist")
            if dims[x] == 0:
                raise SchemaError(f"{key}[{i}]", f"cell {x} is a vertex and cannot be marked")
            out.append(x)
        return frozenset(out)

    t = marks("t")
    if "c" in doc and doc["c"] is not None:
        c = marks("c")
        if not t <= c:
            raise SchemaError("c", "thin cells must also be cartesian")
        return StratSet(cx, t, c)
    return StratSet(cx, t)


def _dump(obj: Any, indent: str = "") -> str:
    """JSON with flat lists and small dicts on one line, stable key order."""
    flat = json.dumps(obj, separators=(", ", ": "))
    if len(flat) <= 100 or not isinstance(obj, (dict, list)):
        return flat
    inner = indent + "  "
    if isinstance(obj, list):
        return "[\n" + ",\n".join(inner + _dump(v, inner) for v in obj) + "\n" + indent + "]"
    return "{\n" + ",\n".join(f"{inner}{json.dumps(k)}: {_dump(v, inner)}" for k, v in obj.items()) + "\n" + indent + "}"


def dumps(X: StratSet) -> str:
    doc = to_dict(X)
    inner = "  "
    parts = [f'{inner}"dim_bound": {doc["dim_bound"]}',
             f'{inner}"cells": [' + ("\n" if doc["cells"] else "")
             + ",\n".join(inner * 2 + json.dumps(c, separators=(", ", ": ")) for c in doc["cells"])
             + ("\n" + inner if doc["cells"] else "") + "]",
             f'{inner}"t": {json.dumps(doc["t"])}']
    if "c" in doc:
        parts.append(f'{inner}"c": {json.dumps(doc["c"])}')
    if "labels" in doc:
        parts.append(f'{inner}"labels": {json.dumps(doc["labels"])}')
    return "{\n" + ",\n".join(parts) + "\n}\n"


def _parse_json(text: str, what: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise SchemaError(f"{what} line {e.lineno} column {e.colno}", e.msg) from None


def loads(text: str) -> StratSet:
    return from_dict(_parse_json(text, "object"))


def load(path) -> StratSet:
    return loads(Path(path).read_text())


def save(X: StratSet, path) -> None:
    Path(path).write_text(dumps(X))


# ------------------------------------------------------------ maps

def map_to_dict(f: StratMap) -> Dict[str, Any]:
    return {"dom": to_dict(f.dom), "cod": to_dict(f.cod),
            "assign": [{"eta": list(eta), "cell": c} for (eta, c) in f.map.assign]}


def map_from_dict(doc: Any) -> StratMap:
    if not isinstance(doc, dict) or set(doc) != {"dom", "cod", "assign"}:
        raise SchemaError("$", "a map has fields dom, cod, assign")
    try:
        dom = from_dict(doc["dom"])
    except SchemaError as e:
        raise SchemaError("dom." + e.where, e.msg) from None
    try:
        cod = from_dict(doc["cod"])
    except SchemaError as e:
        raise SchemaError("cod." + e.where, e.msg) from None
    rows = _list(doc["assign"], "assign")
    if len(rows) != len(dom.cx):
        raise SchemaError("assign", f"expected {len(dom.cx)} entries, got {len(rows)}")
    assign = []
    for j, r in enumerate(rows):
        w = f"assign[{j}]"
        if not isinstance(r, dict) or set(r) != {"eta", "cell"}:
            raise SchemaError(w, "expected fields eta, cell")
        eta = tuple(_int(x, w + ".eta") for x in _list(r["eta"], w + ".eta"))
        c = _int(r["cell"], w + ".cell")
        if not 0 <= c < len(cod.cx):
            raise SchemaError(w + ".cell", f"cell {c} does not exist in the codomain")
        if len(eta) != dom.cx.dims[j] + 1 or eta[-1] != cod.cx.dims[c]:
            raise SchemaError(w + ".eta", "operator does not match the dimensions")
        assign.append((eta, c))
    m = SMap(dom.cx, cod.cx, assign)
    errs = m.check()
    if errs:
        raise SchemaError("assign", errs[0])
    from .shapes import marking_violation
    bad = marking_violation(m, dom, cod)
    if bad is not None:
        raise SchemaError(f"assign[{bad[0]}]", f"{bad[2]} cell is sent to an unmarked simplex")
    return StratMap(dom, cod, m)


def dumps_map(f: StratMap) -> str:
    return _dump(map_to_dict(f)) + "\n"


def loads_map(text: str) -> StratMap:
    return map_from_dict(_parse_json(text, "map"))


def dumps_report(report: Dict[str, Any]) -> str:
    return _dump(report) + "\n"


# ------------------------------------------------------------ expressions

class ExprError(SchemaError):
    pass


def _constructors() -> Dict[str, Tuple[Tuple[str, ...], Callable]]:
    from . import constructions as K
    from . import duality as D
    from . import homotopy as H
    from . import shapes as S
    from .saturation import saturate

    def horn_obj(n, k):
        return S.horn(n, k)[0]

    def trunc(X, n):
        return S.truncate(X, n)

    def sat(X, d=None):
        return saturate(X, d)

    # argument kinds: "o" object, "i" integer, "s" string
    return {
        "delta": (("i",), S.delta),
        "delta_t": (("i",), S.delta_t),
        "delta_c": (("i",), S.delta_c),
        "delta_k": (("i", "i"), S.delta_k),
        "delta_k_prime": (("i", "i"), S.delta_k_prime),
        "delta_k_dprime": (("i", "i"), S.delta_k_dprime),
        "cart_horn_0": (("i",), S.cart_horn_0),
        "cart_horn_n": (("i",), S.cart_horn_n),
        "cart_thin": (("i", "i"), S.cart_thin),
        "cart_thin2": (("i", "i"), S.cart_thin2),
        "horn": (("i", "i"), horn_obj),
        "boundary": (("i",), S.boundary_set),
        "sharp": (("i",), S.sharp),
        "eq3": ((), S.eq3),
        "globe": (("i",), H.globe),
        "globe_t": (("i",), H.globe_t),
        "globe_boundary": (("i",), H.globe_boundary),
        "join": (("o", "o"), K.join),
        "gray": (("o", "o"), K.gray),
        "product": (("o", "o"), K.product),
        "diamond": (("o", "o"), K.diamond),
        "cojoin": (("o", "o"), K.cojoin),
        "susp": (("o",), K.suspension),
        "csusp": (("o",), K.circ_suspension),
        "wedge_r": (("o",), K.wedge_right),
        "wedge_l": (("o",), K.wedge_left),
        "trunc": (("o", "i"), trunc),
        "op": (("o",), D.op_dual),
        "co": (("o",), D.co_dual),
        "full": (("o",), D.full_dual),
        "sat": (("o", "i?"), sat),
        "file": (("s",), load),
    }


def _where(node: ast.AST) -> str:
    return f"column {getattr(node, 'col_offset', 0) + 1}"


def _eval(node: ast.AST, table) -> Any:
    if isinstance(node, ast.Name):
        node = ast.Call(func=node, args=[], keywords=[], col_offset=node.col_offset)
    if isinstance(node, ast.Constant) and isinstance(node.value, (int, str)) and not isinstance(node.value, bool):
        return node.value
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub) and isinstance(node.operand, ast.Constant):
        return -node.operand.value
    if not isinstance(node, ast.Call) or not isinstance(node.func, ast.Name):
        raise ExprError(_where(node), "expected a constructor call such as delta(2)")
    name = node.func.id
    if name not in table:
        raise ExprError(_where(node), f"unknown constructor {name!r}")
    if node.keywords:
        raise ExprError(_where(node), "keyword arguments are not supported")
    kinds, fn = table[name]
    required = [k for k in kinds if not k.endswith("?")]
    if not len(required) <= len(node.args) <= len(kinds):
        raise ExprError(_where(node), f"{name} takes {len(kinds)} argument(s), got {len(node.args)}")
    args = []
    for kind, a in zip(kinds, node.args):
        v = _eval(a, table)
        want = kind.rstrip("?")
        if want == "o" and not isinstance(v, StratSet):
            raise ExprError(_where(a), f"argument of {name} must be an object")
        if want == "i" and not isinstance(v, int):
            raise ExprError(_where(a), f"argument of {name} must be an integer")
        if want == "s" and not isinstance(v, str):
            raise ExprError(_where(a), f"argument of {name} must be a string")
        args.append(v)
    try:
        return fn(*args)
    except (ValueError, KeyError) as e:
        if isinstance(e, SchemaError):
            raise
        raise ExprError(_where(node), f"{name}: {e}") from None


_EXPR_CACHE: Dict[str, StratSet] = {}


def evaluate(text: str) -> StratSet:
    """Evaluate an expression such as ``cojoin(delta(0), delta(0))``."""
    try:
        tree = ast.parse(text.strip(), mode="eval")
    except SyntaxError as e:
        raise ExprError(f"column {e.offset or 1}", e.msg or "syntax error") from None
    key = ast.dump(tree)
    hit = _EXPR_CACHE.get(key)
    if hit is not None:
        return hit
    out = _eval(tree.body, _constructors())
    if not isinstance(out, StratSet):
        raise ExprError("column 1", "expression does not denote an object")
    if "file" not in {n.func.id for n in ast.walk(tree) if isinstance(n, ast.Call) and isinstance(n.func, ast.Name)}:
        _EXPR_CACHE[key] = out
    return out


def resolve(arg: str) -> StratSet:
    """An object argument: the path of an object file or an expression."""
    p = Path(arg)
    if p.suffix == ".json" or (p.exists() and p.is_file()):
        return load(p)
    return evaluate(arg)
