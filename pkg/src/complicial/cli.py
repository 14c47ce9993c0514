"""Command line front end.

Every command builds a report (a plain dict), prints it in the requested
format and maps its status to the exit code: 0 pass / VALID, 1 fail / INVALID,
2 usage or input error, 3 budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from . import corpus, homotopy, lifting
from .core import SMap, Simplex
from .serialize import (SchemaError, dumps, dumps_report, loads_map, map_from_dict, resolve)
from .shapes import StratMap, StratSet, find_strat_iso

EXIT = {"pass": 0, "VALID": 0, "fail": 1, "INVALID": 1, "budget": 3}


class UsageError(ValueError):
    pass


# ------------------------------------------------------------ helpers

def _simplex(X: StratSet, s: Simplex) -> str:
    cx = X.cx
    if cx.labels is not None:
        vs = "".join(str(v) for v in cx.vertex_labels(s)) if all(
            isinstance(v, int) and 0 <= v < 10 for v in cx.vertex_labels(s)) else str(list(cx.vertex_labels(s)))
    else:
        vs = str(list(cx.vertices(s)))
    return vs if not cx.is_degenerate(s) else f"{vs}(deg)"


def _map_rows(f: SMap, dom: StratSet, cod: StratSet) -> List[str]:
    return [f"{_simplex(dom, dom.cx.cell(c))} -> {_simplex(cod, f.assign[c])}" for c in dom.cx.cells()]


def _square(sq: lifting.Square) -> Dict[str, Any]:
    return {"top": _map_rows(sq.top, sq.i.dom, sq.p.dom), "bottom": _map_rows(sq.bottom, sq.i.cod, sq.p.cod)}


def _rlp(r: lifting.RLPResult) -> Dict[str, Any]:
    out: Dict[str, Any] = {"status": r.status, "squares": r.squares}
    if r.counterexample is not None:
        out["counterexample"] = _square(r.counterexample)
    return out


_NAMED = re.compile(r"^([a-z_\-]+):(.*)$")


def resolve_map(arg: str) -> StratMap:
    """A map argument: a map file, ``terminal:EXPR`` or a named generating inclusion."""
    m = _NAMED.match(arg)
    if m is None:
        p = Path(arg)
        if not p.is_file():
            raise UsageError(f"{arg!r} is neither a map file nor a named map")
        return loads_map(p.read_text())
    kind, rest = m.group(1), m.group(2)
    if kind == "terminal":
        return lifting.to_terminal(resolve(rest))
    if kind == "identity":
        X = resolve(rest)
        from .core import identity_map
        return StratMap(X, X, identity_map(X.cx))
    try:
        nums = [int(x) for x in rest.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"bad parameters in {arg!r}") from None
    table = {"horn": (2, lambda n, k: lifting.horn_extension(n, k).map),
             "thinness": (2, lambda n, k: lifting.thinness_extension(n, k).map),
             "saturation": (2, lambda n, m: lifting.saturation_extension(n, m).map),
             "cart_thinness": (2, lambda n, k: lifting.cart_thinness_extension(n, k).map),
             "globe-boundary": (1, lambda n: homotopy.globe_inclusions(n)[0]),
             "globe-thin": (1, lambda n: homotopy.globe_inclusions(n)[1]),
             "point": (1, homotopy.cartesian_point)}
    if kind not in table:
        raise UsageError(f"unknown map kind {kind!r}; expected a file, terminal:, identity: or one of {sorted(table)}")
    arity, fn = table[kind]
    if len(nums) != arity:
        raise UsageError(f"{kind} takes {arity} parameter(s)")
    out = fn(*nums)
    if out is None:
        raise UsageError(f"{arg!r} is not defined")
    return out


def _budgets(a) -> Dict[str, Any]:
    return {"search_dim": a.search_dim, "map_budget": a.map_budget, "co_bound": a.co_bound}


def _cell_rows(C: StratSet, cs) -> List[str]:
    return [f"{j}: {c.describe(C)}{' thin' if c.is_thin(C) else ''}" for j, c in enumerate(cs)]


def _pick(cs, j: int, what: str):
    if not 0 <= j < len(cs):
        raise UsageError(f"{what} index {j} out of range (0..{len(cs) - 1})")
    return cs[j]


def _check_report(rep) -> Dict[str, Any]:
    out = {"status": rep.status, "dim": rep.dim, "kind": rep.kind,
           "families": [{"name": f.name, "n": f.n, **_rlp(f.result)} for f in rep.families]}
    if rep.notes:
        out["notes"] = rep.notes
    out["disclaimer"] = rep.disclaimer
    return out


# ------------------------------------------------------------ commands

def cmd_build(a) -> Dict[str, Any]:
    X = resolve(a.expr)
    text = dumps(X)
    if a.output:
        Path(a.output).write_text(text)
    else:
        sys.stdout.write(text)
    return {"status": "pass", "object": X.summary(), "written": a.output or "-"}


def cmd_info(a) -> Dict[str, Any]:
    from .saturation import is_saturated
    X = resolve(a.object)
    d = a.search_dim if a.search_dim is not None else X.cx.dim_bound + 1
    ok, _ = is_saturated(X, d)
    return {"status": "pass", **X.summary(), "bistratified": X.c is not None, "saturated": ok}


def cmd_eq(a) -> Dict[str, Any]:
    X, Y = resolve(a.left), resolve(a.right)
    if a.saturate:
        from .saturation import saturate
        X = saturate(X, a.search_dim if a.search_dim is not None else X.cx.dim_bound + 1)
        Y = saturate(Y, a.search_dim if a.search_dim is not None else Y.cx.dim_bound + 1)
    iso = find_strat_iso(X, Y)
    return {"status": "pass" if iso is not None else "fail", "left": X.summary(), "right": Y.summary(),
            "isomorphic": iso is not None}


def cmd_saturate(a) -> Dict[str, Any]:
    from .saturation import closure_report
    X = resolve(a.object)
    d = a.search_dim if a.search_dim is not None else X.cx.dim_bound + 1
    rep = closure_report(X, d)
    if a.output:
        Path(a.output).write_text(dumps(rep.result))
    return {"status": "pass", "before": X.summary(), "after": rep.result.summary(),
            "added": [f"{rule}{list(param)} marks {_simplex(X, X.cx.cell(c))} {kind}"
                      for (rule, _, param, kind, c) in rep.added]}


def cmd_check_infty(a) -> Dict[str, Any]:
    X = resolve(a.object)
    rep = lifting.check_infty(X, a.dim, a.map_budget, stop=not a.all)
    out: Dict[str, Any] = {"status": rep.status, "dim": a.dim,
                           "extensions": [{"name": e.name, "params": list(e.params), **_rlp(r)} for e, r in rep.results]}
    ff = rep.first_failure
    if ff is not None:
        out["counterexample"] = {"extension": f"{ff[0].name}{list(ff[0].params)}", **_square(ff[1].counterexample)}
    return out


def cmd_lift(a) -> Dict[str, Any]:
    doc = json.loads(Path(a.square).read_text())
    for key in ("i", "p", "top", "bottom"):
        if key not in doc:
            raise SchemaError("$", f"missing field {key!r}")
    i, p = map_from_dict(doc["i"]), map_from_dict(doc["p"])
    top = SMap(i.dom.cx, p.dom.cx, [(tuple(r["eta"]), r["cell"]) for r in doc["top"]])
    bottom = SMap(i.cod.cx, p.cod.cx, [(tuple(r["eta"]), r["cell"]) for r in doc["bottom"]])
    sq = lifting.Square(i, p, top, bottom)
    try:
        sq.check()
    except ValueError as e:
        raise UsageError(str(e)) from None
    f = lifting.find_lift(sq, check=False)
    out: Dict[str, Any] = {"status": "pass" if f is not None else "fail"}
    if f is not None:
        out["lift"] = _map_rows(f, i.cod, p.dom)
    return out


def cmd_rlp(a) -> Dict[str, Any]:
    p, i = resolve_map(a.p), resolve_map(a.i)
    return _rlp(lifting.has_rlp(p, i, a.map_budget))


def cmd_verify_cert(a) -> Dict[str, Any]:
    if a.all:
        names = corpus.bundled_names()
        certs = [(n, corpus.bundled(n)) for n in names]
    else:
        if a.cert is None:
            raise UsageError("give a certificate file, a bundled name or --all")
        p = Path(a.cert)
        if p.is_file():
            certs = [(p.name, lifting.load_certificate(p))]
        elif a.cert in corpus.bundled_names():
            certs = [(a.cert, corpus.bundled(a.cert))]
        else:
            raise UsageError(f"no certificate {a.cert!r}; bundled: {', '.join(corpus.bundled_names())}")
    rows = []
    ok = True
    for name, cert in certs:
        if a.search_dim is not None:
            cert = dict(cert, search_dim=a.search_dim)
        v = lifting.verify_certificate(cert)
        ok = ok and v.valid
        rows.append({"name": name, "verdict": str(v), "stages": [list(s) for s in v.stages],
                     "implicit_closures": v.implicit_closures})
    return {"status": "VALID" if ok else "INVALID", "certificates": rows}


def cmd_dual(a) -> Dict[str, Any]:
    from . import duality
    X = resolve(a.object)
    if a.kind == "op":
        Y = duality.op_dual(X)
    elif a.kind == "co":
        Y = duality.co_dual(X, a.co_bound, search_dim=a.search_dim)
    else:
        Y = duality.full_dual(X, a.co_bound)
    if a.output:
        Path(a.output).write_text(dumps(Y))
    return {"status": "pass", "kind": a.kind, "object": Y.summary()}


def cmd_cells(a) -> Dict[str, Any]:
    C = resolve(a.object)
    cs = homotopy.cells(C, a.n)
    return {"status": "pass", "n": a.n, "count": len(cs), "cells": _cell_rows(C, cs)}


def cmd_compose(a) -> Dict[str, Any]:
    C = resolve(a.object)
    cs = homotopy.cells(C, a.n)
    x, y = _pick(cs, a.a, "a"), _pick(cs, a.b, "b")
    if not homotopy.is_composable(x, y):
        raise UsageError("cells are not composable (source of a must be the target of b)")
    r = homotopy.compose(C, x, y)
    out: Dict[str, Any] = {"status": "pass" if r is not None else "fail", "disclaimer": homotopy.DISCLAIMER}
    if r is not None:
        out["composite"] = r.cell.describe(C)
    return out


def cmd_equiv(a) -> Dict[str, Any]:
    C = resolve(a.object)
    cs = homotopy.cells(C, a.n)
    x, y = _pick(cs, a.a, "a"), _pick(cs, a.b, "b")
    if a.n > 0 and not homotopy.is_parallel(x, y):
        raise UsageError("cells are not parallel")
    w = homotopy.are_equivalent(C, x, y)
    out: Dict[str, Any] = {"status": "pass" if w is not None else "fail", "disclaimer": homotopy.DISCLAIMER}
    if w is not None:
        out["witness"] = w.describe(C)
    return out


def cmd_pi(a) -> Dict[str, Any]:
    C = resolve(a.object)
    s = t = None
    if a.n > 0:
        if a.s is None or a.t is None:
            raise UsageError("pi with n > 0 needs --s and --t")
        lower = homotopy.cells(C, a.n - 1)
        s, t = _pick(lower, a.s, "s"), _pick(lower, a.t, "t")
    H = homotopy.pi_n(C, a.n, s, t, a.infty_dim)
    out = {"status": "pass", **H.summary(), "objects_list": _cell_rows(C, H.objects)}
    out["undefined"] = [list(k) for k in H.undefined()]
    return out


def cmd_check_fib(a) -> Dict[str, Any]:
    p = resolve_map(a.map)
    if a.level == "one":
        side = "right" if a.cls in ("right", "coright") else "left"
        rep = homotopy.check_naive_1_fibration(p, a.dim, side, a.map_budget, stop=not a.all)
    else:
        rep = homotopy.check_naive_fibration(p, a.dim, a.cls, a.cell_dim, a.map_budget)
    return _check_report(rep)


def cmd_check_g_fib(a) -> Dict[str, Any]:
    p = resolve_map(a.map)
    return _check_report(homotopy.check_g_trivial_fibration(p, a.dim, a.map_budget, stop=not a.all))


def cmd_check_ff_es(a) -> Dict[str, Any]:
    p = resolve_map(a.map)
    return _check_report(homotopy.check_ff_es(p, a.dim, a.map_budget))


# ------------------------------------------------------------ parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--search-dim", type=int, default=None, help="saturation search dimension")
    common.add_argument("--map-budget", type=int, default=100000, help="squares examined per lifting check")
    common.add_argument("--co-bound", type=int, default=None, help="bound for the co duality")
    common.add_argument("--format", choices=("human", "machine"), default="human")

    ap = argparse.ArgumentParser(prog="complicial", description=__doc__.splitlines()[0], parents=[common])
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        p = sub.add_parser(name, help=help_, parents=[common])
        p.set_defaults(fn=fn)
        return p

    p = add("build", cmd_build, "evaluate an expression and write the object")
    p.add_argument("expr")
    p.add_argument("-o", "--output")
    p = add("info", cmd_info, "cell and mark counts")
    p.add_argument("object")
    p = add("eq", cmd_eq, "isomorphism of stratified sets")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--saturate", action="store_true")
    p = add("saturate", cmd_saturate, "marking closure")
    p.add_argument("object")
    p.add_argument("-o", "--output")
    p = add("check-infty", cmd_check_infty, "bounded complicial check")
    p.add_argument("object")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--all", action="store_true", help="do not stop at the first failure")
    p = add("lift", cmd_lift, "solve one lifting problem given as a square file")
    p.add_argument("square")
    p = add("rlp", cmd_rlp, "right lifting property of p against i")
    p.add_argument("--p", required=True)
    p.add_argument("--i", required=True)
    p = add("verify-cert", cmd_verify_cert, "replay a certificate")
    p.add_argument("cert", nargs="?")
    p.add_argument("--all", action="store_true", help="verify the bundled corpus")
    p = add("dual", cmd_dual, "op, co or full dual")
    p.add_argument("object")
    p.add_argument("--kind", choices=("op", "co", "full"), required=True)
    p.add_argument("-o", "--output")
    p = add("cells", cmd_cells, "list n-cells")
    p.add_argument("object")
    p.add_argument("--n", type=int, required=True)
    for name, fn, help_ in (("compose", cmd_compose, "compose two n-cells (indices from `cells`)"),
                            ("equiv", cmd_equiv, "thin witness between parallel n-cells")):
        p = add(name, fn, help_)
        p.add_argument("object")
        p.add_argument("--n", type=int, required=True)
        p.add_argument("a", type=int)
        p.add_argument("b", type=int)
    p = add("pi", cmd_pi, "bounded homotopy category")
    p.add_argument("object")
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--s", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--infty-dim", type=int, help="also run check-infty at this dimension")
    p = add("check-fib", cmd_check_fib, "naive cartesian fibration conditions")
    p.add_argument("map")
    p.add_argument("--class", dest="cls", choices=homotopy.FIB_CLASSES, default="right")
    p.add_argument("--dim", type=int, default=1)
    p.add_argument("--level", choices=("one", "hom"), default="one",
                   help="one: the 1-fibration conditions; hom: the hom-wise parity scheme")
    p.add_argument("--cell-dim", type=int, default=0)
    p.add_argument("--all", action="store_true")
    p = add("check-g-fib", cmd_check_g_fib, "G-trivial fibration conditions")
    p.add_argument("map")
    p.add_argument("--dim", type=int, default=1)
    p.add_argument("--all", action="store_true")
    p = add("check-ff-es", cmd_check_ff_es, "fully faithful and essentially surjective")
    p.add_argument("map")
    p.add_argument("--dim", type=int, default=1)
    return ap


def _human(rep: Dict[str, Any], indent: str = "") -> List[str]:
    lines = []
    for k, v in rep.items():
        if isinstance(v, dict):
            lines.append(f"{indent}{k}:")
            lines.extend(_human(v, indent + "  "))
        elif isinstance(v, list) and v and isinstance(v[0], dict):
            lines.append(f"{indent}{k}:")
            for row in v:
                sub = _human(row, indent + "    ")
                sub[0] = indent + "  - " + sub[0].lstrip()
                lines.extend(sub)
        elif isinstance(v, list) and v and all(isinstance(x, str) for x in v):
            lines.append(f"{indent}{k}:")
            lines.extend(f"{indent}  {x}" for x in v)
        else:
            lines.append(f"{indent}{k}: {v}")
    return lines


def main(argv: Optional[Sequence[str]] = None) -> int:
    ap = build_parser()
    a = ap.parse_args(argv)
    try:
        rep = a.fn(a)
    except (SchemaError, UsageError, ValueError, KeyError, FileNotFoundError, json.JSONDecodeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    report = {"command": a.command, **rep, "budgets": _budgets(a)}
    if a.format == "machine":
        sys.stdout.write(dumps_report(report))
    else:
        sys.stdout.write("\n".join(_human(report)) + "\n")
    return EXIT.get(rep["status"], 1)


if __name__ == "__main__":
    sys.exit(main())
