"""Named objects and bundled certificates.

The square C = Delta[3] x Delta[1] with its two ends collapsed, the subcomplexes
A0..A4, B0, B1 inside it, the object R assembled from a triangle and a
collapsed tetrahedron, and the wedge-product certificates built step by step.
Vertex labels are strings: "ij" is the vertex (i, j) of a product.
"""

from __future__ import annotations

import json
import re
from functools import lru_cache
from importlib import resources
from typing import Dict, List, Sequence, Tuple

from .core import Product, standard_simplex
from .lifting import Ambient, as_strat, build_ambient, sub_object
from .shapes import StratSet, _anti_pattern, _pattern, wbar_p

# ------------------------------------------------------------ the square C

C_AMBIENT = {
    "product": [3, 1],
    "collapse": [
        {"simplex": ["00", "10", "20", "30"], "images": [0, 0, 0, 1]},
        {"simplex": ["01", "11", "21", "31"], "images": [0, 1, 1, 1]},
    ],
}

A_SPANS = {
    "A0": ([["00", "01", "11"], ["00", "10", "11"]], [["00", "01", "11"], ["00", "10", "11"]]),
    "A1": ([["10", "11", "21"], ["10", "20", "21"]], [["10", "11", "21"]]),
    "A2": ([["20", "30", "31"], ["20", "21", "31"]], [["20", "30", "31"], ["20", "21", "31"]]),
    "A3": ([["00", "01", "21"], ["00", "20", "21"]], [["00", "01", "21"]]),
    "A4": ([["00", "01", "31"], ["00", "30", "31"]], [["00", "01", "31"]]),
}

B_SPANS = {
    "B0": ([["00", "01", "11", "21"], ["00", "10", "11", "21"], ["00", "10", "20", "21"]],
           [["10", "20", "21"], ["00", "20", "21"]]),
    "B1": ([["00", "01", "21", "31"], ["00", "20", "21", "31"], ["00", "20", "30", "31"]],
           [["00", "20", "21"], ["00", "30", "31"], ["00", "20", "31"]]),
}


@lru_cache(maxsize=None)
def c_ambient() -> Ambient:
    return build_ambient(C_AMBIENT)


def _spec_A(names: Sequence[str]) -> Dict:
    span, thin = [], []
    for n in names:
        s, t = A_SPANS[n]
        span += s
        thin += t
    return {"span": span, "thin": thin}


def _spec_B(name: str) -> Dict:
    """B_i is marked in every dimension >= 2 except the listed triangles."""
    amb = c_ambient()
    span, unmarked = B_SPANS[name]
    cells = sub_object(amb, {"span": span}).cells
    skip = {amb.simplex(lab)[1] for lab in unmarked}
    thin = [list(amb.labels_of(c)) for c in sorted(cells) if amb.C.dims[c] >= 2 and c not in skip]
    return {"span": span, "thin": thin}


def c_object(*names: str) -> StratSet:
    """A union of the named pieces of C, as a stratified set."""
    amb = c_ambient()
    if len(names) == 1 and names[0] in B_SPANS:
        spec = _spec_B(names[0])
    else:
        spec = _spec_A(names)
    return as_strat(amb, sub_object(amb, spec))[0]


def collapsed_tensor(X: StratSet, *names: str) -> StratSet:
    """X (x) A with X (x) [00,01] and X (x) [30,31] squashed onto those edges.

    A is the union of the named pieces of C; where A meets an end edge only in
    a vertex, the corresponding copy of X collapses to a point.
    """
    from .constructions import gray_with
    from .core import Product, identity_map, product_map, sub_complex
    amb = c_ambient()
    S = sub_object(amb, _spec_A(names))
    A, inc = as_strat(amb, S)
    T, P = gray_with(X, A)
    here = {inc.assign[a][1]: a for a in A.cx.cells()}
    objects, arrows = [T], []
    for edge in (("00", "01"), ("30", "31")):
        e = amb.simplex(edge)[1]
        cells = [here[x] for x in _closure_of(amb.C, e) if x in here]
        E, j = sub_complex(A.cx, cells)
        Q = Product(X.cx, E)
        XE = StratSet(Q.complex)
        k = len(objects)
        objects += [XE, StratSet(E)]
        arrows += [(k, 0, product_map(Q, P, identity_map(X.cx), j)), (k, k + 1, Q.proj2)]
    from .shapes import colimit_strat
    return colimit_strat(objects, arrows)[0]


def _closure_of(C, c: int) -> set:
    keep, stack = set(), [c]
    while stack:
        x = stack.pop()
        if x not in keep:
            keep.add(x)
            stack.extend(b for (_, b) in C.faces[x])
    return keep


def _target(ambient: Dict, src: Dict, dst: Dict) -> Dict:
    return {"ambient": ambient, "from": src, "to": dst, "embedding": "inclusion"}


def _horn_steps(rows: Sequence[Tuple[int, int, Sequence[str]]]) -> List[Dict]:
    return [{"shape": "horn", "n": n, "k": k, "attach": list(a)} for n, k, a in rows]


def sec2_certificates() -> Dict[str, Dict]:
    horn_t = {"shape": "horn", "n": 2, "k": 1, "target": "delta_t"}
    edge = {"shape": "boundary", "n": 1}
    certs = {
        "sec2_A0A1_B0": {
            "comment": "corner of Lambda^1[2] -> Delta[2]_t against dDelta[1] -> Delta[1] under the Gray tensor, "
                       "placed on [0,1,2] x [0,1]",
            "from_names": ["A0", "A1"], "to_name": "B0",
            "steps": [{"shape": "leibniz", "op": "gray", "left": horn_t, "right": edge,
                       "attach": ["00", "01", "10", "11", "20", "21"]}],
        },
        "sec2_A3_B0": {
            "comment": "six horn attachments filling [0,1,2] x [0,1] from the face [0,2] x [0,1]",
            "from_names": ["A3"], "to_name": "B0",
            "steps": _horn_steps([
                (2, 1, ["00", "01", "11"]),
                (2, 0, ["00", "10", "11"]),
                (2, 0, ["00", "10", "21"]),
                (3, 1, ["00", "01", "11", "21"]),
                (3, 0, ["00", "10", "11", "21"]),
                (3, 0, ["00", "10", "20", "21"]),
            ]),
        },
        "sec2_A2A3_B1": {
            "comment": "corner of Lambda^1[2] -> Delta[2]_t against dDelta[1] -> Delta[1] under the Gray tensor, "
                       "placed on [0,2,3] x [0,1]",
            "from_names": ["A2", "A3"], "to_name": "B1",
            "steps": [{"shape": "leibniz", "op": "gray", "left": horn_t, "right": edge,
                       "attach": ["00", "01", "20", "21", "30", "31"]}],
        },
        "sec2_A4_B1": {
            "comment": "six horn attachments filling [0,2,3] x [0,1] from the face [0,3] x [0,1]",
            "from_names": ["A4"], "to_name": "B1",
            "steps": _horn_steps([
                (2, 2, ["00", "21", "31"]),
                (2, 1, ["20", "30", "31"]),
                (2, 2, ["20", "21", "31"]),
                (3, 3, ["00", "01", "21", "31"]),
                (3, 2, ["00", "20", "30", "31"]),
                (3, 3, ["00", "20", "21", "31"]),
            ]),
        },
    }
    out = {}
    for name, c in certs.items():
        out[name] = {
            "name": name,
            "comment": c["comment"],
            "target": _target(C_AMBIENT, _spec_A(c["from_names"]), _spec_B(c["to_name"])),
            "steps": c["steps"],
            "final": "saturated",
            "search_dim": 4,
        }
    return out


# ------------------------------------------------------------ the object R

R_AMBIENT = {
    "generators": [["00", "L", "U", "11"], ["00", "01", "11"]],
    "collapse": [
        {"simplex": ["L", "U", "11"], "images": [0, 1, 1]},
        {"simplex": ["00", "L", "U"], "images": [0, 0, 1]},
    ],
}


def sec1_certificates() -> Dict[str, Dict]:
    K = {"span": [["00", "01", "11"], ["00", "U", "11"]], "thin": [["00", "01", "11"]]}
    L = {"span": [["00", "01", "11"], ["00", "L", "11"]], "thin": [["00", "01", "11"]]}
    R = {"span": "all", "thin": [["00", "01", "11"], ["00", "L", "U", "11"]]}
    return {
        "sec1_K_R": {
            "name": "sec1_K_R",
            "comment": "L and U are the two copies of the vertex 10; K sits on U, one horn fills the tetrahedron",
            "target": _target(R_AMBIENT, K, R),
            "steps": _horn_steps([(3, 2, ["00", "L", "U", "11"])]),
            "final": "saturated", "search_dim": 4,
        },
        "sec1_L_R": {
            "name": "sec1_L_R",
            "comment": "L sits on the vertex L, one horn fills the tetrahedron",
            "target": _target(R_AMBIENT, L, R),
            "steps": _horn_steps([(3, 1, ["00", "L", "U", "11"])]),
            "final": "saturated", "search_dim": 4,
        },
    }


def r_object(which: str = "R") -> StratSet:
    amb = build_ambient(R_AMBIENT)
    certs = sec1_certificates()
    spec = {"K": certs["sec1_K_R"]["target"]["from"], "L": certs["sec1_L_R"]["target"]["from"],
            "R": certs["sec1_K_R"]["target"]["to"]}[which]
    return as_strat(amb, sub_object(amb, spec))[0]


# ------------------------------------------------------------ the (/) lemma

def _lab(v: int, x: int) -> str:
    return f"{v}{x}"


def _pair_cells(n: int, l: int) -> List[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    """Nondegenerate simplices of Delta[n] x Delta[l] as pairs of vertex sequences."""
    out = []
    P = Product(standard_simplex(n), standard_simplex(l))
    for c in P.complex.cells():
        a, b = P.pairs[c]
        out.append((P.X.vertex_labels(a), P.Y.vertex_labels(b)))
    return out


def _in_domain(v, x, n: int, k: int, l: int) -> bool:
    horn_part = not (set(range(n + 1)) - {k}) <= set(v)
    boundary_part = l > 0 and len(set(x)) == 1
    return horn_part or boundary_part


def _generators(n: int, k: int, l: int, anti: bool = False):
    """Pairs (v, x) of the form (v, s^p y) with the required pattern around p."""
    out = set()
    for v, x in _pair_cells(n, l):
        m = len(v) - 1
        for p in range(m + 1):
            q = p + 1 if anti else p
            ok = _anti_pattern(v, q, n, k) if anti else _pattern(v, p, n, k)
            # the L component must be degenerate at p
            if ok and p + 1 <= m and x[p] == x[p + 1]:
                out.add((v, x))
    return out


def oslash_certificate(n: int, k: int, l: int) -> Dict:
    """Delta^k[n] (/) dL  u  Lambda^k[n] (/) L  ->  Delta^k[n] (/) L  for L = Delta[l]."""
    if not 0 <= k < n or l not in (0, 1):
        raise ValueError("need 0 <= k < n and L in {Delta[0], Delta[1]}")
    cells = _pair_cells(n, l)
    gens = _generators(n, k, l)
    dom = {(v, x) for v, x in cells if _in_domain(v, x, n, k, l)}

    def labels(v, x):
        return [_lab(a, b) for a, b in zip(v, x)]

    def maximal(S):
        sets = {tuple(zip(v, x)) for v, x in S}
        return [s for s in sets if not any(set(s) < set(t) for t in sets)]

    span_from = sorted([[_lab(a, b) for a, b in s] for s in maximal(dom)])
    thin_from = sorted(labels(v, x) for v, x in gens if (v, x) in dom and len(v) > 1)
    thin_to = sorted(labels(v, x) for v, x in gens if len(v) > 1)

    steps = []
    present = set(dom)
    for m in range(0, n + l + 1):
        for v, x in sorted(c for c in cells if len(c[0]) == m + 1):
            if k not in v or k + 1 in v:
                continue
            idx = [q for q, y in enumerate(v) if y == k]
            a, b = idx[0] - 1, idx[-1]
            for p in range(b, a, -1):
                vb, xs = wbar_p(v, x, p, k)
                if (vb, xs) in present:
                    continue
                steps.append({"shape": "horn", "n": m + 1, "k": p, "attach": labels(vb, xs)})
                present.add((vb, xs))
                vd = vb[:p] + vb[p + 1:]
                xd = xs[:p] + xs[p + 1:]
                present.add((vd, xd))
    Lname = "Delta[0]" if l == 0 else "Delta[1]"
    return {
        "name": f"oslash_k{k}_n{n}_L{l}",
        "comment": f"the (/) lemma for k={k}, n={n}, L={Lname}; markings are the generating patterns, listed",
        "target": _target({"product": [n, l]}, {"span": span_from, "thin": thin_from},
                          {"span": "all", "thin": thin_to}),
        "steps": steps,
        "final": "exact",
    }


OSLASH_CASES = [(0, 2), (1, 2), (1, 3)]


def oslash_certificates() -> Dict[str, Dict]:
    out = {}
    for k, n in OSLASH_CASES:
        for l in (0, 1):
            c = oslash_certificate(n, k, l)
            out[c["name"]] = c
    return out


# ------------------------------------------------------------ the bundle

def all_certificates() -> Dict[str, Dict]:
    out = {}
    out.update(sec1_certificates())
    out.update(sec2_certificates())
    out.update(oslash_certificates())
    return out


def dumps(cert: Dict) -> str:
    """Indented JSON with flat lists kept on one line."""
    text = json.dumps(cert, indent=1)
    return re.sub(r"\[\s*([^\[\]{}]*?)\s*\]", lambda m: "[" + re.sub(r"\s*\n\s*", " ", m.group(1)) + "]", text) + "\n"


def write_corpus(directory) -> List[str]:
    import os
    os.makedirs(directory, exist_ok=True)
    names = []
    for name, cert in all_certificates().items():
        with open(os.path.join(directory, name + ".cert"), "w") as fh:
            fh.write(dumps(cert))
        names.append(name)
    return names


def bundled_names() -> List[str]:
    root = resources.files("complicial") / "data"
    return sorted(p.name[:-5] for p in root.iterdir() if p.name.endswith(".cert"))


def bundled(name: str) -> Dict:
    root = resources.files("complicial") / "data"
    return json.loads((root / f"{name}.cert").read_text())


# ------------------------------------------------------------ negative controls

def shift_horn(cert: Dict, step: int) -> Dict:
    """Replace the horn index of one step by its neighbour."""
    out = json.loads(json.dumps(cert))
    st = out["steps"][step]
    st["k"] = st["k"] + 1 if st["k"] < st["n"] else st["k"] - 1
    return out


def drop_mark(cert: Dict, index: int = 0) -> Dict:
    """Forget one thin simplex of the target."""
    out = json.loads(json.dumps(cert))
    del out["target"]["to"]["thin"][index]
    return out


def permute_attach(cert: Dict, step: int) -> Dict:
    """Reverse the attach list of one step."""
    out = json.loads(json.dumps(cert))
    out["steps"][step]["attach"] = list(reversed(out["steps"][step]["attach"]))
    return out


def drop_step(cert: Dict, step: int) -> Dict:
    out = json.loads(json.dumps(cert))
    del out["steps"][step]
    return out


def extra_mark(cert: Dict) -> Dict:
    """Claim that some unmarked edge of the target is thin."""
    out = json.loads(json.dumps(cert))
    to = out["target"]["to"]
    amb = build_ambient(out["target"]["ambient"])
    B = sub_object(amb, to)
    edges = sorted(c for c in B.cells if amb.C.dims[c] == 1 and c not in B.t)
    to["thin"] = list(to.get("thin", [])) + [list(amb.labels_of(edges[0]))]
    return out
