"""Lift search, right lifting properties, bounded fibrancy checks and certificate replay."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .core import Complex, SMap, Simplex, map_from_vertices, search_maps, standard_simplex
from .shapes import (StratMap, StratSet, boundary_set, cart_thin, cart_thin2, colimit_strat, delta,
                     delta_k_dprime, delta_k_prime, delta_t, eq3, horn, inclusion_by_labels, marking_violation,
                     plain, sharp, strat_accept, strat_maps)


# ------------------------------------------------------------ squares and lifts

@dataclass(frozen=True)
class Square:
    """A commutative square  top: K -> X,  bottom: L -> Y  over  i: K -> L  and  p: X -> Y."""
    i: StratMap
    p: StratMap
    top: SMap
    bottom: SMap

    def check(self) -> None:
        K = self.i.dom.cx
        for c in K.cells():
            lhs = self.p.map(self.top.assign[c])
            rhs = self.bottom(self.i.map.assign[c])
            if lhs != rhs:
                raise ValueError(f"square does not commute at cell {c}")
        for f, a, b in ((self.top, self.i.dom, self.p.dom), (self.bottom, self.i.cod, self.p.cod)):
            bad = marking_violation(f, a, b)
            if bad is not None:
                raise ValueError(f"square edge does not preserve marks at cell {bad[0]}")


def _pinned(i: StratMap, top: SMap) -> Dict[int, Simplex]:
    fixed = {}
    for c in i.dom.cx.cells():
        eta, l = i.map.assign[c]
        if len(set(eta)) != len(eta):
            raise ValueError("i is not a monomorphism")
        fixed[l] = top.assign[c]
    return fixed


def lifts(sq: Square, limit: Optional[int] = None) -> Iterator[SMap]:
    """All diagonals L -> X of the square, in search order."""
    L, X = sq.i.cod, sq.p.dom
    marks = strat_accept(L, X)
    bottom, p = sq.bottom, sq.p.map

    def accept(c: int, s: Simplex) -> bool:
        return marks(c, s) and p(s) == bottom.assign[c]

    return search_maps(L.cx, X.cx, fixed=_pinned(sq.i, sq.top), accept=accept, limit=limit)


def find_lift(sq: Square, check: bool = True) -> Optional[SMap]:
    if check:
        sq.check()
    for f in lifts(sq, limit=1):
        return f
    return None


# ------------------------------------------------------------ right lifting property

@dataclass
class RLPResult:
    status: str                      # "pass", "fail" or "budget"
    squares: int
    counterexample: Optional[Square] = None
    budget: Optional[int] = None

    @property
    def ok(self) -> Optional[bool]:
        return {"pass": True, "fail": False}.get(self.status)


def squares(p: StratMap, i: StratMap) -> Iterator[Square]:
    """Every commuting square from i to p."""
    for top in strat_maps(i.dom, p.dom):
        image = {}
        for c in i.dom.cx.cells():
            image[i.map.assign[c][1]] = p.map(top.assign[c])
        for bottom in strat_maps(i.cod, p.cod, fixed=image):
            yield Square(i, p, top, bottom)


def has_rlp(p: StratMap, i: StratMap, budget: Optional[int] = 100000) -> RLPResult:
    """Check the lifting property square by square; stops at the first failure or when the budget runs out."""
    n = 0
    for sq in squares(p, i):
        n += 1
        if budget is not None and n > budget:
            return RLPResult("budget", n - 1, None, budget)
        if find_lift(sq, check=False) is None:
            return RLPResult("fail", n, sq, budget)
    return RLPResult("pass", n, None, budget)


def terminal() -> StratSet:
    return plain(standard_simplex(0))


def to_terminal(X: StratSet) -> StratMap:
    pt = terminal()
    return StratMap(X, pt, SMap(X.cx, pt.cx, [((0,) * (X.cx.dims[c] + 1), 0) for c in X.cx.cells()]))


# ------------------------------------------------------------ elementary anodyne extensions

@dataclass(frozen=True)
class Extension:
    name: str
    params: Tuple[int, ...]
    map: StratMap


def _identity_ext(A: StratSet, B: StratSet) -> StratMap:
    return StratMap(A, B, SMap(A.cx, B.cx, [A.cx.cell(c) for c in A.cx.cells()]))


def horn_extension(n: int, k: int) -> Extension:
    H, T, inc = horn(n, k)
    return Extension("horn", (n, k), StratMap(H, T, inc))


def thinness_extension(n: int, k: int) -> Extension:
    return Extension("thinness", (n, k), _identity_ext(delta_k_prime(n, k), delta_k_dprime(n, k)))


def saturation_shapes(n: int, m: int) -> Tuple[StratSet, StratSet]:
    """Delta[n] * Delta[3]^eq * Delta[m] and its sharp version as marked Delta[n+m+5]."""
    from .constructions import join
    empty = StratSet(Complex.empty())
    left = delta(n) if n >= 0 else empty
    right = delta(m) if m >= 0 else empty
    A = join(join(left, eq3()), right)
    B = join(join(left, sharp(3)), right)
    return A, B


def saturation_extension(n: int, m: int) -> Extension:
    A, B = saturation_shapes(n, m)
    return Extension("saturation", (n, m), _identity_ext(A, B))


def cart_thinness_extension(n: int, k: int) -> Extension:
    return Extension("cart_thinness", (n, k), _identity_ext(cart_thin(n, k), cart_thin2(n, k)))


def elementary_extensions(d: int) -> List[Extension]:
    """Horns and thinness extensions with n <= d, then saturation extensions with n + m + 5 <= d."""
    out: List[Extension] = []
    for n in range(1, d + 1):
        for k in range(n + 1):
            out.append(horn_extension(n, k))
    for n in range(2, d + 1):
        for k in range(n + 1):
            out.append(thinness_extension(n, k))
    for total in range(3, d + 1):
        for n in range(-1, total - 3):
            out.append(saturation_extension(n, total - 5 - n))
    return out


@dataclass
class InftyReport:
    dim: int
    budget: Optional[int]
    results: List[Tuple[Extension, RLPResult]] = field(default_factory=list)

    @property
    def status(self) -> str:
        sts = [r.status for _, r in self.results]
        if "fail" in sts:
            return "fail"
        if "budget" in sts:
            return "budget"
        return "pass"

    @property
    def first_failure(self) -> Optional[Tuple[Extension, RLPResult]]:
        for e, r in self.results:
            if r.status == "fail":
                return e, r
        return None


def check_infty(X: StratSet, d: int, budget: Optional[int] = 100000, stop: bool = True) -> InftyReport:
    """Right lifting property of X -> 1 against the elementary anodyne extensions up to dimension d."""
    p = to_terminal(X)
    rep = InftyReport(d, budget)
    for e in elementary_extensions(d):
        r = has_rlp(p, e.map, budget)
        rep.results.append((e, r))
        if stop and r.status == "fail":
            break
    return rep


# ------------------------------------------------------------ pushout steps

def pushout_step(current: StratSet, source: StratSet, target: StratSet, inc: SMap, attach: SMap
                 ) -> Tuple[StratSet, SMap, SMap]:
    """Pushout of ``inc: source -> target`` along ``attach: source -> current``.

    Returns the new stage, the inclusion of the old stage and the map from the target.
    """
    bad = marking_violation(attach, source, current)
    if bad is not None:
        raise ValueError(f"attaching map sends {bad[2]} cell {bad[0]} to an unmarked simplex")
    D, col = colimit_strat([current, source, target], [(1, 0, attach), (1, 2, inc)])
    return D, col.cocone[0], col.cocone[2]


# ------------------------------------------------------------ certificates

class CertificateError(ValueError):
    pass


@dataclass
class Verdict:
    valid: bool
    step: Optional[int] = None        # 0-based index of the failing step, -1 for the final comparison
    reason: str = ""
    stages: List[Tuple[int, ...]] = field(default_factory=list)
    implicit_closures: List[int] = field(default_factory=list)

    def __str__(self) -> str:
        if self.valid:
            return "VALID"
        if self.step is None:
            return f"INVALID({self.reason})"
        where = "final stage" if self.step == -1 else f"step {self.step + 1}"
        return f"INVALID({where}: {self.reason})"


@dataclass
class Ambient:
    """A labelled nonsingular complex P, its quotient C by the collapses, and q: P -> C."""
    P: Complex
    C: Complex
    q: SMap

    def simplex(self, labels: Sequence[str]) -> Simplex:
        return self.q(self.P.lookup(tuple(labels)))

    def labels_of(self, c: int) -> Tuple[str, ...]:
        """A label tuple representing the cell c of C."""
        for x in self.P.cells():
            s = self.q.assign[x]
            if s[1] == c and len(set(s[0])) == len(s[0]):
                return self.P.vertex_labels(self.P.cell(x))
        raise KeyError(c)


def _label(v) -> str:
    return "".join(str(x) for x in v) if isinstance(v, tuple) else str(v)


def product_generators(dims: Sequence[int]) -> List[List[str]]:
    """Maximal chains of a product of standard simplices, with labels like "21"."""
    out: List[List[str]] = []

    def rec(cur: List[int], chain: List[str]):
        moves = [i for i in range(len(dims)) if cur[i] < dims[i]]
        if not moves:
            out.append(chain)
            return
        for i in moves:
            nxt = list(cur)
            nxt[i] += 1
            rec(nxt, chain + ["".join(map(str, nxt))])

    start = [0] * len(dims)
    rec(start, ["".join(map(str, start))])
    return out


def build_ambient(spec: Dict) -> Ambient:
    if "product" in spec:
        gens = product_generators(spec["product"])
    elif "generators" in spec:
        gens = spec["generators"]
    else:
        raise CertificateError("ambient needs 'product' or 'generators'")
    P = Complex.from_simplices(gens)
    objects: List[Complex] = [P]
    arrows = []
    for col in spec.get("collapse", []):
        labels, images = col["simplex"], col["images"]
        r, s = len(labels) - 1, max(images)
        if len(images) != r + 1 or any(a > b for a, b in zip(images, images[1:])) or set(images) != set(range(s + 1)):
            raise CertificateError(f"collapse images {images} are not a surjection")
        try:
            sigma = P.lookup(tuple(labels))
        except KeyError:
            raise CertificateError(f"collapse simplex {labels} is not in the ambient")
        Dr, Ds = standard_simplex(r), standard_simplex(s)
        into = SMap(Dr, P, [P.apply(sigma, Dr.vertex_labels(Dr.cell(c))) for c in Dr.cells()])
        down = map_from_vertices(Dr, Ds, lambda v: images[v])
        k = len(objects)
        objects += [Dr, Ds]
        arrows += [(k, 0, into), (k, k + 1, down)]
    from .core import colimit
    col = colimit(objects, arrows)
    return Ambient(P, col.complex, col.cocone[0])


def _closure(C: Complex, cells) -> set:
    keep, stack = set(), list(cells)
    while stack:
        c = stack.pop()
        if c not in keep:
            keep.add(c)
            stack.extend(b for (_, b) in C.faces[c])
    return keep


def _marks(amb: Ambient, entries, what: str) -> set:
    out = set()
    for lab in entries:
        try:
            s = amb.simplex(lab)
        except KeyError:
            raise CertificateError(f"{what} entry {lab} is not a simplex of the ambient")
        if len(s[0]) == 1:
            raise CertificateError(f"{what} entry {lab} is a vertex")
        if len(set(s[0])) == len(s[0]):
            out.add(s[1])
    return out


@dataclass
class SubObject:
    """A sub-object of the ambient quotient, in ambient cell ids."""
    cells: set
    t: set
    c: Optional[set] = None


def sub_object(amb: Ambient, spec: Dict) -> SubObject:
    span = spec.get("span", "all")
    if span == "all":
        cells = set(amb.C.cells())
    else:
        tops = []
        for lab in span:
            try:
                tops.append(amb.simplex(lab)[1])
            except KeyError:
                raise CertificateError(f"span entry {lab} is not a simplex of the ambient")
        cells = _closure(amb.C, tops)
    t = _marks(amb, spec.get("thin", []), "thin")
    c = _marks(amb, spec["cartesian"], "cartesian") | t if "cartesian" in spec else None
    for x in t | (c or set()):
        if x not in cells:
            raise CertificateError(f"marked cell {x} lies outside the span")
    return SubObject(cells, t, c)


def as_strat(amb: Ambient, S: SubObject) -> Tuple[StratSet, SMap]:
    from .core import sub_complex
    Y, inc = sub_complex(amb.C, S.cells)
    back = {inc.assign[y][1]: y for y in Y.cells()}
    t = frozenset(back[x] for x in S.t)
    c = None if S.c is None else frozenset(back[x] for x in S.c)
    return StratSet(Y, t, c), inc


def step_shape(spec: Dict) -> Tuple[StratSet, StratSet, SMap]:
    """(source, target, inclusion) of a named generating map."""
    kind = spec["shape"]
    if kind == "horn":
        n, k = spec["n"], spec["k"]
        amb = None
        if spec.get("target") == "delta_t":
            amb = delta_t(n)
        elif spec.get("target") == "delta":
            amb = delta(n)
        H, T, inc = horn(n, k, amb)
        return H, T, inc
    if kind == "boundary":
        n = spec["n"]
        B, T = boundary_set(n), delta(n)
        if spec.get("target") == "delta_t":
            T = delta_t(n)
        return B, T, inclusion_by_labels(B.cx, T.cx)
    if kind == "thinness":
        e = thinness_extension(spec["n"], spec["k"]).map
        return e.dom, e.cod, e.map
    if kind == "saturation":
        e = saturation_extension(spec["n"], spec["m"]).map
        return e.dom, e.cod, e.map
    if kind == "cart_thinness":
        e = cart_thinness_extension(spec["n"], spec["k"]).map
        return e.dom, e.cod, e.map
    if kind == "leibniz":
        from .constructions import leibniz
        a, b = step_shape(spec["left"]), step_shape(spec["right"])
        L = leibniz(StratMap(a[0], a[1], a[2]), StratMap(b[0], b[1], b[2]), spec.get("op", "gray"))
        return L.map.dom, L.map.cod, L.map.map
    raise CertificateError(f"unknown step shape {kind!r}")


def _attach_map(amb: Ambient, T: StratSet, attach: Sequence[str]) -> SMap:
    verts = list(T.cx.cells(0))
    if len(attach) != len(verts):
        raise CertificateError(f"attach lists {len(attach)} vertices, the shape has {len(verts)}")
    where = {T.cx.labels[v]: attach[i] for i, v in enumerate(verts)}
    assign = []
    for c in T.cx.cells():
        labs = tuple(where[x] for x in T.cx.vertex_labels(T.cx.cell(c)))
        try:
            assign.append(amb.simplex(labs))
        except KeyError:
            raise CertificateError(f"{list(labs)} is not a simplex of the ambient")
    m = SMap(T.cx, amb.C, assign)
    errs = m.check()
    if errs:
        raise CertificateError("attach does not define a simplicial map")
    return m


def _sat(X: StratSet, search_dim: int) -> StratSet:
    from .saturation import saturate
    return saturate(X, search_dim)


def _image_marks(e: SMap, cells) -> set:
    return {e.assign[x][1] for x in cells}


def verify_certificate(cert: Dict) -> Verdict:
    """Replay the certificate's pushouts and compare the final stage with the target."""
    try:
        target = cert["target"]
        if target.get("embedding", "inclusion") != "inclusion":
            raise CertificateError("only sub-object inclusions are supported as targets")
        amb = build_ambient(target["ambient"])
        A = sub_object(amb, target["from"])
        B = sub_object(amb, target["to"])
    except (CertificateError, KeyError) as exc:
        return Verdict(False, None, f"malformed certificate: {exc}")
    if not A.cells <= B.cells:
        return Verdict(False, None, "source is not contained in the target")
    search_dim = cert.get("search_dim", amb.C.dim_bound + 1)
    Bs, Binc = as_strat(amb, B)
    Bclosed = _sat(Bs, search_dim)
    Bsat = _image_marks(Binc, Bclosed.t)
    Bsat_c = None if B.c is None else _image_marks(Binc, Bclosed.cart)
    D, e = as_strat(amb, A)
    stages = [D.cx.counts()]
    implicit: List[int] = []
    for j, step in enumerate(cert["steps"]):
        try:
            S, T, inc = step_shape(step)
            g = _attach_map(amb, T, step["attach"])
        except (CertificateError, KeyError, ValueError) as exc:
            return Verdict(False, j, str(exc), stages, implicit)
        outside = [c for c in g.image_cells() if c not in B.cells]
        if outside:
            return Verdict(False, j, f"shape leaves the target at {list(amb.labels_of(outside[0]))}", stages, implicit)
        back = {e.assign[x][1]: x for x in D.cx.cells()}
        assign = []
        for c in S.cx.cells():
            eta, y = g(inc.assign[c])
            if y not in back:
                return Verdict(False, j, f"face {list(amb.labels_of(y))} is not yet present", stages, implicit)
            assign.append((eta, back[y]))
        a = SMap(S.cx, D.cx, assign)
        if marking_violation(a, S, D) is not None:
            D = _sat(D, search_dim)
            implicit.append(j)
            bad = marking_violation(a, S, D)
            if bad is not None:
                y = a.assign[bad[0]]
                return Verdict(False, j, f"source mark on {list(amb.labels_of(e(y)[1]))} is not {bad[2]} in the stage",
                               stages, implicit)
        D2, col = colimit_strat([D, S, T], [(1, 0, a), (1, 2, inc)])
        e2 = col.induced([e, inc.then(g), g], amb.C)
        if not e2.is_mono():
            return Verdict(False, j, "pushout does not embed in the target", stages, implicit)
        newmarks = _image_marks(e2, D2.t) - Bsat
        if newmarks:
            return Verdict(False, j, f"mark on {list(amb.labels_of(min(newmarks)))} is not thin in the target", stages, implicit)
        D, e = D2, e2
        stages.append(D.cx.counts())
    img = {e.assign[x][1] for x in D.cx.cells()}
    if img != B.cells:
        missing = sorted(B.cells - img)
        return Verdict(False, -1, f"final stage misses {list(amb.labels_of(missing[0]))}", stages, implicit)
    mode = cert.get("final", "exact")
    if mode == "exact":
        got, want = _image_marks(e, D.t), B.t
    else:
        got, want = _image_marks(e, _sat(D, search_dim).t), Bsat
    if got != want:
        diff = sorted(got ^ want)
        return Verdict(False, -1, f"markings differ at {list(amb.labels_of(diff[0]))}", stages, implicit)
    if B.c is not None:
        gc = _image_marks(e, D.cart if mode == "exact" else _sat(D, search_dim).cart)
        wc = B.c if mode == "exact" else Bsat_c
        if gc != wc:
            return Verdict(False, -1, "cartesian markings differ", stages, implicit)
    return Verdict(True, None, "", stages, implicit)


def load_certificate(path) -> Dict:
    with open(path) as fh:
        return json.load(fh)
