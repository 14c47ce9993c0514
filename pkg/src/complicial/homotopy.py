"""Globes, cells and the bounded homotopy-level checks built on them.

Every verdict here is a statement about the finite input: a witness was or was
not found inside C.  Finite complexes are rarely fibrant, so "no composite" or
"not equivalent" never means more than that.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from .constructions import (MappingObject, Suspension, Wedge, hom, suspension_data, suspension_map,
                            wedge_data)
from .core import Complex, SMap, Simplex, identity_map, product_map, search_maps, sub_complex
from .lifting import RLPResult, elementary_extensions, has_rlp
from .shapes import StratMap, StratSet, delta, delta_t, marking_violation, strat_accept, strat_maps, truncate

DISCLAIMER = ("bounded search in a finite complex: a missing witness says nothing about "
              "fibrant replacements, and first-found witnesses are canonical only when C is fibrant")


# ------------------------------------------------------------ globes

@lru_cache(maxsize=None)
def _globe_susp(n: int) -> Suspension:
    """Sigma G_{n-1}; n >= 1."""
    return suspension_data(globe(n - 1))


@lru_cache(maxsize=None)
def _boundary_susp(n: int) -> Suspension:
    return suspension_data(globe_boundary(n - 1))


@lru_cache(maxsize=None)
def globe(n: int) -> StratSet:
    """G_n = Sigma^n Delta[0]."""
    if n < 0:
        raise ValueError("globe dimension must be >= 0")
    return delta(0) if n == 0 else _globe_susp(n).strat


@lru_cache(maxsize=None)
def globe_boundary(n: int) -> StratSet:
    """Sigma^n of the empty set; the boundary of G_n."""
    if n < 0:
        raise ValueError("globe dimension must be >= 0")
    return StratSet(Complex.empty()) if n == 0 else _boundary_susp(n).strat


def _top_cells(X: StratSet, n: int):
    return frozenset(c for c in X.cx.cells() if X.cx.dims[c] >= n > 0)


def globe_t(n: int) -> StratSet:
    return globe(0) if n == 0 else truncate(globe(n), n)


def globe_c(n: int) -> StratSet:
    """G_n with every cell of dimension >= n cartesian."""
    G = globe(n)
    return StratSet(G.cx, G.t, _top_cells(G, n))


def globe_tc(n: int) -> StratSet:
    """(G_n)_t as a bistratified set."""
    return globe_t(n).as_bistratified()


@lru_cache(maxsize=None)
def globe_delta(n: int, eps: int) -> SMap:
    """delta^eps_n : G_{n-1} -> G_n; eps = 0 is the source."""
    if n < 1 or eps not in (0, 1):
        raise ValueError("need n >= 1 and eps in {0, 1}")
    S = _globe_susp(n)
    if n == 1:
        return SMap(globe(0).cx, S.strat.cx, [((0,), S.bottom if eps == 0 else S.top)])
    return suspension_map(_globe_susp(n - 1), S, globe_delta(n - 1, eps))


@lru_cache(maxsize=None)
def globe_sigma(n: int) -> SMap:
    """The collapse G_n -> G_{n-1}, Sigma^{n-1} of G_1 -> G_0."""
    if n < 1:
        raise ValueError("need n >= 1")
    G = globe(n)
    if n == 1:
        return SMap(G.cx, globe(0).cx, [((0,) * (G.cx.dims[c] + 1), 0) for c in G.cx.cells()])
    return suspension_map(_globe_susp(n), _globe_susp(n - 1), globe_sigma(n - 1))


@lru_cache(maxsize=None)
def globe_boundary_inclusion(n: int) -> SMap:
    if n == 0:
        return SMap(Complex.empty(), globe(0).cx, [])
    return suspension_map(_boundary_susp(n), _globe_susp(n), globe_boundary_inclusion(n - 1))


# Sigma^{n-1} Delta[2]_t and its three edges, for composition

@lru_cache(maxsize=None)
def _tri_susp(k: int) -> Suspension:
    return suspension_data(_tri(k - 1))


@lru_cache(maxsize=None)
def _tri(k: int) -> StratSet:
    return delta_t(2) if k == 0 else _tri_susp(k).strat


@lru_cache(maxsize=None)
def _tri_edge(k: int, edge: Tuple[int, int]) -> SMap:
    """Sigma^k of the edge ``edge`` of Delta[2], as a map G_{k+1} -> Sigma^k Delta[2]_t."""
    if k == 0:
        S = _globe_susp(1)
        D = _tri(0).cx
        a, b = edge
        assign = []
        for c in S.strat.cx.cells():
            if c == S.bottom:
                assign.append(((0,), D.lookup((a,))[1]))
            elif c == S.top:
                assign.append(((0,), D.lookup((b,))[1]))
            else:
                assign.append(D.lookup((a, b)))
        return SMap(S.strat.cx, D, assign)
    return suspension_map(_globe_susp(k + 1), _tri_susp(k), _tri_edge(k - 1, edge))


# ------------------------------------------------------------ cells

@dataclass(frozen=True)
class Cell:
    n: int
    map: SMap

    def __call__(self, s: Simplex) -> Simplex:
        return self.map(s)

    @property
    def key(self) -> Tuple[Simplex, ...]:
        return self.map.assign

    def is_thin(self, C: StratSet) -> bool:
        return self.n == 0 or marking_violation(self.map, globe_t(self.n), C) is None

    def describe(self, C: StratSet) -> str:
        G = globe(self.n).cx
        top = [c for c in G.cells() if G.dims[c] == G.dim_bound]
        return f"{self.n}-cell {sorted({_show(C.cx, self.map.assign[c]) for c in top})}"


def _show(X: Complex, s: Simplex) -> str:
    if X.labels is not None:
        return "".join(str(v) for v in X.vertex_labels(s)) if len(s[0]) > 1 else str(X.vertex_labels(s)[0])
    return f"#{s[1]}~{list(s[0])}" if Complex.is_degenerate(s) else f"#{s[1]}"


def cells(C: StratSet, n: int, limit: Optional[int] = None) -> List[Cell]:
    return [Cell(n, f) for f in strat_maps(globe(n), C, limit=limit)]


def source(a: Cell) -> Cell:
    if a.n == 0:
        raise ValueError("0-cells have no source")
    return Cell(a.n - 1, globe_delta(a.n, 0).then(a.map))


def target(a: Cell) -> Cell:
    if a.n == 0:
        raise ValueError("0-cells have no target")
    return Cell(a.n - 1, globe_delta(a.n, 1).then(a.map))


def is_parallel(a: Cell, b: Cell) -> bool:
    if a.n != b.n or a.n == 0:
        return False
    return source(a).key == source(b).key and target(a).key == target(b).key


def is_composable(a: Cell, b: Cell) -> bool:
    """a o b is defined: the source of a is the target of b."""
    return a.n == b.n and a.n > 0 and source(a).key == target(b).key


def identity_cell(a: Cell) -> Cell:
    """The degenerate (n+1)-cell a -> a."""
    return Cell(a.n + 1, globe_sigma(a.n + 1).then(a.map))


def _pin(into: SMap, cell: Cell, fixed: Dict[int, Simplex]) -> bool:
    """Record cell o into^{-1} as fixed values; False on a clash."""
    for c, (eta, x) in enumerate(into.assign):
        v = cell.map.assign[c]
        if len(eta) == 1 or eta == tuple(range(len(eta))):
            old = fixed.get(x)
            if old is not None and old != v:
                return False
            fixed[x] = v
    return True


@dataclass
class Composite:
    witness: SMap      # Sigma^{n-1} Delta[2]_t -> C
    cell: Cell


def compose(C: StratSet, a: Cell, b: Cell) -> Optional[Composite]:
    """A composite a o b found in C, or None when C holds no filler."""
    if not is_composable(a, b):
        raise ValueError("cells are not composable")
    k = a.n - 1
    W = _tri(k)
    fixed: Dict[int, Simplex] = {}
    if not (_pin(_tri_edge(k, (0, 1)), b, fixed) and _pin(_tri_edge(k, (1, 2)), a, fixed)):
        return None
    for w in search_maps(W.cx, C.cx, fixed=fixed, accept=strat_accept(W, C), limit=1):
        return Composite(w, Cell(a.n, _tri_edge(k, (0, 2)).then(w)))
    return None


def composites(C: StratSet, a: Cell, b: Cell, limit: Optional[int] = None) -> List[Cell]:
    """Every composite of a and b in C (deduplicated)."""
    if not is_composable(a, b):
        raise ValueError("cells are not composable")
    k = a.n - 1
    W = _tri(k)
    fixed: Dict[int, Simplex] = {}
    if not (_pin(_tri_edge(k, (0, 1)), b, fixed) and _pin(_tri_edge(k, (1, 2)), a, fixed)):
        return []
    out: Dict[Tuple, Cell] = {}
    for w in search_maps(W.cx, C.cx, fixed=fixed, accept=strat_accept(W, C), limit=limit):
        c = Cell(a.n, _tri_edge(k, (0, 2)).then(w))
        out.setdefault(c.key, c)
    return list(out.values())


def _between(C: StratSet, a: Cell, b: Cell, thin: bool, limit: Optional[int]):
    n = a.n + 1
    G = globe_t(n) if thin else globe(n)
    fixed: Dict[int, Simplex] = {}
    if not (_pin(globe_delta(n, 0), a, fixed) and _pin(globe_delta(n, 1), b, fixed)):
        return []
    return [Cell(n, f) for f in search_maps(G.cx, C.cx, fixed=fixed, accept=strat_accept(G, C), limit=limit)]


def cells_between(C: StratSet, a: Cell, b: Cell, limit: Optional[int] = None) -> List[Cell]:
    """(n+1)-cells a -> b."""
    if a.n > 0 and not is_parallel(a, b):
        raise ValueError("cells are not parallel")
    return _between(C, a, b, False, limit)


def are_equivalent(C: StratSet, a: Cell, b: Cell) -> Optional[Cell]:
    """A thin (n+1)-cell a -> b, if C has one."""
    if a.n != b.n:
        raise ValueError("cells have different dimensions")
    if a.n > 0 and not is_parallel(a, b):
        raise ValueError("cells are not parallel")
    found = _between(C, a, b, True, 1)
    return found[0] if found else None


# ------------------------------------------------------------ homotopy categories

@dataclass
class HoCategory:
    n: int
    objects: List[Cell]
    classes: Dict[Tuple[int, int], List[List[Cell]]]          # (x, y) -> classes of arrows x -> y
    identities: Dict[int, int]                                 # x -> class index in classes[(x, x)]
    table: Dict[Tuple[int, int, int, int, int], Optional[int]] # (x, y, z, g, f) -> class of g o f, None if undefined
    fibrancy: str = "unchecked"
    disclaimer: str = DISCLAIMER

    def undefined(self) -> List[Tuple[int, int, int, int, int]]:
        return [k for k, v in self.table.items() if v is None]

    def check_laws(self) -> List[str]:
        """Identity and associativity wherever the table is defined."""
        errs = []
        for (x, y), cls in self.classes.items():
            for f in range(len(cls)):
                if self.table.get((x, y, y, self.identities[y], f)) not in (f, None):
                    errs.append(f"left identity fails on {x}->{y} class {f}")
                if self.table.get((x, x, y, f, self.identities[x])) not in (f, None):
                    errs.append(f"right identity fails on {x}->{y} class {f}")
        for (x, y, z, g, f), gf in self.table.items():
            if gf is None:
                continue
            for w in range(len(self.objects)):
                for h in range(len(self.classes.get((w, x), []))):
                    fh = self.table.get((w, x, y, f, h))
                    left = self.table.get((w, x, z, gf, h))
                    if fh is None or left is None:
                        continue
                    right = self.table.get((w, y, z, g, fh))
                    if right is not None and right != left:
                        errs.append(f"associativity fails at {(w, x, y, z)}")
        return errs

    def summary(self) -> Dict:
        return {"n": self.n, "objects": len(self.objects),
                "arrows": {f"{x}->{y}": len(c) for (x, y), c in sorted(self.classes.items())},
                "undefined_compositions": len(self.undefined()),
                "fibrancy": self.fibrancy, "disclaimer": self.disclaimer}


def _classes(C: StratSet, arrows: List[Cell]) -> List[List[Cell]]:
    parent = list(range(len(arrows)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in range(len(arrows)):
        for j in range(i + 1, len(arrows)):
            if find(i) == find(j):
                continue
            if are_equivalent(C, arrows[i], arrows[j]) or are_equivalent(C, arrows[j], arrows[i]):
                parent[find(j)] = find(i)
    groups: Dict[int, List[Cell]] = {}
    for i, a in enumerate(arrows):
        groups.setdefault(find(i), []).append(a)
    return [groups[r] for r in sorted(groups)]


def _class_of(classes: List[List[Cell]], cell: Cell) -> Optional[int]:
    for i, cl in enumerate(classes):
        if any(c.key == cell.key for c in cl):
            return i
    return None


def pi_n(C: StratSet, n: int = 0, s: Optional[Cell] = None, t: Optional[Cell] = None,
         infty_dim: Optional[int] = None) -> HoCategory:
    """pi_0(C), or pi_n(s, t, C) for parallel (n-1)-cells s, t."""
    if n == 0:
        objs = cells(C, 0)
    else:
        if s is None or t is None or s.n != n - 1 or t.n != n - 1:
            raise ValueError("pi_n needs two (n-1)-cells s, t")
        if n > 1 and not is_parallel(s, t):
            raise ValueError("s and t are not parallel")
        objs = [a for a in cells(C, n) if source(a).key == s.key and target(a).key == t.key]
    classes: Dict[Tuple[int, int], List[List[Cell]]] = {}
    for i, x in enumerate(objs):
        for j, y in enumerate(objs):
            arrows = _between(C, x, y, False, None)
            if arrows:
                classes[(i, j)] = _classes(C, arrows)
    identities = {}
    for i, x in enumerate(objs):
        identities[i] = _class_of(classes[(i, i)], identity_cell(x))
    table: Dict[Tuple[int, int, int, int, int], Optional[int]] = {}
    for (x, y), fs in classes.items():
        for z in range(len(objs)):
            gs = classes.get((y, z))
            if not gs:
                continue
            for gi, g in enumerate(gs):
                for fi, f in enumerate(fs):
                    comp = compose(C, g[0], f[0])
                    table[(x, y, z, gi, fi)] = None if comp is None else _class_of(classes[(x, z)], comp.cell)
    fib = "unchecked"
    if infty_dim is not None:
        from .lifting import check_infty
        fib = f"check_infty at dim {infty_dim}: {check_infty(C, infty_dim).status}"
    return HoCategory(n, objs, classes, identities, table, fib)


# ------------------------------------------------------------ reports

@dataclass
class FamilyResult:
    name: str
    n: int
    result: RLPResult

    def line(self) -> str:
        return f"{self.name}[{self.n}]: {self.result.status} ({self.result.squares} squares)"


@dataclass
class CheckReport:
    kind: str
    dim: int
    families: List[FamilyResult] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)
    disclaimer: str = DISCLAIMER

    @property
    def status(self) -> str:
        sts = [f.result.status for f in self.families]
        if "fail" in sts:
            return "fail"
        if "budget" in sts:
            return "budget"
        return "pass"

    def failures(self) -> List[FamilyResult]:
        return [f for f in self.families if f.result.status == "fail"]

    def family(self, name: str, n: int) -> Optional[FamilyResult]:
        for f in self.families:
            if f.name == name and f.n == n:
                return f
        return None


def _ok(name: str, n: int, status: str = "pass") -> FamilyResult:
    return FamilyResult(name, n, RLPResult(status, 0))


def globe_inclusions(n: int) -> Tuple[StratMap, Optional[StratMap]]:
    """dG_n -> G_n and G_n -> (G_n)_t (None at n = 0)."""
    b = StratMap(globe_boundary(n), globe(n), globe_boundary_inclusion(n))
    if n == 0:
        return b, None
    G = globe(n)
    return b, StratMap(G, globe_t(n), identity_map(G.cx))


def _globe_families(p: StratMap, d: int, budget: Optional[int], rep: CheckReport, stop: bool) -> None:
    for n in range(0, d + 1):
        b, t = globe_inclusions(n)
        if n < d:
            rep.families.append(FamilyResult("boundary", n, has_rlp(p, b, budget)))
            if stop and rep.status == "fail":
                return
        if t is not None:
            rep.families.append(FamilyResult("thin", n, has_rlp(p, t, budget)))
            if stop and rep.status == "fail":
                return


def check_fibration(p: StratMap, d: int, budget: Optional[int] = 100000, stop: bool = True) -> CheckReport:
    """Right lifting property against the elementary anodyne extensions up to d."""
    rep = CheckReport("fibration", d)
    for e in elementary_extensions(d):
        rep.families.append(FamilyResult(f"{e.name}{list(e.params)}", e.params[0], has_rlp(p, e.map, budget)))
        if stop and rep.status == "fail":
            break
    return rep


def check_g_trivial_fibration(p: StratMap, d: int, budget: Optional[int] = 100000, stop: bool = True
                              ) -> CheckReport:
    """Fibration up to d, boundary inclusions dG_n -> G_n for n < d and G_n -> (G_n)_t for 1 <= n <= d."""
    rep = check_fibration(p, d, budget, stop)
    rep.kind = "g_trivial_fibration"
    if stop and rep.status == "fail":
        return rep
    _globe_families(p, d, budget, rep, stop)
    return rep


def hom_map(p: StratMap, HX: MappingObject, HY: MappingObject) -> StratMap:
    """p_* : X(a, b) -> Y(pa, pb) on simplices up to the bound of HX."""
    if HY.bound < HX.bound:
        raise ValueError("target hom must be computed to at least the same bound")
    assign = []
    for c in HX.strat.cx.cells():
        g = HX.maps[c].then(p.map)
        hit = HY.index.get(g.assign)
        if hit is None:
            raise ValueError(f"simplex {c} has no image in the target hom")
        assign.append(hit)
    return StratMap(HX.strat, HY.strat, SMap(HX.strat.cx, HY.strat.cx, assign))


def _vertices(X: StratSet) -> List[int]:
    return list(X.cx.cells(0))


def check_ff_es(p: StratMap, d: int, budget: Optional[int] = 100000) -> CheckReport:
    """Bounded fully-faithful and essentially-surjective checks.

    ff: for all objects a, b the map X(a, b) -> Y(pa, pb), computed to
    dimension d, lifts against the globe families up to d.  es: every object
    of Y receives a thin 1-cell from some p(x).
    """
    X, Y = p.dom, p.cod
    rep = CheckReport("ff_es", d)
    homs_y: Dict[Tuple[int, int], MappingObject] = {}
    for a in _vertices(X):
        for b in _vertices(X):
            HX = hom(X, a, b, d)
            pa, pb = p.map.assign[a][1], p.map.assign[b][1]
            HY = homs_y.get((pa, pb))
            if HY is None:
                HY = homs_y[(pa, pb)] = hom(Y, pa, pb, d)
            h = hom_map(p, HX, HY)
            sub = CheckReport("hom", d)
            _globe_families(h, d, budget, sub, True)
            for f in sub.families:
                rep.families.append(FamilyResult(f"ff({a},{b}).{f.name}", f.n, f.result))
            rep.notes.append(f"hom({a},{b}) counts {list(HX.strat.cx.counts())} -> {list(HY.strat.cx.counts())}")
    for y in _vertices(Y):
        yc = Cell(0, SMap(globe(0).cx, Y.cx, [((0,), y)]))
        found = False
        for x in _vertices(X):
            px = Cell(0, SMap(globe(0).cx, Y.cx, [p.map.assign[x]]))
            if are_equivalent(Y, px, yc) is not None:
                found = True
                break
        rep.families.append(_ok(f"es({y})", 0, "pass" if found else "fail"))
    return rep


# ------------------------------------------------------------ naive cartesian fibrations

def cartesian_point(alpha: int) -> StratMap:
    """d^c_alpha : {alpha} -> Delta[1]_t, bistratified."""
    I = delta_t(1).as_bistratified()
    pt = delta(0).as_bistratified()
    return StratMap(pt, I, SMap(pt.cx, I.cx, [((0,), alpha)]))


def _push(f: SMap, cells) -> set:
    out = set()
    for x in cells:
        eta, c = f.assign[x]
        if len(eta) > 1 and len(set(eta)) == len(eta):
            out.add(c)
    return out


@dataclass
class MarkedWedge:
    strat: StratSet
    data: Wedge
    susp_copy: SMap      # K -> wedge, the copy glued along the suspension edge
    nabla: SMap          # K -> wedge, the diagonal


def marked_wedge(base: StratSet, K: StratSet, left: bool) -> MarkedWedge:
    """K |> Delta[1]_c (or Delta[1]_c |> K) for K a marking of Sigma(base).

    The underlying wedge is built from the plain base; K's marks are then
    pushed along both inclusions of K and the interval edge becomes cartesian.
    """
    W = wedge_data(StratSet(base.cx), left=left)
    if W.suspension.strat.cx != K.cx:
        raise ValueError("K is not a marking of the suspension of the base")
    copy, nab = W.colimit.cocone[2], W.nabla
    t = set(W.strat.t) | _push(copy, K.t) | _push(nab, K.t)
    c = t | _push(copy, K.cart) | _push(nab, K.cart)
    I = W.colimit.objects[4]
    c |= _push(W.colimit.cocone[4], [e for e in I.cells() if I.dims[e] == 1])
    return MarkedWedge(StratSet(W.strat.cx, t, c), W, copy, nab)


def _wedge_map(WK: Wedge, WL: Wedge, i: SMap) -> SMap:
    """The map of wedges induced by i : K' -> L' on the bases."""
    colL = WL.colimit
    IPK, IPL = WK.suspension.product, WL.suspension.product
    side = product_map(IPK, IPL, i, identity_map(IPK.Y))
    maps = [product_map(WK.product, WL.product, i, identity_map(WK.product.Y)).then(colL.cocone[0]),
            side.then(colL.cocone[1]),
            suspension_map(WK.suspension, WL.suspension, i).then(colL.cocone[2]),
            side.then(colL.cocone[3]),
            colL.cocone[4],
            colL.cocone[5]]
    return WK.colimit.induced(maps, WL.strat.cx)


def cancellation_inclusion(base_K: StratSet, base_L: StratSet, i: SMap, K: StratSet, L: StratSet,
                           left: bool = False) -> StratMap:
    """(K |> Delta[1]_c) u_nabla L -> L |> Delta[1]_c, or its mirror when ``left``.

    K and L are markings of Sigma(base_K) and Sigma(base_L); i : base_K -> base_L.
    """
    WK = marked_wedge(base_K, K, left)
    WL = marked_wedge(base_L, L, left)
    w = _wedge_map(WK.data, WL.data, i)
    cells_ = set(x for (_, x) in w.assign) | set(x for (_, x) in WL.nabla.assign)
    cx = WL.strat.cx
    closed = set()
    stack = list(cells_)
    while stack:
        x = stack.pop()
        if x in closed:
            continue
        closed.add(x)
        stack.extend(b for (_, b) in cx.faces[x])
    D, inc = sub_complex(cx, sorted(closed))
    where = {inc.assign[j][1]: j for j in D.cells()}
    t = _push(w, WK.strat.t) | _push(WL.nabla, L.t)
    c = t | _push(w, WK.strat.cart) | _push(WL.nabla, L.cart)
    dom = StratSet(D, {where[x] for x in t}, {where[x] for x in c})
    bad = marking_violation(inc, dom, WL.strat)
    if bad is not None:
        raise ValueError(f"cancellation inclusion does not preserve marks at cell {bad[0]}")
    return StratMap(dom, WL.strat, inc)


def cancellation_families(n: int, left: bool = False) -> List[Tuple[str, StratMap]]:
    """The three cancellation inclusions at globe level n >= 1."""
    if n < 1:
        raise ValueError("cancellation shapes need n >= 1")
    Gp, Bp = globe(n - 1), globe_boundary(n - 1)
    idG = identity_map(Gp.cx)
    G = globe(n).as_bistratified()
    B = globe_boundary(n).as_bistratified()
    return [("boundary", cancellation_inclusion(Bp, Gp, globe_boundary_inclusion(n - 1), B, G, left)),
            ("cartesian", cancellation_inclusion(Gp, Gp, idG, G, globe_c(n), left)),
            ("thin", cancellation_inclusion(Gp, Gp, idG, globe_c(n), globe_tc(n), left))]


def _bistrat(p: StratMap) -> StratMap:
    return StratMap(p.dom.as_bistratified(), p.cod.as_bistratified(), p.map)


def check_naive_1_fibration(p: StratMap, d: int, side: str = "right", budget: Optional[int] = 100000,
                            stop: bool = True) -> CheckReport:
    """d^c_1 (right) or d^c_0 (left), then right or left cancellability for 1 <= n <= d."""
    if side not in ("right", "left"):
        raise ValueError("side must be 'right' or 'left'")
    p = _bistrat(p)
    rep = CheckReport(f"naive_{side}_1_fibration", d)
    rep.notes.append("cancellation families start at n = 1; the n = 0 shapes are not suspensions")
    alpha = 1 if side == "right" else 0
    rep.families.append(FamilyResult(f"point{alpha}", 0, has_rlp(p, cartesian_point(alpha), budget)))
    if stop and rep.status == "fail":
        return rep
    for n in range(1, d + 1):
        for name, i in cancellation_families(n, left=(side == "left")):
            rep.families.append(FamilyResult(f"cancel.{name}", n, has_rlp(p, i, budget)))
            if stop and rep.status == "fail":
                return rep
    return rep


def check_naive_right_1_fibration(p: StratMap, d: int, budget: Optional[int] = 100000) -> CheckReport:
    return check_naive_1_fibration(p, d, "right", budget)


def check_naive_left_1_fibration(p: StratMap, d: int, budget: Optional[int] = 100000) -> CheckReport:
    return check_naive_1_fibration(p, d, "left", budget)


FIB_CLASSES = ("right", "left", "coright", "coleft")


def _side(cls: str, n: int) -> str:
    odd = n % 2 == 1
    if cls == "right":
        return "right" if odd else "left"
    if cls == "left":
        return "left" if odd else "right"
    if cls == "coright":
        return "right"
    if cls == "coleft":
        return "left"
    raise ValueError(f"unknown class {cls!r}; expected one of {FIB_CLASSES}")


def check_naive_fibration(p: StratMap, d: int, cls: str = "right", cell_dim: int = 0,
                          budget: Optional[int] = 100000) -> CheckReport:
    """The hom-wise scheme: X(a, b) -> Y(pa, pb) must be a naive right or left
    1-fibration, chosen from cls and the parity of the dimension of a, b.

    Parallel pairs are enumerated for cell dimensions 0 and 1; homs are
    computed to dimension d + 1.
    """
    if cell_dim not in (0, 1):
        raise ValueError("cell_dim must be 0 or 1")
    _side(cls, 0)
    p = _bistrat(p)
    X, Y = p.dom, p.cod
    rep = CheckReport(f"naive_{cls}_fibration", d)
    bound = d + 1
    homs: Dict[Tuple[str, int, int], MappingObject] = {}

    def H(which: str, C: StratSet, a: int, b: int) -> MappingObject:
        key = (which, a, b)
        if key not in homs:
            homs[key] = hom(C, a, b, bound)
        return homs[key]

    for a in _vertices(X):
        for b in _vertices(X):
            pa, pb = p.map.assign[a][1], p.map.assign[b][1]
            HX, HY = H("X", X, a, b), H("Y", Y, pa, pb)
            h = hom_map(p, HX, HY)
            sub = check_naive_1_fibration(h, d, _side(cls, 0), budget)
            for f in sub.families:
                rep.families.append(FamilyResult(f"0:({a},{b}).{f.name}", f.n, f.result))
            if cell_dim < 1:
                continue
            # 1-cells a -> b are the vertices of X(a, b)
            for u in _vertices(HX.strat):
                for v in _vertices(HX.strat):
                    HXu = hom(HX.strat, u, v, d)
                    hu, hv = h.map.assign[u][1], h.map.assign[v][1]
                    HYu = hom(HY.strat, hu, hv, HXu.bound)
                    hh = hom_map(h, HXu, HYu)
                    sub = check_naive_1_fibration(hh, max(d - 1, 0), _side(cls, 1), budget)
                    for f in sub.families:
                        rep.families.append(FamilyResult(f"1:({a},{b};{u},{v}).{f.name}", f.n, f.result))
    return rep
