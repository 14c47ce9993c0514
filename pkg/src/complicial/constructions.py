"""Join, Gray tensor, suspension, diamond, co-join, wedge, Leibniz products and gamma.

Everything returns raw stratified sets: marks are the ones forced by the
defining formula or pushed forward along a colimit, never saturated.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

from .core import (Colimit, Complex, Product, SMap, Simplex, coface, identity, identity_map, join_ops, search_maps,
                   standard_simplex)
from .shapes import (StratMap, StratSet, check_strat_map, delta, delta_t, marking_violation, product_strat,
                     strat_accept)


# ------------------------------------------------------------ join

class Join:
    """X * Y.  Cells are those of X, then those of Y, then pairs (x, y)."""

    def __init__(self, X: StratSet, Y: StratSet):
        self.X, self.Y = X, Y
        A, B = X.cx, Y.cx
        self.index: Dict[Tuple[Optional[int], Optional[int]], int] = {}
        keys: List[Tuple[Optional[int], Optional[int]]] = []
        top = (A.dim_bound + B.dim_bound + 1) if len(A) and len(B) else max(A.dim_bound, B.dim_bound)
        for d in range(top + 1):
            keys += [(x, None) for x in A.cells(d)]
            keys += [(None, y) for y in B.cells(d)]
            for dx in range(d):
                keys += [(x, y) for x in A.cells(dx) for y in B.cells(d - 1 - dx)]
        self.keys = keys
        self.index = {k: i for i, k in enumerate(keys)}
        dims, faces = [], []
        for (x, y) in keys:
            if y is None:
                dims.append(A.dims[x])
                faces.append(tuple((e, self.index[(c, None)]) for (e, c) in A.faces[x]))
            elif x is None:
                dims.append(B.dims[y])
                faces.append(tuple((e, self.index[(None, c)]) for (e, c) in B.faces[y]))
            else:
                dx, dy = A.dims[x], B.dims[y]
                dims.append(dx + dy + 1)
                fs = []
                for i in range(dx + 1):
                    fs.append(self.simplex(A.face(A.cell(x), i) if dx else None, B.cell(y)))
                for j in range(dy + 1):
                    fs.append(self.simplex(A.cell(x), B.face(B.cell(y), j) if dy else None))
                faces.append(tuple(fs))
        labels = None
        if A.labels is not None and B.labels is not None:
            labels = [(0, A.labels[x]) if y is None else (1, B.labels[y])
                      for (x, y), d in zip(keys, dims) if d == 0]
        self.complex = Complex(dims, faces, labels=labels)
        t = [i for i, (x, y) in enumerate(keys) if self._marked(x, y, X.t, Y.t)]
        if X.c is None and Y.c is None:
            self.strat = StratSet(self.complex, frozenset(t))
        else:
            c = [i for i, (x, y) in enumerate(keys) if self._marked(x, y, X.cart, Y.cart)]
            self.strat = StratSet(self.complex, frozenset(t), frozenset(c) | frozenset(t))
        self.left = SMap(A, self.complex, [(identity(A.dims[x]), self.index[(x, None)]) for x in A.cells()])
        self.right = SMap(B, self.complex, [(identity(B.dims[y]), self.index[(None, y)]) for y in B.cells()])

    @staticmethod
    def _marked(x, y, tx, ty) -> bool:
        return (x is not None and x in tx) or (y is not None and y in ty)

    def simplex(self, a: Optional[Simplex], b: Optional[Simplex]) -> Simplex:
        """The simplex a * b; ``None`` stands for the empty simplex."""
        if a is None and b is None:
            raise ValueError("the empty join is not a simplex")
        if b is None:
            return a[0], self.index[(a[1], None)]
        if a is None:
            return b[0], self.index[(None, b[1])]
        ea, eb = a[0], b[0]
        ka = max(ea)
        return join_ops(ea, ka, eb), self.index[(a[1], b[1])]

    def split(self, s: Simplex) -> Tuple[Optional[Simplex], Optional[Simplex]]:
        """Inverse of :meth:`simplex`."""
        eta, c = s
        x, y = self.keys[c]
        if y is None:
            return (eta, x), None
        if x is None:
            return None, (eta, y)
        dx = self.X.cx.dims[x]
        j = sum(1 for v in eta if v <= dx)
        ea = eta[:j]
        eb = tuple(v - dx - 1 for v in eta[j:])
        return ((ea, x) if j else None), ((eb, y) if j < len(eta) else None)


def join(X: StratSet, Y: StratSet) -> StratSet:
    return Join(X, Y).strat


def join_map(J1: Join, J2: Join, f: SMap, g: SMap) -> SMap:
    """f * g between joins."""
    out = []
    for (x, y) in J1.keys:
        a = f(J1.X.cx.cell(x)) if x is not None else None
        b = g(J1.Y.cx.cell(y)) if y is not None else None
        out.append(J2.simplex(a, b))
    return SMap(J1.complex, J2.complex, out)


# ------------------------------------------------------------ Gray tensor

def front(X: Complex, s: Simplex, p: int) -> Simplex:
    return X.apply(s, tuple(range(p + 1)))


def back(X: Complex, s: Simplex, q: int) -> Simplex:
    n = len(s[0]) - 1
    return X.apply(s, tuple(range(n - q, n + 1)))


def _gray_marked(X: Complex, Y: Complex, a: Simplex, b: Simplex, thin_x, thin_y) -> bool:
    n = len(a[0]) - 1
    if n == 0:
        return False
    for p in range(n + 1):
        if not (thin_x(front(X, a, p)) or thin_y(back(Y, b, n - p))):
            return False
    return True


def gray_with(X: StratSet, Y: StratSet) -> Tuple[StratSet, Product]:
    """X (x) Y on the product X x Y, together with the product data."""
    P = Product(X.cx, Y.cx)
    t = frozenset(i for i, (a, b) in enumerate(P.pairs) if _gray_marked(X.cx, Y.cx, a, b, X.thin, Y.thin))
    if X.c is None and Y.c is None:
        return StratSet(P.complex, t), P
    c = frozenset(i for i, (a, b) in enumerate(P.pairs)
                  if _gray_marked(X.cx, Y.cx, a, b, X.cartesian, Y.cartesian))
    return StratSet(P.complex, t, c | t), P


def gray(X: StratSet, Y: StratSet) -> StratSet:
    return gray_with(X, Y)[0]


def product(X: StratSet, Y: StratSet) -> StratSet:
    return product_strat(X, Y)[0]


def _const(I: Complex, v: int, d: int) -> Simplex:
    return (0,) * (d + 1), v


def end_inclusion(P: Product, v: int, first: bool = False) -> SMap:
    """X -> X x I at the vertex v of I (or I -> I x Y at v of the first factor when ``first``)."""
    if first:
        Y = P.Y
        return SMap(Y, P.complex, [P.pair(_const(P.X, v, Y.dims[c]), Y.cell(c)) for c in Y.cells()])
    X = P.X
    return SMap(X, P.complex, [P.pair(X.cell(c), _const(P.Y, v, X.dims[c])) for c in X.cells()])


def _point() -> StratSet:
    return delta(0)


def _to_point(X: Complex) -> SMap:
    pt = standard_simplex(0)
    return SMap(X, pt, [((0,) * (X.dims[c] + 1), 0) for c in X.cells()])


# ------------------------------------------------------------ suspension

@dataclass
class Suspension:
    strat: StratSet
    colimit: Colimit
    tensor: StratSet
    product: Product
    bottom: int
    top: int
    quotient: SMap  # X (x) I -> Sigma X


def suspension_data(X: StratSet, circ: bool = False) -> Suspension:
    I = delta(1)
    if circ:
        T, P = gray_with(I, X)
        ends = [end_inclusion(P, 0, first=True), end_inclusion(P, 1, first=True)]
    else:
        T, P = gray_with(X, I)
        ends = [end_inclusion(P, 0), end_inclusion(P, 1)]
    objects = [T, X, X, _point(), _point()]
    arrows = [(1, 0, ends[0]), (1, 3, _to_point(X.cx)), (2, 0, ends[1]), (2, 4, _to_point(X.cx))]
    from .shapes import colimit_strat
    S, col = colimit_strat(objects, arrows)
    return Suspension(S, col, T, P, col.cocone[3].assign[0][1], col.cocone[4].assign[0][1], col.cocone[0])


def suspension(X: StratSet) -> StratSet:
    return suspension_data(X).strat


def circ_suspension(X: StratSet) -> StratSet:
    return suspension_data(X, circ=True).strat


def suspension_map(src: Suspension, dst: Suspension, f: SMap) -> SMap:
    """Sigma f : Sigma X -> Sigma Y for f : X -> Y."""
    from .core import product_map
    fi = product_map(src.product, dst.product, f, identity_map(src.product.Y)).then(dst.quotient)
    pt = standard_simplex(0)
    e0 = end_inclusion(src.product, 0).then(fi)
    e1 = end_inclusion(src.product, 1).then(fi)
    return src.colimit.induced([fi, e0, e1, SMap(pt, dst.strat.cx, [((0,), dst.bottom)]),
                                SMap(pt, dst.strat.cx, [((0,), dst.top)])], dst.strat.cx)


# ------------------------------------------------------------ diamond and co-join

@dataclass
class Diamond:
    strat: StratSet
    colimit: Colimit
    tensor: StratSet
    inner: Product   # X x I (or Y x I for the co-join)
    outer: Product   # (X x I) x Y (or (Y x I) x X)


def _three_fold(L: StratSet, R: StratSet) -> Tuple[StratSet, Product, Product]:
    LI, inner = gray_with(L, delta(1))
    T, outer = gray_with(LI, R)
    return T, inner, outer


def _level(inner: Product, outer: Product, LR: Product, e: int) -> SMap:
    """L x R -> (L x I) x R at level e of I."""
    out = []
    for (a, b) in LR.pairs:
        d = len(a[0]) - 1
        out.append(outer.pair(inner.pair(a, _const(inner.Y, e, d)), b))
    return SMap(LR.complex, outer.complex, out)


def diamond_data(X: StratSet, Y: StratSet, co: bool = False) -> Diamond:
    """X <> Y, or the co-join X *co Y when ``co``.

    The diamond is (X (x) I) (x) Y with the 0-end projected to X and the 1-end
    to Y; the co-join is (Y (x) I) (x) X with the 0-end projected to X and the
    1-end to Y.
    """
    L, R = (Y, X) if co else (X, Y)
    T, inner, outer = _three_fold(L, R)
    LR = Product(L.cx, R.cx)
    plainLR = StratSet(LR.complex)
    lev0, lev1 = _level(inner, outer, LR, 0), _level(inner, outer, LR, 1)
    # objects: tensor, level 0, level 1, X, Y
    if co:
        arrows = [(1, 0, lev0), (1, 3, LR.proj2), (2, 0, lev1), (2, 4, LR.proj1)]
    else:
        arrows = [(1, 0, lev0), (1, 3, LR.proj1), (2, 0, lev1), (2, 4, LR.proj2)]
    from .shapes import colimit_strat
    S, col = colimit_strat([T, plainLR, plainLR, X, Y], arrows)
    return Diamond(S, col, T, inner, outer)


def diamond(X: StratSet, Y: StratSet) -> StratSet:
    return diamond_data(X, Y).strat


def cojoin(X: StratSet, Y: StratSet) -> StratSet:
    return diamond_data(X, Y, co=True).strat


# ------------------------------------------------------------ wedge

@dataclass
class Wedge:
    strat: StratSet
    colimit: Colimit
    nabla: SMap          # Sigma X -> wedge
    suspension: Suspension
    product: Product     # X x Delta[2], underlying the tensor


def wedge_data(X: StratSet, left: bool = False) -> Wedge:
    """Sigma X |> Delta[1] (or Delta[1] |> Sigma X when ``left``) with its map from Sigma X."""
    D2 = delta_t(2)
    T, P = gray_with(X, D2)
    susp = suspension_data(X)
    I = delta(1)
    IP = susp.product  # X x Delta[1]
    d2, d1, d0 = (0, 1), (0, 2), (1, 2)

    def along(edge) -> SMap:
        e = {0: edge[0], 1: edge[1]}
        out = []
        for (a, b) in IP.pairs:
            bv = tuple(e[v] for v in IP.Y.vertex_labels(b))
            out.append(P.pair(a, D2.cx.lookup(bv)))
        return SMap(IP.complex, P.complex, out)

    sus_edge, int_edge = (d0, d2) if left else (d2, d0)
    XI = StratSet(IP.complex)
    pt = standard_simplex(0)
    joint, end = (susp.bottom, 1) if left else (susp.top, 0)
    objects = [T, XI, susp.strat, XI, I, _point()]
    arrows = [(1, 0, along(sus_edge)), (1, 2, susp.quotient), (3, 0, along(int_edge)), (3, 4, IP.proj2),
              # the shared point; only matters when X is empty
              (5, 2, SMap(pt, susp.strat.cx, [((0,), joint)])), (5, 4, SMap(pt, I.cx, [((0,), end)]))]
    from .shapes import colimit_strat
    W, col = colimit_strat(objects, arrows)
    # nabla on the suspension colimit: X x I -> T along [0,2] then into W
    g = along(d1).then(col.cocone[0])
    X0 = end_inclusion(IP, 0).then(g)
    X1 = end_inclusion(IP, 1).then(g)
    if left:
        bot = SMap(pt, W.cx, [col.cocone[4].assign[0]])
        top = SMap(pt, W.cx, [col.cocone[2].assign[susp.top]])
    else:
        bot = SMap(pt, W.cx, [col.cocone[2].assign[susp.bottom]])
        top = SMap(pt, W.cx, [col.cocone[4].assign[1]])
    nabla = susp.colimit.induced([g, X0, X1, bot, top], W.cx)
    return Wedge(W, col, nabla, susp, P)


def wedge_right(X: StratSet) -> StratSet:
    return wedge_data(X).strat


def wedge_left(X: StratSet) -> StratSet:
    return wedge_data(X, left=True).strat


# ------------------------------------------------------------ Leibniz construction

def _bifunctor(op: str):
    if op in ("x", "times", "product"):
        def obj(A, B):
            S, P = product_strat(A, B)
            return S, P
        def mor(P1, P2, f, g):
            from .core import product_map
            return product_map(P1, P2, f, g)
        return obj, mor
    if op in ("gray", "tensor", "otimes"):
        def obj(A, B):
            return gray_with(A, B)
        def mor(P1, P2, f, g):
            from .core import product_map
            return product_map(P1, P2, f, g)
        return obj, mor
    if op in ("join", "star"):
        def obj(A, B):
            J = Join(A, B)
            return J.strat, J
        return obj, join_map
    raise ValueError(f"unknown bifunctor {op!r}")


@dataclass
class Leibniz:
    map: StratMap
    colimit: Colimit


def leibniz(f: StratMap, g: StratMap, op: str = "x") -> Leibniz:
    """The corner map K.Y  u_{K.X}  L.X  ->  L.Y for monos f: K -> L and g: X -> Y."""
    if not f.map.is_mono() or not g.map.is_mono():
        raise ValueError("the Leibniz construction needs monomorphisms")
    obj, mor = _bifunctor(op)
    KX, pKX = obj(f.dom, g.dom)
    KY, pKY = obj(f.dom, g.cod)
    LX, pLX = obj(f.cod, g.dom)
    LY, pLY = obj(f.cod, g.cod)
    idK, idX = identity_map(f.dom.cx), identity_map(g.dom.cx)
    a = mor(pKX, pKY, idK, g.map)
    b = mor(pKX, pLX, f.map, idX)
    from .shapes import colimit_strat
    D, col = colimit_strat([KX, KY, LX], [(0, 1, a), (0, 2, b)])
    into = [mor(pKX, pLY, f.map, g.map), mor(pKY, pLY, f.map, identity_map(g.cod.cx)),
            mor(pLX, pLY, identity_map(f.cod.cx), g.map)]
    m = col.induced(into, LY.cx)
    if not m.is_mono():
        raise ValueError("corner map is not a monomorphism")
    return Leibniz(check_strat_map(m, D, LY), col)


# ------------------------------------------------------------ gamma

@dataclass
class Gamma:
    map: StratMap          # X <> Y -> X * Y
    diamond: Diamond
    join: Join
    on_tensor: SMap        # (X (x) I) (x) Y -> X * Y


def _gamma_simplex(D: Diamond, J: Join, c: int) -> Simplex:
    inner, outer = D.inner, D.outer
    a, y = outer.pairs[c]
    x = inner.proj1(a)
    e = inner.proj2(a)
    ev = inner.Y.vertex_labels(e)
    n = len(ev) - 1
    j = sum(1 for v in ev if v == 0)
    X, Y = inner.X, outer.Y
    fx = X.apply(x, tuple(range(j))) if j else None
    by = Y.apply(y, tuple(range(j, n + 1))) if j <= n else None
    return J.simplex(fx, by)


def gamma(X: StratSet, Y: StratSet) -> Gamma:
    """The comparison X <> Y -> X * Y: a simplex whose first j vertices lie over 0
    goes to (its first j vertices in X) * (its remaining vertices in Y)."""
    D = diamond_data(X, Y)
    J = Join(X, Y)
    T = D.outer.complex
    on_T = SMap(T, J.complex, [_gamma_simplex(D, J, c) for c in T.cells()])
    errs = on_T.check()
    if errs:
        raise RuntimeError("gamma is not simplicial: " + errs[0])
    maps = [on_T,
            _level(D.inner, D.outer, Product(X.cx, Y.cx), 0).then(on_T),
            _level(D.inner, D.outer, Product(X.cx, Y.cx), 1).then(on_T),
            J.left, J.right]
    m = D.colimit.induced(maps, J.complex)
    bad = marking_violation(m, D.strat, J.strat)
    if bad is not None:
        from .saturation import saturate
        if marking_violation(m, D.strat, saturate(J.strat)) is not None:
            raise RuntimeError(f"gamma does not preserve marks at cell {bad[0]}")
        return Gamma(StratMap(D.strat, saturate(J.strat), m), D, J, on_T)
    return Gamma(StratMap(D.strat, J.strat, m), D, J, on_T)


def gamma_section(n: int, m: int, G: Optional[Gamma] = None) -> SMap:
    """s: Delta[n] * Delta[m] -> Delta[n] <> Delta[m] with s(k) = (k,0,0) and s(l) = (n,1,l)."""
    if G is None:
        G = gamma(delta(n), delta(m))
    J, D = G.join, G.diamond
    T = D.outer.complex

    def vert(lab):
        side, v = lab
        return ((v, 0), 0) if side == 0 else ((n, 1), v)

    out = []
    for c in J.complex.cells():
        labs = J.complex.vertex_labels(J.complex.cell(c))
        s = T.lookup(tuple(vert(x) for x in labs))
        out.append(D.colimit.cocone[0](s))
    return SMap(J.complex, D.strat.cx, out)


def diamond_vertex(G: Gamma, k: int, e: int, l: int) -> int:
    T = G.diamond.outer.complex
    return G.diamond.colimit.cocone[0](T.lookup((((k, e), l),)))[1]


# ------------------------------------------------------------ mapping objects

@dataclass
class MappingObject:
    strat: StratSet
    maps: List[SMap]              # representative map for each cell
    kind: str
    bound: int
    index: Dict[Tuple[Simplex, ...], Simplex] = field(default_factory=dict)  # map -> simplex


def _tensor_with_simplex(m: int, K: StratSet, kind: str, thin: bool):
    D = delta_t(m) if thin else delta(m)
    if kind == "cartesian":
        S, P = product_strat(D, K)
    elif kind == "gray_left":
        S, P = gray_with(D, K)
    elif kind == "gray_right":
        S, P = gray_with(K, D)
    elif kind in ("slash_join", "join"):
        J = Join(D, K)
        S, P = J.strat, J
    else:
        raise ValueError(f"unknown mapping object kind {kind!r}")
    return S, P


def _simplex_op(Ds: Complex, Dd: Complex, u: Tuple[int, ...]) -> SMap:
    return SMap(Ds, Dd, [Dd.lookup(tuple(u[v] for v in Ds.vertex_labels(Ds.cell(c)))) for c in Ds.cells()])


def _functor(kind: str, Ps, Pd, u: Tuple[int, ...], K: Complex) -> SMap:
    """u . K : Delta[r] . K -> Delta[m] . K for an operator u: [r] -> [m]."""
    from .core import product_map
    if kind in ("slash_join", "join"):
        return join_map(Ps, Pd, _simplex_op(Ps.X.cx, Pd.X.cx, u), identity_map(K))
    if kind == "gray_right":
        return product_map(Ps, Pd, identity_map(K), _simplex_op(Ps.Y, Pd.Y, u))
    return product_map(Ps, Pd, _simplex_op(Ps.X, Pd.X, u), identity_map(K))


def mapping_object(K: StratSet, X: StratSet, bound: int, kind: str = "cartesian",
                   fixed: Optional[Callable[[object], Dict[int, Simplex]]] = None) -> MappingObject:
    """Simplices up to ``bound``: stratified maps Delta[m] . K -> X, thin when they
    also preserve the marks of Delta[m]_t . K.  Faces act by precomposition."""
    from .core import surjections
    levels: List[Tuple[StratSet, object, StratSet]] = []
    canon: List[Dict[Tuple[Simplex, ...], Simplex]] = []
    reps: List[SMap] = []
    dims: List[int] = []
    faces: List[Tuple[Simplex, ...]] = []
    thin: List[int] = []
    for m in range(bound + 1):
        S, P = _tensor_with_simplex(m, K, kind, False)
        St, _ = _tensor_with_simplex(m, K, kind, True)
        levels.append((S, P, St))
        table: Dict[Tuple[Simplex, ...], Simplex] = {}
        for r in range(m):
            Sr, Pr, _ = levels[r]
            for c in range(len(dims)):
                if dims[c] != r:
                    continue
                for eta in surjections(m, r):
                    pre = _functor(kind, P, Pr, eta, K.cx)
                    f = pre.then(reps[c])
                    table.setdefault(f.assign, (eta, c))
        fx = fixed(P) if fixed is not None else None
        for f in search_maps(S.cx, X.cx, fixed=fx, accept=strat_accept(S, X)):
            if f.assign in table:
                continue
            cid = len(dims)
            dims.append(m)
            reps.append(f)
            table[f.assign] = (identity(m), cid)
            if m == 0:
                faces.append(())
            else:
                fs = []
                for i in range(m + 1):
                    _, Pd, _ = levels[m - 1]
                    pre = _functor(kind, Pd, P, coface(i, m), K.cx)
                    fs.append(canon[m - 1][pre.then(f).assign])
                faces.append(tuple(fs))
            if m > 0 and marking_violation(f, St, X) is None:
                thin.append(cid)
        canon.append(table)
    # degenerate simplices of lower levels were registered under their canonical names
    cx = Complex(dims, faces)
    index = {k: v for table in canon for k, v in table.items()}
    return MappingObject(StratSet(cx, frozenset(thin)), reps, kind, bound, index)


def hom(C: StratSet, a: int, b: int, bound: int) -> MappingObject:
    """C(a, b): m-simplices are maps Sigma Delta[m] -> C with bottom at a and top at b.

    When C is bistratified a simplex is cartesian if the map sends the marks of
    Sigma(Delta[m]_t) to cartesian simplices.
    """
    from .core import surjections
    reps: List[SMap] = []
    dims: List[int] = []
    faces: List[Tuple[Simplex, ...]] = []
    thin: List[int] = []
    cart: List[int] = []
    canon: List[Dict[Tuple[Simplex, ...], Simplex]] = []
    susps: List[Suspension] = []

    def sig(src: Suspension, dst: Suspension, u) -> SMap:
        return suspension_map(src, dst, _simplex_op(src.product.X, dst.product.X, u))

    for m in range(bound + 1):
        s = suspension_data(delta(m))
        st = suspension(delta_t(m)) if m > 0 else s.strat
        susps.append(s)
        table: Dict[Tuple[Simplex, ...], Simplex] = {}
        for r in range(m):
            for c in range(len(dims)):
                if dims[c] != r:
                    continue
                for eta in surjections(m, r):
                    table.setdefault(sig(s, susps[r], eta).then(reps[c]).assign, (eta, c))
        fixed = {s.bottom: ((0,), a), s.top: ((0,), b)}
        for f in search_maps(s.strat.cx, C.cx, fixed=fixed, accept=strat_accept(s.strat, C)):
            if f.assign in table:
                continue
            cid = len(dims)
            dims.append(m)
            reps.append(f)
            table[f.assign] = (identity(m), cid)
            if m == 0:
                faces.append(())
            else:
                faces.append(tuple(canon[m - 1][sig(susps[m - 1], s, coface(i, m)).then(f).assign]
                                   for i in range(m + 1)))
            if m > 0 and marking_violation(f, st, C) is None:
                thin.append(cid)
            if m > 0 and C.c is not None and all(C.cartesian(f.assign[x]) for x in st.t):
                cart.append(cid)
        canon.append(table)
    cx = Complex(dims, faces)
    S = StratSet(cx, frozenset(thin)) if C.c is None else StratSet(cx, frozenset(thin), frozenset(cart))
    index = {k: v for table in canon for k, v in table.items()}
    return MappingObject(S, reps, "hom", bound, index)
