"""Stratified and bistratified simplicial sets and the catalog of named shapes."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Dict, FrozenSet, Iterable, Optional, Sequence, Tuple

from .core import (Colimit, Complex, Product, SMap, Simplex, boundary, colimit, horn_complex, search_maps,
                   standard_simplex)


@dataclass(frozen=True)
class StratSet:
    """A complex with thin cells ``t`` and, for bistratified sets, cartesian cells ``c``.

    Only nondegenerate cells of positive dimension are stored.  A simplex is thin
    when it is degenerate or its cell is in ``t``; vertices are never thin.
    """

    cx: Complex
    t: FrozenSet[int] = frozenset()
    c: Optional[FrozenSet[int]] = None

    def __post_init__(self):
        object.__setattr__(self, "t", frozenset(self.t))
        if self.c is not None:
            object.__setattr__(self, "c", frozenset(self.c) | self.t)
        for x in self.t | (self.c or frozenset()):
            if not 0 <= x < len(self.cx) or self.cx.dims[x] == 0:
                raise ValueError(f"marked cell {x} is not a positive-dimensional cell")

    @property
    def bistratified(self) -> bool:
        return self.c is not None

    @property
    def cart(self) -> FrozenSet[int]:
        return self.t if self.c is None else self.c

    def thin(self, s: Simplex) -> bool:
        if len(s[0]) == 1:
            return False
        return Complex.is_degenerate(s) or s[1] in self.t

    def cartesian(self, s: Simplex) -> bool:
        if len(s[0]) == 1:
            return False
        return Complex.is_degenerate(s) or s[1] in self.cart

    def with_marks(self, t: Iterable[int] = (), c: Iterable[int] = ()) -> "StratSet":
        t2 = self.t | frozenset(t)
        if self.c is None and not c:
            return StratSet(self.cx, t2)
        return StratSet(self.cx, t2, self.cart | frozenset(c) | t2)

    def as_bistratified(self) -> "StratSet":
        return self if self.c is not None else StratSet(self.cx, self.t, self.t)

    def underlying(self) -> "StratSet":
        return StratSet(self.cx, self.t)

    def summary(self) -> Dict:
        out = {"counts": list(self.cx.counts()),
               "thin": [sum(1 for x in self.t if self.cx.dims[x] == d) for d in range(self.cx.dim_bound + 1)]}
        if self.c is not None:
            out["cartesian"] = [sum(1 for x in self.c if self.cx.dims[x] == d) for d in range(self.cx.dim_bound + 1)]
        return out


def plain(X: Complex) -> StratSet:
    return StratSet(X, frozenset())


def full_marking(X: Complex) -> FrozenSet[int]:
    return frozenset(c for c in X.cells() if X.dims[c] > 0)


# ------------------------------------------------------------ maps

@dataclass(frozen=True)
class StratMap:
    dom: StratSet
    cod: StratSet
    map: SMap

    def __call__(self, s: Simplex) -> Simplex:
        return self.map(s)

    def then(self, g: "StratMap") -> "StratMap":
        return StratMap(self.dom, g.cod, self.map.then(g.map))


class MarkingError(ValueError):
    def __init__(self, cell: int, image: Simplex, kind: str):
        super().__init__(f"{kind} cell {cell} is sent to {image}, which is not {kind}")
        self.cell, self.image, self.kind = cell, image, kind


def marking_violation(f: SMap, dom: StratSet, cod: StratSet) -> Optional[Tuple[int, Simplex, str]]:
    for x in sorted(dom.t):
        if not cod.thin(f.assign[x]):
            return x, f.assign[x], "thin"
    if dom.c is not None:
        for x in sorted(dom.c):
            if not cod.cartesian(f.assign[x]):
                return x, f.assign[x], "cartesian"
    return None


def check_strat_map(f: SMap, dom: StratSet, cod: StratSet) -> StratMap:
    """Wrap ``f`` as a stratified map, reporting the first cell whose mark is not preserved."""
    errs = f.check()
    if errs:
        raise ValueError(errs[0])
    bad = marking_violation(f, dom, cod)
    if bad is not None:
        raise MarkingError(*bad)
    return StratMap(dom, cod, f)


def is_regular(i: StratMap) -> bool:
    """Mono reflecting marks: a simplex is thin (cartesian) iff its image is."""
    if not i.map.is_mono():
        raise ValueError("not a monomorphism")
    for x in i.dom.cx.cells():
        if i.dom.cx.dims[x] == 0:
            continue
        img = i.map.assign[x]
        if (x in i.dom.t) != i.cod.thin(img):
            return False
        if (i.dom.c is not None or i.cod.c is not None) and (x in i.dom.cart) != i.cod.cartesian(img):
            return False
    return True


def is_entire(i: StratMap) -> bool:
    if not i.map.is_mono():
        raise ValueError("not a monomorphism")
    return i.map.is_iso()


def strat_accept(K: StratSet, X: StratSet, reflect: bool = False) -> Callable[[int, Simplex], bool]:
    """Candidate filter for map search: marks must be preserved (and reflected if asked)."""
    kc = K.cart if (K.c is not None) else frozenset()
    check_c = K.c is not None and X.c is not None

    def accept(c: int, s: Simplex) -> bool:
        if c in K.t and not X.thin(s):
            return False
        if check_c and c in kc and not X.cartesian(s):
            return False
        if reflect:
            if K.cx.dims[c] > 0 and (c in K.t) != X.thin(s):
                return False
            if (K.c is not None or X.c is not None) and K.cx.dims[c] > 0 and (c in K.cart) != X.cartesian(s):
                return False
        return True

    return accept


def strat_maps(K: StratSet, X: StratSet, fixed: Optional[Dict[int, Simplex]] = None, limit: Optional[int] = None):
    return search_maps(K.cx, X.cx, fixed=fixed, accept=strat_accept(K, X), limit=limit)


def find_strat_iso(X: StratSet, Y: StratSet) -> Optional[SMap]:
    """Isomorphism of underlying complexes matching thin (and cartesian) cells exactly."""
    if X.cx.counts() != Y.cx.counts() or len(X.t) != len(Y.t) or len(X.cart) != len(Y.cart):
        return None
    for f in search_maps(X.cx, Y.cx, injective=True, accept=strat_accept(X, Y, reflect=True), limit=1):
        return f
    return None


# ------------------------------------------------------------ marked colimits

def push_marks(col: Colimit, marks: Sequence[Iterable[int]]) -> FrozenSet[int]:
    out = set()
    for o, ms in enumerate(marks):
        f = col.cocone[o]
        for x in ms:
            eta, c = f.assign[x]
            if not Complex.is_degenerate((eta, c)) and len(eta) > 1:
                out.add(c)
    return frozenset(out)


def colimit_strat(objects: Sequence[StratSet], arrows: Sequence[Tuple[int, int, SMap]]) -> Tuple[StratSet, Colimit]:
    """Colimit of stratified sets: underlying colimit with the union of the image marks."""
    col = colimit([o.cx for o in objects], arrows)
    t = push_marks(col, [o.t for o in objects])
    if any(o.c is not None for o in objects):
        c = push_marks(col, [o.cart for o in objects])
        return StratSet(col.complex, t, c | t), col
    return StratSet(col.complex, t), col


# ------------------------------------------------------------ the catalog

def _cells_with(X: Complex, pred: Callable[[Tuple[int, ...]], bool]) -> FrozenSet[int]:
    return frozenset(c for c in X.cells() if X.dims[c] > 0 and pred(X.vertex_labels(X.cell(c))))


def _core(n: int, k: int) -> set:
    return {k - 1, k, k + 1} & set(range(n + 1))


def _face(X: Complex, n: int, i: int) -> Optional[int]:
    if not 0 <= i <= n:
        return None
    return X.lookup(tuple(j for j in range(n + 1) if j != i))[1]


@lru_cache(maxsize=64)
def delta(n: int) -> StratSet:
    return plain(standard_simplex(n))


@lru_cache(maxsize=64)
def delta_t(n: int) -> StratSet:
    X = standard_simplex(n)
    return StratSet(X, frozenset(X.cells(n)) if n > 0 else frozenset())


def delta_k(n: int, k: int) -> StratSet:
    """Simplices containing {k-1,k,k+1} in [n] are thin."""
    _check_k(n, k)
    X = standard_simplex(n)
    core = _core(n, k)
    return StratSet(X, _cells_with(X, lambda v: core <= set(v)))


def delta_k_prime(n: int, k: int) -> StratSet:
    base = delta_k(n, k)
    if n < 2:
        raise ValueError("thinness extensions need n >= 2")
    extra = [f for f in (_face(base.cx, n, k - 1), _face(base.cx, n, k + 1)) if f is not None]
    return base.with_marks(extra)


def delta_k_dprime(n: int, k: int) -> StratSet:
    base = delta_k_prime(n, k)
    return base.with_marks([_face(base.cx, n, k)])


def eq3() -> StratSet:
    """Delta[3] with the top cell and the edges [0,2], [1,3] thin."""
    X = standard_simplex(3)
    return StratSet(X, frozenset([X.lookup((0, 2))[1], X.lookup((1, 3))[1], X.lookup((0, 1, 2, 3))[1]]))


def sharp(n: int) -> StratSet:
    X = standard_simplex(n)
    return StratSet(X, full_marking(X))


def restrict(Y: StratSet, inc: SMap, X: Complex) -> StratSet:
    """Regular sub-object: marks pulled back along a mono."""
    t = frozenset(x for x in X.cells() if X.dims[x] > 0 and Y.thin(inc.assign[x]))
    if Y.c is None:
        return StratSet(X, t)
    c = frozenset(x for x in X.cells() if X.dims[x] > 0 and Y.cartesian(inc.assign[x]))
    return StratSet(X, t, c | t)


def inclusion_by_labels(X: Complex, Y: Complex) -> SMap:
    return SMap(X, Y, [Y.lookup(X.vertex_labels(X.cell(c))) for c in X.cells()])


def horn(n: int, k: int, ambient: Optional[StratSet] = None) -> Tuple[StratSet, StratSet, SMap]:
    """(Lambda^k[n], Delta^k[n], inclusion) with the regular marking."""
    target = ambient if ambient is not None else delta_k(n, k)
    H = horn_complex(n, k)
    inc = inclusion_by_labels(H, target.cx)
    return restrict(target, inc, H), target, inc


def delta_c(n: int) -> StratSet:
    X = standard_simplex(n)
    return StratSet(X, frozenset(), frozenset(X.cells(n)) if n > 0 else frozenset())


def cart_horn_0(n: int) -> StratSet:
    X = standard_simplex(n)
    return StratSet(X, frozenset(), _cells_with(X, lambda v: {0, 1} <= set(v)))


def cart_horn_n(n: int) -> StratSet:
    X = standard_simplex(n)
    return StratSet(X, frozenset(), _cells_with(X, lambda v: {n - 1, n} <= set(v)))


def cart_thin(n: int, k: int) -> StratSet:
    """Delta^k[n] with the faces d_{k-1}, d_{k+1} cartesian; defined for 0 < k < n."""
    if not 0 < k < n:
        raise ValueError(f"cartesian thinness needs 0 < k < n, got n={n}, k={k}")
    base = delta_k(n, k)
    extra = [f for f in (_face(base.cx, n, k - 1), _face(base.cx, n, k + 1)) if f is not None]
    return StratSet(base.cx, base.t, base.t | frozenset(extra))


def cart_thin2(n: int, k: int) -> StratSet:
    base = cart_thin(n, k)
    return StratSet(base.cx, base.t, base.cart | frozenset([_face(base.cx, n, k)]))


def _check_k(n: int, k: int) -> None:
    if n < 1 or not 0 <= k <= n:
        raise ValueError(f"parameters out of range: n={n}, k={k}")


def boundary_set(n: int) -> StratSet:
    return plain(boundary(n))


def truncate(X: StratSet, n: int) -> StratSet:
    """Mark every cell of dimension >= n."""
    if n < 1:
        raise ValueError("truncation level must be >= 1")
    extra = frozenset(c for c in X.cx.cells() if X.cx.dims[c] >= n)
    return X.with_marks(extra)


# ------------------------------------------------------------ products of marked sets

def product_strat(X: StratSet, Y: StratSet) -> Tuple[StratSet, Product]:
    """Cartesian product with componentwise marks."""
    P = Product(X.cx, Y.cx)
    t = frozenset(i for i, (a, b) in enumerate(P.pairs) if len(a[0]) > 1 and X.thin(a) and Y.thin(b))
    if X.c is None and Y.c is None:
        return StratSet(P.complex, t), P
    c = frozenset(i for i, (a, b) in enumerate(P.pairs) if len(a[0]) > 1 and X.cartesian(a) and Y.cartesian(b))
    return StratSet(P.complex, t, c | t), P


CORNER_VARIANTS = ("plain", "c", "t")


def cartesian_corner(n: int, m: int, variant: str = "plain") -> Tuple[StratSet, StratSet]:
    """Delta[n]_c x dDelta[m]  u  Delta[n] x Y  inside  Delta[n]_c x Y.

    Y is Delta[m], Delta[m]_c or Delta[m]_t.  Returns (union, target) on the
    same underlying complex.
    """
    Y = {"plain": delta(m), "c": delta_c(m) if m > 0 else delta(0), "t": delta_t(m) if m > 0 else delta(0)}[variant]
    Y = Y.as_bistratified()
    Xc, X = delta_c(n) if n > 0 else delta(0).as_bistratified(), delta(n).as_bistratified()
    target, P = product_strat(Xc, Y)
    t, c = set(), set()
    for i, (a, b) in enumerate(P.pairs):
        if len(a[0]) == 1:
            continue
        # a simplex of Y lies in the boundary when it misses a vertex
        edge = len(set(Y.cx.vertices(b))) <= m
        if Y.thin(b) and (X.thin(a) or edge and Xc.thin(a)):
            t.add(i)
        if Y.cartesian(b) and (X.cartesian(a) or edge and Xc.cartesian(a)):
            c.add(i)
    return StratSet(P.complex, frozenset(t), frozenset(c)), target


def oslash(n: int, k: int, K: StratSet, anti: bool = False, closure: bool = True,
           search_dim: Optional[int] = None) -> Tuple[StratSet, Product]:
    """The marked sets Delta^k[n] (/) K and Delta^k[n] (\\) K on Delta[n] x K.

    Generators are the pairs (v, s^p x) (resp. (v, s^{p-1} x)) whose vertex
    sequence v has the prescribed pattern around position p; the marking is
    their closure unless ``closure`` is False.
    """
    _check_k(n, k)
    P = Product(standard_simplex(n), K.cx)
    D = P.complex
    gens = set()
    for m in range(1, D.dim_bound + 1):
        for v in P.X.simplices(m):
            vv = P.X.vertex_labels(v)
            for x in K.cx.simplices(m - 1):
                for p in range(m):
                    if anti:
                        q = p + 1  # (v, s^{q-1} x) with the pattern centred at q
                        ok = _anti_pattern(vv, q, n, k)
                    else:
                        ok = _pattern(vv, p, n, k)
                    if not ok:
                        continue
                    sx = K.cx.apply(x, _sdeg(p, m - 1))
                    eta, c = P.pair(v, sx)
                    if not Complex.is_degenerate((eta, c)):
                        gens.add(c)
    S = StratSet(D, frozenset(gens))
    if closure:
        from .saturation import saturate_marked
        S = saturate_marked(S, search_dim if search_dim is not None else D.dim_bound + 1)
    return S, P


def _sdeg(p: int, r: int):
    from .core import codegeneracy
    return codegeneracy(p, r)


def _pattern(v: Tuple[int, ...], p: int, n: int, k: int) -> bool:
    m = len(v) - 1
    if k == 0:
        return p + 1 <= m and v[p] == 0 and v[p + 1] == 1
    if p - 1 < 0 or p + 1 > m:
        return False
    trip = (v[p - 1], v[p], v[p + 1])
    return trip in ((k - 1, k, k + 1), (k, k, k + 1))


def _anti_pattern(v: Tuple[int, ...], p: int, n: int, k: int) -> bool:
    m = len(v) - 1
    if k == n:
        return p - 1 >= 0 and p <= m and v[p - 1] == n - 1 and v[p] == n
    if p - 1 < 0 or p + 1 > m:
        return False
    trip = (v[p - 1], v[p], v[p + 1])
    return trip in ((k - 1, k, k + 1), (k - 1, k, k))


# ------------------------------------------------------------ trichotomy

@dataclass(frozen=True)
class Classified:
    kind: str  # "domain", "type1", "type2"
    p: Optional[int] = None
    v: Optional[Tuple[int, ...]] = None        # type1: v'
    x: Optional[Tuple] = None                  # vertex tuple of the L component
    w: Optional[Tuple[Tuple[int, ...], Tuple]] = None  # type2: w' = (u, x')


def w_p(v: Sequence[int], p: int, k: int) -> Tuple[int, ...]:
    """The sequence v^p: k+1 on the positions (p, b] of the k-block of v."""
    a, b = _block(v, k)
    return tuple(v[q] if q <= p or q > b else k + 1 for q in range(len(v)))


def wbar_p(v: Sequence[int], x: Sequence, p: int, k: int) -> Tuple[Tuple[int, ...], Tuple]:
    """The (m+1)-simplex (vbar^p, s^p x) as vertex sequences."""
    a, b = _block(v, k)
    if not a < p <= b:
        raise ValueError("p must lie in ]a, b]")
    m = len(v) - 1
    vb = tuple(v[q] if q <= p else (k + 1 if q <= b + 1 else v[q - 1]) for q in range(m + 2))
    xs = tuple(x[q] if q <= p else x[q - 1] for q in range(m + 2))
    return vb, xs


def _block(v: Sequence[int], k: int) -> Tuple[int, int]:
    idx = [q for q, x in enumerate(v) if x == k]
    if not idx:
        raise ValueError("k does not occur in v")
    return idx[0] - 1, idx[-1]


def _nondeg_pair(v: Sequence, x: Sequence) -> bool:
    return all((v[q], x[q]) != (v[q + 1], x[q + 1]) for q in range(len(v) - 1))


def trichotomy_classify(v: Sequence[int], x: Sequence, n: int, k: int,
                        in_K: Callable[[Tuple], bool]) -> Classified:
    """Classify the nondegenerate simplex w = (v, x) of Delta[n] x L.

    ``v`` and ``x`` are vertex sequences; ``in_K(x)`` tells whether x lies in K.
    The domain is Lambda^k[n] x L  union  Delta[n] x K.
    """
    v, x = tuple(v), tuple(x)
    if not 0 <= k < n:
        raise ValueError("need 0 <= k < n")
    if not _nondeg_pair(v, x):
        raise ValueError("w is degenerate")
    if not (set(range(n + 1)) - {k}) <= set(v) or in_K(x):
        return Classified("domain")
    if k not in v:
        vp = tuple(k if y == k + 1 else y for y in v)
        q = min(i for i, y in enumerate(v) if y == k + 1)
        return Classified("type1", p=q - 1, v=vp, x=x)
    p = max(i for i, y in enumerate(v) if y == k)
    if x[p] != x[p + 1]:
        vp = tuple(k if y == k + 1 else y for y in v)
        return Classified("type1", p=p, v=vp, x=x)
    u = v[:p + 1] + tuple(k if y == k + 1 else y for y in v[p + 2:])
    xd = x[:p + 1] + x[p + 2:]
    return Classified("type2", p=p, w=(u, xd))


def reconstruct(cl: Classified, k: int) -> Tuple[Tuple[int, ...], Tuple]:
    if cl.kind == "type1":
        return w_p(cl.v, cl.p, k), cl.x
    if cl.kind == "type2":
        u, xd = cl.w
        return wbar_p(u, xd, cl.p, k)
    raise ValueError("domain simplices carry no witness")


# ------------------------------------------------------------ name dispatch

SHAPE_NAMES = ("delta", "delta_t", "delta_k", "delta_k_prime", "delta_k_dprime", "eq3", "sharp", "horn",
               "delta_c", "cart_horn_0", "cart_horn_n", "cart_thin", "cart_thin2", "oslash", "anti_oslash",
               "globe", "globe_boundary", "globe_t")


def shape(name: str, n: Optional[int] = None, k: Optional[int] = None, K: Optional[StratSet] = None) -> StratSet:
    """Construct a catalog shape by name."""
    if name == "delta":
        return delta(n)
    if name == "delta_t":
        return delta_t(n)
    if name == "delta_k":
        return delta_k(n, k)
    if name == "delta_k_prime":
        return delta_k_prime(n, k)
    if name == "delta_k_dprime":
        return delta_k_dprime(n, k)
    if name == "eq3":
        return eq3()
    if name == "sharp":
        return sharp(n)
    if name == "horn":
        return horn(n, k)[0]
    if name == "delta_c":
        return delta_c(n)
    if name == "cart_horn_0":
        return cart_horn_0(n)
    if name == "cart_horn_n":
        return cart_horn_n(n)
    if name == "cart_thin":
        return cart_thin(n, k)
    if name == "cart_thin2":
        return cart_thin2(n, k)
    if name in ("oslash", "anti_oslash"):
        return oslash(n, k, K if K is not None else delta(0), anti=(name == "anti_oslash"))[0]
    if name in ("globe", "globe_boundary", "globe_t"):
        from . import homotopy
        return {"globe": homotopy.globe, "globe_boundary": homotopy.globe_boundary, "globe_t": homotopy.globe_t}[name](n)
    raise ValueError(f"unknown shape {name!r}")
