"""The op, co and full dualities.

op reverses the vertex order of every simplex.  co is the colimit-preserving
extension of n |-> Delta[n]_co, the (n+1)-fold co-join of the point with
itself; its cosimplicial structure comes from the monoid structure of
T = - *co Delta[0] (unit: the inclusion of X, product: (i, j, x) |-> (i v j, x)).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .constructions import Diamond, diamond_data
from .core import Complex, SMap, Simplex, decompose, identity_map, reverse
from .shapes import StratSet, colimit_strat, delta, truncate


# ------------------------------------------------------------ op

def op_complex(X: Complex) -> Complex:
    faces = []
    for c in X.cells():
        d = X.dims[c]
        if d == 0:
            faces.append(())
            continue
        faces.append(tuple((reverse(eta, max(eta)), b) for (eta, b) in reversed(X.faces[c])))
    return Complex(X.dims, faces, labels=X.labels)


def op_simplex(s: Simplex) -> Simplex:
    eta, c = s
    return reverse(eta, max(eta)), c


def op_dual(X: StratSet) -> StratSet:
    """Same cells and marks; face i becomes face d-i."""
    return StratSet(op_complex(X.cx), X.t, X.c)


def op_map(f: SMap, dom: Optional[Complex] = None, cod: Optional[Complex] = None) -> SMap:
    dom = dom or op_complex(f.dom)
    cod = cod or op_complex(f.cod)
    return SMap(dom, cod, [op_simplex(s) for s in f.assign])


# ------------------------------------------------------------ the monad T = - *co Delta[0]

@dataclass
class TObject:
    """T(X) together with the data needed to map in and out of it."""
    X: StratSet
    strat: StratSet
    data: Diamond

    @property
    def cx(self) -> Complex:
        return self.strat.cx

    def unit(self) -> SMap:
        return self.data.colimit.cocone[3]

    def apex(self) -> int:
        return self.data.colimit.cocone[4].assign[0][1]

    def coords(self, s: Simplex) -> Tuple[Tuple[int, ...], Optional[Simplex]]:
        """(interval coordinates, X-simplex or None at the apex) of a simplex of T(X)."""
        col = self.data.colimit
        o, t = col.lift(s)
        n = len(s[0])
        if o == 0:
            inner, outer = self.data.inner, self.data.outer
            a, x = outer.pairs[t[1]]
            a = outer.X.apply(a, t[0])
            x = outer.Y.apply(x, t[0])
            i = inner.Y.vertex_labels(inner.proj2(a))
            return i, x
        if o == 3:
            return (0,) * n, t
        if o == 4:
            return (1,) * n, None
        raise AssertionError("level simplices are always represented in the tensor")

    def simplex(self, i: Tuple[int, ...], x: Optional[Simplex]) -> Simplex:
        """Inverse of :meth:`coords`."""
        n = len(i)
        if all(v == 1 for v in i):
            return (0,) * n, self.apex()
        inner, outer = self.data.inner, self.data.outer
        I = inner.Y
        e = I.lookup(i)
        pt = ((0,) * n, 0)
        return self.data.colimit.cocone[0](outer.pair(inner.pair(pt, e), x))


def T_of(X: StratSet) -> TObject:
    D = diamond_data(X, delta(0), co=True)
    return TObject(X, D.strat, D)


def T_map(A: TObject, B: TObject, f: SMap) -> SMap:
    """T(f): T(A.X) -> T(B.X)."""
    out = []
    for c in A.cx.cells():
        i, x = A.coords(A.cx.cell(c))
        out.append(B.simplex(i, None if x is None else f(x)))
    return SMap(A.cx, B.cx, out)


def T_mult(TT: TObject, T1: TObject) -> SMap:
    """mu: T(T(X)) -> T(X), (j, (i, x)) |-> (i v j, x).  ``TT.X`` must be ``T1.strat``."""
    out = []
    for c in TT.cx.cells():
        j, s = TT.coords(TT.cx.cell(c))
        if s is None:
            out.append(T1.simplex(j, None))
            continue
        i, x = T1.coords(s)
        out.append(T1.simplex(tuple(max(a, b) for a, b in zip(i, j)), x))
    return SMap(TT.cx, T1.cx, out)


# ------------------------------------------------------------ the cosimplicial object

class CosimplicialCo:
    """Delta[n]_co for n <= bound with cofaces and codegeneracies."""

    def __init__(self, bound: int):
        if bound < 0:
            raise ValueError("bound must be >= 0")
        self.bound = bound
        empty = StratSet(Complex.empty())
        self.tower: List[TObject] = []   # tower[n] = T^{n+1}(empty)
        X = empty
        for _ in range(bound + 2):
            t = T_of(X)
            self.tower.append(t)
            X = t.strat
        self._d: Dict[Tuple[int, int], SMap] = {}
        self._s: Dict[Tuple[int, int], SMap] = {}

    def obj(self, n: int) -> StratSet:
        if not 0 <= n <= self.bound:
            raise ValueError(f"Delta[{n}]_co is beyond the configured bound {self.bound}")
        return self.tower[n].strat

    def coface(self, i: int, n: int) -> SMap:
        """d^i : Delta[n-1]_co -> Delta[n]_co, that is T^{n-i} applied to the unit at T^i(empty)."""
        if n < 1 or n > self.bound or not 0 <= i <= n:
            raise ValueError("coface out of range")
        key = (i, n)
        if key not in self._d:
            f = self.tower[i].unit()
            for r in range(n - i):
                f = T_map(self.tower[i + r], self.tower[i + r + 1], f)
            self._d[key] = f
        return self._d[key]

    def codegeneracy(self, i: int, n: int) -> SMap:
        """s^i : Delta[n+1]_co -> Delta[n]_co."""
        if not 0 <= i <= n or n + 1 > self.bound:
            raise ValueError("codegeneracy out of range")
        key = (i, n)
        if key not in self._s:
            f = T_mult(self.tower[i + 1], self.tower[i])
            for r in range(n - i):
                f = T_map(self.tower[i + 2 + r], self.tower[i + 1 + r], f)
            self._s[key] = f
        return self._s[key]

    def operator(self, u: Tuple[int, ...], n: int) -> SMap:
        """co(u) : Delta[m]_co -> Delta[n]_co for a monotone u : [m] -> [n]."""
        word, m = decompose(u, n)
        f = identity_map(self.obj(m).cx)
        for (kind, i, rank) in reversed(word):
            g = self.coface(i, rank) if kind == "d" else self.codegeneracy(i, rank)
            f = f.then(g)
        return f

    def check_identities(self) -> List[str]:
        errs = []
        b = self.bound
        d, s = self.coface, self.codegeneracy
        for n in range(2, b + 1):
            for j in range(n + 1):
                for i in range(j):
                    if d(i, n - 1).then(d(j, n)) != d(j - 1, n - 1).then(d(i, n)):
                        errs.append(f"d{j}d{i} != d{i}d{j - 1} at rank {n}")
        for n in range(0, b):
            for j in range(n + 1):
                for i in range(j + 1):
                    if n + 2 <= b and s(j + 1, n + 1).then(s(i, n)) != s(i, n + 1).then(s(j, n)):
                        errs.append(f"s{i}s{j+1} != s{j}s{i} at rank {n}")
        for n in range(0, b):
            for j in range(n + 1):
                for i in range(n + 2):
                    lhs = d(i, n + 1).then(s(j, n))
                    if i == j or i == j + 1:
                        ok = lhs == identity_map(self.obj(n).cx)
                    elif i < j:
                        ok = n >= 1 and lhs == s(j - 1, n - 1).then(d(i, n))
                    else:
                        ok = n >= 1 and lhs == s(j, n - 1).then(d(i - 1, n))
                    if not ok:
                        errs.append(f"s{j}d{i} identity fails at rank {n}")
        return errs


_CO: Dict[int, CosimplicialCo] = {}


def cosimplicial(bound: int) -> CosimplicialCo:
    hit = _CO.get(bound)
    if hit is None:
        hit = _CO[bound] = CosimplicialCo(bound)
    return hit


# ------------------------------------------------------------ co and full duals

def co_dual(X: StratSet, co_bound: Optional[int] = None, saturate: bool = True,
            search_dim: Optional[int] = None) -> StratSet:
    """Glue one Delta[d]_co per cell (its truncation tau_d when the cell is thin)."""
    D = X.cx.dim_bound
    bound = co_bound if co_bound is not None else max(D, 0)
    if D > bound:
        raise ValueError(f"dimension {D} exceeds the co bound {bound}")
    C = cosimplicial(max(bound, 1))
    objects: List[StratSet] = []
    arrows = []
    where: Dict[int, int] = {}
    for c in X.cx.cells():
        d = X.cx.dims[c]
        o = C.obj(d)
        if c in X.t:
            o = truncate(o, d)
        where[c] = len(objects)
        objects.append(o)
    for c in X.cx.cells():
        d = X.cx.dims[c]
        for i, (eta, b) in enumerate(X.cx.faces[c]):
            k = len(objects)
            objects.append(C.obj(d - 1))
            arrows.append((k, where[c], C.coface(i, d)))
            arrows.append((k, where[b], C.operator(eta, X.cx.dims[b])))
    S, _ = colimit_strat(objects, arrows)
    if saturate:
        from .saturation import saturate_marked
        S = saturate_marked(S, search_dim if search_dim is not None else S.cx.dim_bound + 1)
    return S


def full_dual(X: StratSet, co_bound: Optional[int] = None, saturate: bool = True) -> StratSet:
    return op_dual(co_dual(X, co_bound, saturate))
