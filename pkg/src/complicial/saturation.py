"""Marking closure as forward chaining over ground Horn clauses.

Each elementary entire extension K -> L is turned, for every simplex of X that
could carry it, into clauses ``body -> head``: if all simplices in the body are
marked then the head becomes marked.  Clauses are built once per complex and
search dimension and then run to a fixpoint with per-clause counters.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .core import Complex, Simplex, degeneracy_indices, surjections
from .shapes import StratSet

RULES = ("thinness", "saturation", "cart_thinness")


@dataclass(frozen=True)
class ClosureConfig:
    search_dim: int
    rules: FrozenSet[str] = frozenset(RULES)

    def __post_init__(self):
        bad = set(self.rules) - set(RULES)
        if bad:
            raise ValueError(f"unknown closure rules {sorted(bad)}")


@dataclass(frozen=True)
class Clause:
    body: Tuple[int, ...]
    head: int
    rule: str
    witness: Simplex
    param: Tuple[int, ...]


@dataclass
class ClosureReport:
    result: StratSet
    search_dim: int
    added: List[Tuple[str, Simplex, Tuple[int, ...], str, int]] = field(default_factory=list)
    complete: bool = False  # closure above search_dim is never explored


def _config(cfg) -> ClosureConfig:
    if isinstance(cfg, ClosureConfig):
        return cfg
    return ClosureConfig(int(cfg))


# atoms: t(c) is c, cart(c) is c + N


def _sub(X: Complex, s: Simplex, S: Sequence[int]) -> Simplex:
    return X.apply(s, tuple(S))


def _thin_pattern(n: int, k: int) -> Tuple[List[Tuple[int, ...]], List[Tuple[int, ...]], Tuple[int, ...]]:
    """Vertex subsets marked in Delta^k[n] and the two side faces added by the prime."""
    core = {k - 1, k, k + 1} & set(range(n + 1))
    rest = [j for j in range(n + 1) if j not in core]
    inner = []
    for r in range(len(rest) + 1):
        for extra in combinations(rest, r):
            inner.append(tuple(sorted(core | set(extra))))
    sides = [tuple(j for j in range(n + 1) if j != i) for i in (k - 1, k + 1) if 0 <= i <= n]
    head = tuple(j for j in range(n + 1) if j != k)
    return inner, sides, head


def _sat_pattern(n: int, m: int) -> Tuple[List[Tuple[int, ...]], List[Tuple[int, ...]]]:
    """Body and head subsets for the saturation extension with outer blocks of n+1 and m+1 vertices."""
    front = list(range(n + 1))
    mid = [n + 1 + j for j in range(4)]
    back = [n + 5 + j for j in range(m + 1)]
    fronts = [c for r in range(len(front) + 1) for c in combinations(front, r)]
    backs = [c for r in range(len(back) + 1) for c in combinations(back, r)]
    thin_mid = [(0, 2), (1, 3), (0, 1, 2, 3)]
    body, head = [], []
    for r in range(2, 5):
        for S2 in combinations(range(4), r):
            ms = tuple(mid[j] for j in S2)
            for a in fronts:
                for b in backs:
                    (body if S2 in thin_mid else head).append(a + ms + b)
    return body, head


def _factor(eta: Tuple[int, ...], S: Sequence[int]) -> Optional[Tuple[int, ...]]:
    """Image set of eta on S, or None when eta o S is degenerate."""
    out = []
    prev = -1
    for x in S:
        v = eta[x]
        if v == prev:
            return None
        out.append(v)
        prev = v
    return tuple(out)


class _Builder:
    def __init__(self, X: Complex, search_dim: int, rules: FrozenSet[str], bimarked: bool):
        self.X = X
        self.N = len(X)
        self.clauses: List[Clause] = []
        self.seen = set()
        self.d = search_dim
        self.rules = rules
        self.bimarked = bimarked
        self.memo: Dict = {}

    def atom(self, s: Simplex, cart: bool) -> Optional[int]:
        """Atom for a simplex; None when it is automatically marked; -1 for a vertex."""
        if len(s[0]) == 1:
            return -1
        if Complex.is_degenerate(s):
            return None
        return s[1] + self.N if cart else s[1]

    def add(self, body: Iterable[Optional[int]], heads: Iterable[Optional[int]], rule: str, w: Simplex, param):
        b = []
        for a in body:
            if a == -1:
                return
            if a is not None:
                b.append(a)
        bt = tuple(sorted(set(b)))
        for h in heads:
            if h is None or h == -1 or h in bt:
                continue
            key = (bt, h)
            if key in self.seen:
                continue
            self.seen.add(key)
            self.clauses.append(Clause(bt, h, rule, w, tuple(param)))

    def face_atom(self, c: int, i: Tuple[int, ...]) -> Optional[int]:
        key = (c, i)
        hit = self.memo.get(key, 0)
        if hit != 0:
            return hit
        eta, c2 = self.X.face_inj(c, i)
        a = -1 if len(i) == 1 else (None if Complex.is_degenerate((eta, c2)) else c2)
        self.memo[key] = a
        return a

    def _saturation(self, d: int, n: int, m: int) -> None:
        X = self.X
        body, head = _sat_pattern(n, m)
        lo, hi = n + 1, n + 4  # middle block positions
        for k in range(min(d, X.dim_bound) + 1):
            cells = list(X.cells(k))
            if not cells:
                continue
            for eta in surjections(d, k):
                degs = degeneracy_indices(eta)
                if degs and not any(lo - 1 <= j <= hi for j in degs):
                    continue
                fb = [_factor(eta, S) for S in body]
                fh = [_factor(eta, S) for S in head]
                for c in cells:
                    self.add([None if i is None else self.face_atom(c, i) for i in fb],
                             [None if i is None else self.face_atom(c, i) for i in fh],
                             "saturation", (eta, c), (n, m))

    def build(self) -> List[Clause]:
        X = self.X
        top = min(self.d, X.dim_bound)
        for n in range(2, top + 1):
            cells = [X.cell(c) for c in X.cells(n)]
            if not cells:
                continue
            for k in range(n + 1):
                inner, sides, head = _thin_pattern(n, k)
                for s in cells:
                    t_inner = [self.atom(_sub(X, s, S), False) for S in inner]
                    if "thinness" in self.rules:
                        self.add(t_inner + [self.atom(_sub(X, s, S), False) for S in sides],
                                 [self.atom(_sub(X, s, head), False)], "thinness", s, (n, k))
                    if self.bimarked and "cart_thinness" in self.rules and 0 < k < n:
                        self.add(t_inner + [self.atom(_sub(X, s, S), True) for S in sides],
                                 [self.atom(_sub(X, s, head), True)], "cart_thinness", s, (n, k))
        if "saturation" in self.rules:
            for d in range(3, self.d + 1):
                for n in range(-1, d - 3):
                    self._saturation(d, n, d - 5 - n)
        return self.clauses


_CACHE: Dict[Tuple, Tuple[List[Clause], Dict[int, List[int]]]] = {}


def clauses_for(X: Complex, cfg: ClosureConfig, bimarked: bool) -> Tuple[List[Clause], Dict[int, List[int]]]:
    key = (X, cfg.search_dim, cfg.rules, bimarked)
    hit = _CACHE.get(key)
    if hit is not None:
        return hit
    clauses = _Builder(X, cfg.search_dim, cfg.rules, bimarked).build()
    watch: Dict[int, List[int]] = {}
    for i, cl in enumerate(clauses):
        for a in cl.body:
            watch.setdefault(a, []).append(i)
    if len(_CACHE) > 256:
        _CACHE.clear()
    _CACHE[key] = (clauses, watch)
    return clauses, watch


def _run(X: StratSet, cfg: ClosureConfig, trace: bool):
    cx = X.cx
    N = len(cx)
    bimarked = X.c is not None
    clauses, watch = clauses_for(cx, cfg, bimarked)
    marked = set(X.t)
    if bimarked:
        marked |= {c + N for c in X.cart}
    added = []
    need = [len(cl.body) for cl in clauses]
    queue = list(marked)
    # t implies cart
    if bimarked:
        for a in list(marked):
            if a < N and a + N not in marked:
                marked.add(a + N)
                queue.append(a + N)
    for i, cl in enumerate(clauses):
        if need[i] == 0 and cl.head not in marked:
            marked.add(cl.head)
            queue.append(cl.head)
            if trace:
                added.append(cl)
    done = set()
    while queue:
        a = queue.pop()
        if a in done:
            continue
        done.add(a)
        fresh = []
        if bimarked and a < N and a + N not in marked:
            fresh.append((a + N, None))
        for i in watch.get(a, ()):
            need[i] -= 1
            if need[i] == 0 and clauses[i].head not in marked:
                fresh.append((clauses[i].head, clauses[i]))
        for h, cl in fresh:
            if h in marked:
                continue
            marked.add(h)
            queue.append(h)
            if trace and cl is not None:
                added.append(cl)
    t = frozenset(a for a in marked if a < N)
    if bimarked:
        c = frozenset(a - N for a in marked if a >= N)
        return StratSet(cx, t, c | t), added
    return StratSet(cx, t), added


def saturate_marked(X: StratSet, cfg=None) -> StratSet:
    """Least marking containing X's that is closed under thinness and saturation extensions up to cfg."""
    cfg = _config(cfg if cfg is not None else X.cx.dim_bound + 1)
    if X.c is not None:
        return saturate_bimarked(X, cfg)
    return _run(X, ClosureConfig(cfg.search_dim, cfg.rules - {"cart_thinness"}), False)[0]


def saturate_bimarked(X: StratSet, cfg=None) -> StratSet:
    """Closure of a bistratified set; cartesian thinness is applied as well and t stays inside c."""
    cfg = _config(cfg if cfg is not None else X.cx.dim_bound + 1)
    return _run(X.as_bistratified(), cfg, False)[0]


def saturate(X: StratSet, cfg=None) -> StratSet:
    return saturate_bimarked(X, cfg) if X.c is not None else saturate_marked(X, cfg)


def closure_report(X: StratSet, cfg=None) -> ClosureReport:
    cfg = _config(cfg if cfg is not None else X.cx.dim_bound + 1)
    res, added = _run(X, cfg, True)
    N = len(X.cx)
    rows = []
    for cl in added:
        kind = "cartesian" if cl.head >= N else "thin"
        rows.append((cl.rule, cl.witness, cl.param, kind, cl.head % N))
    return ClosureReport(res, cfg.search_dim, rows)


def is_saturated(X: StratSet, cfg=None) -> Tuple[bool, List[Tuple[str, Simplex, Tuple[int, ...], str, int]]]:
    """Every clause whose body holds in X but whose head does not, without iterating."""
    cfg = _config(cfg if cfg is not None else X.cx.dim_bound + 1)
    cx = X.cx
    N = len(cx)
    bimarked = X.c is not None
    clauses, _ = clauses_for(cx, cfg, bimarked)
    marked = set(X.t)
    if bimarked:
        marked |= {c + N for c in X.cart}
    out = []
    for cl in clauses:
        if cl.head not in marked and all(a in marked for a in cl.body):
            out.append((cl.rule, cl.witness, cl.param, "cartesian" if cl.head >= N else "thin", cl.head % N))
    return not out, out
