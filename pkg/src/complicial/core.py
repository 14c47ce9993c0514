"""Simplicial operators and finite simplicial sets in Eilenberg-Zilber form.

An operator is a weakly monotone map ``[m] -> [n]`` stored as the tuple of its
images.  A simplex of a :class:`Complex` is a pair ``(eta, cell)`` where ``cell``
is a nondegenerate generator of dimension ``k`` and ``eta`` is a surjection
``[d] ->> [k]``.  By Eilenberg-Zilber uniqueness two simplices are equal exactly
when their pairs are equal, so tuples can be compared and hashed directly.
"""

from __future__ import annotations

from itertools import combinations, combinations_with_replacement
from typing import Callable, Dict, Hashable, Iterable, Iterator, List, Optional, Sequence, Tuple

Op = Tuple[int, ...]
Simplex = Tuple[Op, int]


# ---------------------------------------------------------------- operators

def identity(n: int) -> Op:
    return tuple(range(n + 1))


def coface(i: int, n: int) -> Op:
    """d^i : [n-1] -> [n], skipping i."""
    if not 0 <= i <= n:
        raise ValueError(f"coface index {i} out of range for rank {n}")
    return tuple(j if j < i else j + 1 for j in range(n))


def codegeneracy(i: int, n: int) -> Op:
    """s^i : [n+1] -> [n], hitting i twice."""
    if not 0 <= i <= n:
        raise ValueError(f"codegeneracy index {i} out of range for rank {n}")
    return tuple(j if j <= i else j - 1 for j in range(n + 2))


def compose(u: Op, v: Op) -> Op:
    """u o v (apply v first)."""
    return tuple(u[x] for x in v)


def is_monotone(u: Sequence[int]) -> bool:
    return all(u[j] <= u[j + 1] for j in range(len(u) - 1))


def is_injective(u: Op) -> bool:
    return all(u[j] < u[j + 1] for j in range(len(u) - 1))


def is_surjective(u: Op, n: int) -> bool:
    if not u:
        return n == -1
    return u[0] == 0 and u[-1] == n and all(u[j + 1] - u[j] <= 1 for j in range(len(u) - 1))


def ez_factorize(u: Op) -> Tuple[Op, Op]:
    """Return (p, i) with u = i o p, p surjective and i injective."""
    if not is_monotone(u):
        raise ValueError(f"operator {u} is not monotone")
    i = tuple(sorted(set(u)))
    pos = {v: k for k, v in enumerate(i)}
    return tuple(pos[x] for x in u), i


def surjections(m: int, k: int) -> List[Op]:
    """All monotone surjections [m] ->> [k] in lexicographic order."""
    if k > m or k < 0:
        return []
    out = []
    for jumps in combinations(range(1, m + 1), k):
        js = set(jumps)
        level, images = 0, [0]
        for j in range(1, m + 1):
            if j in js:
                level += 1
            images.append(level)
        out.append(tuple(images))
    return out


def monotone_maps(m: int, n: int) -> List[Op]:
    return list(combinations_with_replacement(range(n + 1), m + 1))


def injections(m: int, n: int) -> List[Op]:
    return list(combinations(range(n + 1), m + 1))


def reverse(u: Op, n: int) -> Op:
    """Conjugate by the order reversals of [m] and [n]."""
    m = len(u) - 1
    return tuple(n - u[m - j] for j in range(m + 1))


def join_ops(u: Op, un: int, v: Op) -> Op:
    """u (+) v for the ordinal sum; ``un`` is the codomain rank of u (-1 if empty)."""
    return tuple(u) + tuple(un + 1 + x for x in v)


def degeneracy_indices(eta: Op) -> Tuple[int, ...]:
    return tuple(j for j in range(len(eta) - 1) if eta[j] == eta[j + 1])


def decompose(u: Op, n: int) -> Tuple[List[Tuple[str, int, int]], int]:
    """Write u : [m] -> [n] as a word of elementary operators.

    Returns ``(word, m)`` where ``word`` lists ``('d', i, rank)`` and
    ``('s', i, rank)`` factors to be applied right to left, i.e.
    u = word[0] o word[1] o ... ; ``rank`` is the codomain rank of the factor.
    """
    m = len(u) - 1
    p, inj = ez_factorize(u)
    word: List[Tuple[str, int, int]] = []
    # injective part: missing indices of inj, largest first outermost
    missing = [j for j in range(n + 1) if j not in set(inj)]
    s_part: List[Tuple[str, int, int]] = []
    rank = n
    for j in sorted(missing, reverse=True):
        word.append(("d", j, rank))
        rank -= 1
    # surjective part: p = p' o s^j where j is the last repeated position
    while True:
        degs = degeneracy_indices(p)
        if not degs:
            break
        j = degs[-1]
        r = len(p) - 2
        word_s = ("s", j, r)
        p = tuple(p[x if x <= j else x + 1] for x in range(r + 1))
        s_part.insert(0, word_s)
    word.extend(s_part)
    return word, m


# ---------------------------------------------------------------- complexes

class Complex:
    """A finite simplicial set given by its nondegenerate cells and their faces.

    Cells are numbered ``0..N-1`` in order of nondecreasing dimension.  ``faces[c]``
    holds the canonical simplices ``d_0 c, ..., d_k c``.  Vertex labels are
    optional and only used for lookups by vertex tuple.
    """

    __slots__ = ("dims", "faces", "labels", "_offsets", "_fcache", "_scache",
                 "_idx", "_lookup", "_order", "_hash", "_cofaces")

    def __init__(self, dims: Sequence[int], faces: Sequence[Sequence[Simplex]],
                 labels: Optional[Sequence[Hashable]] = None):
        self.dims = tuple(dims)
        self.faces = tuple(tuple(f) for f in faces)
        if any(self.dims[j] > self.dims[j + 1] for j in range(len(self.dims) - 1)):
            raise ValueError("cells must be ordered by dimension")
        nv = sum(1 for d in self.dims if d == 0)
        self.labels = tuple(labels) if labels is not None else None
        if self.labels is not None and len(self.labels) != nv:
            raise ValueError("one label per vertex expected")
        top = self.dims[-1] if self.dims else -1
        self._offsets = [0] * (top + 2)
        for d in self.dims:
            self._offsets[d + 1] += 1
        for d in range(1, top + 2):
            self._offsets[d] += self._offsets[d - 1]
        self._fcache: Dict = {}
        self._scache: Dict = {}
        self._idx: Dict = {}
        self._lookup = None
        self._order = None
        self._hash = None
        self._cofaces = None

    # -- basic data
    @property
    def dim_bound(self) -> int:
        return self.dims[-1] if self.dims else -1

    def __len__(self) -> int:
        return len(self.dims)

    def cells(self, d: Optional[int] = None) -> range:
        if d is None:
            return range(len(self.dims))
        if d < 0 or d > self.dim_bound:
            return range(0)
        return range(self._offsets[d], self._offsets[d + 1])

    def counts(self) -> Tuple[int, ...]:
        return tuple(len(self.cells(d)) for d in range(self.dim_bound + 1))

    def dim(self, c: int) -> int:
        return self.dims[c]

    def cell(self, c: int) -> Simplex:
        return identity(self.dims[c]), c

    def __eq__(self, other) -> bool:
        return isinstance(other, Complex) and self.dims == other.dims and self.faces == other.faces

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.dims, self.faces))
        return self._hash

    def __repr__(self) -> str:
        return f"Complex(counts={self.counts()})"

    # -- the presheaf action
    def face_inj(self, c: int, i: Op) -> Simplex:
        """Canonical form of c o i for an injective operator i."""
        k = self.dims[c]
        if len(i) == k + 1:
            return identity(k), c
        key = (c, i)
        hit = self._fcache.get(key)
        if hit is not None:
            return hit
        present = set(i)
        j = next(x for x in range(k + 1) if x not in present)
        sub = tuple(x if x < j else x - 1 for x in i)
        res = self.apply(self.faces[c][j], sub)
        self._fcache[key] = res
        return res

    def apply(self, s: Simplex, u: Op) -> Simplex:
        """Canonical form of s o u."""
        eta, c = s
        if u and u[-1] >= len(eta):
            raise ValueError("rank mismatch in apply")
        w = tuple(eta[x] for x in u)
        p, i = ez_factorize(w)
        eta2, c2 = self.face_inj(c, i)
        return tuple(eta2[x] for x in p), c2

    def face(self, s: Simplex, i: int) -> Simplex:
        return self.apply(s, coface(i, len(s[0]) - 1))

    def face_tuple(self, s: Simplex) -> Tuple[Simplex, ...]:
        n = len(s[0]) - 1
        if n == 0:
            return ()
        return tuple(self.apply(s, coface(i, n)) for i in range(n + 1))

    def vertices(self, s: Simplex) -> Tuple[int, ...]:
        return tuple(self.apply(s, (j,))[1] for j in range(len(s[0])))

    def vertex_labels(self, s: Simplex) -> Tuple:
        if self.labels is None:
            raise ValueError("complex has no vertex labels")
        return tuple(self.labels[v] for v in self.vertices(s))

    @staticmethod
    def is_degenerate(s: Simplex) -> bool:
        eta = s[0]
        return any(eta[j] == eta[j + 1] for j in range(len(eta) - 1))

    # -- enumeration
    def simplices(self, n: int) -> List[Simplex]:
        """All n-simplices, degenerate ones included, in a fixed order."""
        hit = self._scache.get(n)
        if hit is not None:
            return hit
        out: List[Simplex] = []
        for k in range(min(n, self.dim_bound) + 1):
            cs = self.cells(k)
            if not len(cs):
                continue
            for eta in surjections(n, k):
                for c in cs:
                    out.append((eta, c))
        self._scache[n] = out
        return out

    def face_index(self, d: int, nondegenerate: bool = False) -> Dict[Tuple[Simplex, ...], List[Simplex]]:
        """d-simplices grouped by their face tuple."""
        key = (d, nondegenerate)
        hit = self._idx.get(key)
        if hit is not None:
            return hit
        pool = [self.cell(c) for c in self.cells(d)] if nondegenerate else self.simplices(d)
        idx: Dict[Tuple[Simplex, ...], List[Simplex]] = {}
        for s in pool:
            idx.setdefault(self.face_tuple(s), []).append(s)
        self._idx[key] = idx
        return idx

    def cofaces(self) -> List[List[int]]:
        if self._cofaces is None:
            co: List[List[int]] = [[] for _ in self.dims]
            for c, fs in enumerate(self.faces):
                for (_, b) in fs:
                    if c not in co[b]:
                        co[b].append(c)
            self._cofaces = co
        return self._cofaces

    def closure_order(self) -> List[int]:
        """Cells ordered so faces precede cofaces and each cell follows its vertices closely."""
        if self._order is None:
            seen = set()
            order: List[int] = []

            def visit(c: int) -> None:
                stack = [(c, False)]
                while stack:
                    x, done = stack.pop()
                    if done:
                        if x not in seen:
                            seen.add(x)
                            order.append(x)
                        continue
                    if x in seen:
                        continue
                    stack.append((x, True))
                    for (_, b) in reversed(self.faces[x]):
                        if b not in seen:
                            stack.append((b, False))

            for c in sorted(self.cells(), key=lambda x: (-self.dims[x], x)):
                visit(c)
            self._order = order
        return self._order

    # -- lookups in nonsingular complexes
    def lookup(self, labels: Sequence[Hashable]) -> Simplex:
        """Simplex with the given vertex labels (repeats allowed) in a nonsingular complex."""
        if self._lookup is None:
            if self.labels is None:
                raise ValueError("complex has no vertex labels")
            table: Dict[Tuple, int] = {}
            for c in self.cells():
                key = self.vertex_labels(self.cell(c))
                if key in table:
                    raise ValueError("complex is not determined by vertex tuples")
                table[key] = c
            self._lookup = table
        labels = tuple(labels)
        if not labels:
            raise ValueError("empty vertex tuple")
        distinct = [labels[0]]
        eta = [0]
        for x in labels[1:]:
            if x != distinct[-1]:
                distinct.append(x)
            eta.append(len(distinct) - 1)
        c = self._lookup.get(tuple(distinct))
        if c is None:
            raise KeyError(f"no simplex with vertices {labels}")
        return tuple(eta), c

    def has_simplex(self, labels: Sequence[Hashable]) -> bool:
        try:
            self.lookup(labels)
            return True
        except KeyError:
            return False

    # -- validation
    def check(self) -> List[str]:
        """Violations of the simplicial identities and of the storage invariants."""
        errs: List[str] = []
        for c in self.cells():
            d = self.dims[c]
            fs = self.faces[c]
            if d == 0:
                if fs:
                    errs.append(f"vertex {c} has faces")
                continue
            if len(fs) != d + 1:
                errs.append(f"cell {c} has {len(fs)} faces, expected {d + 1}")
                continue
            for (eta, b) in fs:
                if len(eta) != d or not is_surjective(eta, self.dims[b]):
                    errs.append(f"cell {c} has a malformed face {(eta, b)}")
            if d < 2:
                continue
            for j in range(d + 1):
                for i in range(j):
                    lhs = self.apply(fs[j], coface(i, d - 1))
                    rhs = self.apply(fs[i], coface(j - 1, d - 1))
                    if lhs != rhs:
                        errs.append(f"cell {c}: d{i}d{j} != d{j - 1}d{i}")
        return errs

    # -- builders
    @staticmethod
    def from_simplices(generators: Iterable[Sequence[Hashable]], vertices: Optional[Sequence[Hashable]] = None) -> "Complex":
        """Nonsingular complex generated by vertex tuples (each tuple lists distinct vertices in order)."""
        tuples = set()
        for g in generators:
            g = tuple(g)
            if len(set(g)) != len(g):
                raise ValueError(f"repeated vertex in generator {g}")
            for r in range(1, len(g) + 1):
                for sub in combinations(g, r):
                    tuples.add(sub)
        if vertices is None:
            vs = sorted({t[0] for t in tuples if len(t) == 1}, key=_label_key)
        else:
            vs = list(vertices)
            for t in tuples:
                if len(t) == 1 and t[0] not in vs:
                    vs.append(t[0])
        vpos = {v: i for i, v in enumerate(vs)}
        ordered = sorted(tuples, key=lambda t: (len(t), tuple(vpos[x] for x in t)))
        ident = {t: i for i, t in enumerate(ordered)}
        dims, faces = [], []
        for t in ordered:
            d = len(t) - 1
            dims.append(d)
            if d == 0:
                faces.append(())
            else:
                faces.append(tuple((identity(d - 1), ident[t[:i] + t[i + 1:]]) for i in range(d + 1)))
        return Complex(dims, faces, labels=[t[0] for t in ordered if len(t) == 1])

    @staticmethod
    def empty() -> "Complex":
        return Complex([], [], labels=[])


def _label_key(x):
    return (0, x) if isinstance(x, int) else (1, str(x))


def standard_simplex(n: int) -> Complex:
    return Complex.from_simplices([tuple(range(n + 1))]) if n >= 0 else Complex.empty()


def boundary(n: int) -> Complex:
    """The boundary of Delta[n]."""
    if n == 0:
        return Complex.empty()
    return Complex.from_simplices([tuple(j for j in range(n + 1) if j != i) for i in range(n + 1)],
                                  vertices=list(range(n + 1)))


def horn_complex(n: int, k: int) -> Complex:
    if not 0 <= k <= n or n < 1:
        raise ValueError(f"no horn Lambda^{k}[{n}]")
    return Complex.from_simplices([tuple(j for j in range(n + 1) if j != i) for i in range(n + 1) if i != k],
                                  vertices=list(range(n + 1)))


def sub_complex(X: Complex, cells: Iterable[int]) -> Tuple[Complex, "SMap"]:
    """Smallest subcomplex containing ``cells`` together with its inclusion."""
    keep = set()
    stack = list(cells)
    while stack:
        c = stack.pop()
        if c in keep:
            continue
        keep.add(c)
        stack.extend(b for (_, b) in X.faces[c])
    old = sorted(keep)
    new = {c: i for i, c in enumerate(old)}
    faces = [tuple((eta, new[b]) for (eta, b) in X.faces[c]) for c in old]
    labels = None
    if X.labels is not None:
        labels = [X.labels[c] for c in old if X.dims[c] == 0]
    Y = Complex([X.dims[c] for c in old], faces, labels=labels)
    return Y, SMap(Y, X, [X.cell(c) for c in old])


# ---------------------------------------------------------------- maps

class SMap:
    """A simplicial map, recorded by the images of the nondegenerate cells."""

    __slots__ = ("dom", "cod", "assign")

    def __init__(self, dom: Complex, cod: Complex, assign: Sequence[Simplex]):
        self.dom = dom
        self.cod = cod
        self.assign = tuple(assign)
        if len(self.assign) != len(dom):
            raise ValueError("assignment must cover every cell of the domain")

    def __call__(self, s: Simplex) -> Simplex:
        eta, c = s
        return self.cod.apply(self.assign[c], eta)

    def __eq__(self, other) -> bool:
        return isinstance(other, SMap) and self.assign == other.assign and self.dom == other.dom and self.cod == other.cod

    def __hash__(self) -> int:
        return hash(self.assign)

    def __repr__(self) -> str:
        return f"SMap({self.assign})"

    def then(self, g: "SMap") -> "SMap":
        """g o self."""
        return SMap(self.dom, g.cod, [g(s) for s in self.assign])

    def check(self) -> List[str]:
        errs = []
        for c in self.dom.cells():
            img = self.assign[c]
            d = self.dom.dims[c]
            if len(img[0]) != d + 1:
                errs.append(f"cell {c} sent to a simplex of the wrong dimension")
                continue
            if d == 0:
                continue
            want = tuple(self(f) for f in self.dom.faces[c])
            if want != self.cod.face_tuple(img):
                errs.append(f"cell {c}: faces do not commute")
        return errs

    def is_mono(self) -> bool:
        seen = set()
        for (eta, c) in self.assign:
            if Complex.is_degenerate((eta, c)) or c in seen:
                return False
            seen.add(c)
        return True

    def is_iso(self) -> bool:
        return self.is_mono() and len(self.dom) == len(self.cod)

    def image_cells(self) -> List[int]:
        return [c for (_, c) in self.assign]

    def inverse(self) -> "SMap":
        if not self.is_iso():
            raise ValueError("map is not an isomorphism")
        inv = [None] * len(self.cod)
        for c, (_, b) in enumerate(self.assign):
            inv[b] = self.dom.cell(c)
        return SMap(self.cod, self.dom, inv)


def identity_map(X: Complex) -> SMap:
    return SMap(X, X, [X.cell(c) for c in X.cells()])


def map_from_vertices(dom: Complex, cod: Complex, f: Callable[[Hashable], Hashable]) -> SMap:
    """Map between labelled nonsingular complexes induced by a vertex function."""
    assign = []
    for c in dom.cells():
        labs = dom.vertex_labels(dom.cell(c))
        assign.append(cod.lookup(tuple(f(x) for x in labs)))
    m = SMap(dom, cod, assign)
    errs = m.check()
    if errs:
        raise ValueError("vertex function does not define a simplicial map: " + errs[0])
    return m


# ---------------------------------------------------------------- products

class Product:
    """Cartesian product X x Y with canonical pairing of simplices."""

    def __init__(self, X: Complex, Y: Complex):
        self.X, self.Y = X, Y
        pairs: List[Tuple[Simplex, Simplex]] = []
        dims: List[int] = []
        for d in range(X.dim_bound + Y.dim_bound + 1 if len(X) and len(Y) else 0):
            for a in X.simplices(d):
                da = set(degeneracy_indices(a[0]))
                for b in Y.simplices(d):
                    if da.isdisjoint(degeneracy_indices(b[0])):
                        pairs.append((a, b))
                        dims.append(d)
        self.pairs = pairs
        self.index = {p: i for i, p in enumerate(pairs)}
        faces = []
        for (a, b), d in zip(pairs, dims):
            if d == 0:
                faces.append(())
                continue
            faces.append(tuple(self.pair(X.face(a, i), Y.face(b, i)) for i in range(d + 1)))
        labels = None
        if X.labels is not None and Y.labels is not None:
            labels = [(X.labels[a[1]], Y.labels[b[1]]) for (a, b), d in zip(pairs, dims) if d == 0]
        self.complex = Complex(dims, faces, labels=labels)
        self.proj1 = SMap(self.complex, X, [a for (a, _) in pairs])
        self.proj2 = SMap(self.complex, Y, [b for (_, b) in pairs])

    def pair(self, a: Simplex, b: Simplex) -> Simplex:
        """The simplex (a, b) of X x Y in canonical form."""
        ea, eb = a[0], b[0]
        if len(ea) != len(eb):
            raise ValueError("pairing simplices of different dimensions")
        keep = [0] + [j for j in range(1, len(ea)) if not (ea[j] == ea[j - 1] and eb[j] == eb[j - 1])]
        p, level = [], -1
        ks = set(keep)
        for j in range(len(ea)):
            if j in ks:
                level += 1
            p.append(level)
        ra = (tuple(ea[j] for j in keep), a[1])
        rb = (tuple(eb[j] for j in keep), b[1])
        return tuple(p), self.index[(ra, rb)]


def product(X: Complex, Y: Complex) -> Product:
    return Product(X, Y)


def product_map(P: Product, Q: Product, f: SMap, g: SMap) -> SMap:
    """f x g : P.X x P.Y -> Q.X x Q.Y."""
    return SMap(P.complex, Q.complex, [Q.pair(f(a), g(b)) for (a, b) in P.pairs])


# ---------------------------------------------------------------- colimits

class Colimit:
    """Result of :func:`colimit`: the complex, cocone maps and cell origins."""

    def __init__(self, complex: Complex, cocone: List[SMap], origins: List[Tuple[int, int]], objects: List[Complex]):
        self.complex = complex
        self.cocone = cocone
        self.origins = origins
        self.objects = objects

    def induced(self, maps: Sequence[SMap], cod: Complex, check: bool = True) -> SMap:
        """The map out of the colimit determined by a compatible family of maps."""
        assign = [maps[o](self.objects[o].cell(c)) for (o, c) in self.origins]
        m = SMap(self.complex, cod, assign)
        if check:
            for o, f in enumerate(maps):
                if m.dom is not None and self.cocone[o].then(m).assign != f.assign:
                    raise ValueError(f"maps are not compatible with the diagram at object {o}")
        return m

    def lift(self, s: Simplex) -> Tuple[int, Simplex]:
        """Some (object, simplex) representing the simplex s of the colimit."""
        eta, c = s
        o, c0 = self.origins[c]
        return o, self.objects[o].apply(self.objects[o].cell(c0), eta)


def colimit(objects: Sequence[Complex], arrows: Sequence[Tuple[int, int, SMap]]) -> Colimit:
    """Colimit of a finite diagram of complexes.

    Simplices of every object are enumerated up to the largest dimension present,
    identified along the arrows, and the nondegenerate classes become the cells of
    the result.  A class is degenerate as soon as one member is.
    """
    objects = list(objects)
    D = max((X.dim_bound for X in objects), default=-1)
    node: Dict[Tuple[int, Simplex], int] = {}
    keys: List[Tuple[int, Simplex]] = []
    for d in range(D + 1):
        for o, X in enumerate(objects):
            for s in X.simplices(d):
                node[(o, s)] = len(keys)
                keys.append((o, s))
    parent = list(range(len(keys)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for (a, b, f) in arrows:
        if f.dom is not objects[a] and f.dom != objects[a]:
            raise ValueError("arrow domain does not match diagram object")
        X = objects[a]
        for d in range(X.dim_bound + 1):
            for s in X.simplices(d):
                ra, rb = find(node[(a, s)]), find(node[(b, f(s))])
                if ra != rb:
                    if ra < rb:
                        parent[rb] = ra
                    else:
                        parent[ra] = rb

    members: Dict[int, List[int]] = {}
    for x in range(len(keys)):
        members.setdefault(find(x), []).append(x)
    roots = sorted(members)
    canon: Dict[int, Simplex] = {}
    dims: List[int] = []
    faces: List[Tuple[Simplex, ...]] = []
    origins: List[Tuple[int, int]] = []
    # roots are minimal node ids, so sorting follows dimension then object order
    for r in roots:
        ms = members[r]
        o, s = keys[ms[0]]
        d = len(s[0]) - 1
        deg = next((keys[m] for m in ms if Complex.is_degenerate(keys[m][1])), None)
        if deg is not None:
            o2, (eta, c) = deg
            base = canon[find(node[(o2, objects[o2].cell(c))])]
            canon[r] = (tuple(base[0][x] for x in eta), base[1])
            continue
        cid = len(dims)
        canon[r] = (identity(d), cid)
        dims.append(d)
        origins.append((o, s[1]))
        if d == 0:
            faces.append(())
        else:
            X = objects[o]
            faces.append(tuple(canon[find(node[(o, X.face(s, i))])] for i in range(d + 1)))
    Q = Complex(dims, faces)
    cocone = [SMap(X, Q, [canon[find(node[(o, X.cell(c))])] for c in X.cells()]) for o, X in enumerate(objects)]
    return Colimit(Q, cocone, origins, objects)


# ---------------------------------------------------------------- map search

def search_maps(K: Complex, X: Complex, *, fixed: Optional[Dict[int, Simplex]] = None,
                accept: Optional[Callable[[int, Simplex], bool]] = None,
                injective: bool = False, limit: Optional[int] = None) -> Iterator[SMap]:
    """Backtracking enumeration of simplicial maps K -> X.

    Cells are visited in closure order, so every cell is assigned after its faces
    and its candidates are exactly the simplices of X with the required faces.
    ``fixed`` pins some cells, ``accept`` filters candidates, ``injective`` asks
    for monomorphisms (nondegenerate, pairwise distinct images).
    """
    fixed = fixed or {}
    order = K.closure_order()
    n = len(order)
    assign: List[Optional[Simplex]] = [None] * len(K)
    used = set()
    count = 0

    def candidates(c: int) -> List[Simplex]:
        d = K.dims[c]
        if c in fixed:
            pool = [fixed[c]]
            if d > 0:
                want = tuple(X.apply(assign[b], eta) for (eta, b) in K.faces[c])
                if X.face_tuple(fixed[c]) != want:
                    return []
            elif len(fixed[c][0]) != 1:
                return []
        elif d == 0:
            pool = [X.cell(v) for v in X.cells(0)] if injective else X.simplices(0)
        else:
            want = tuple(X.apply(assign[b], eta) for (eta, b) in K.faces[c])
            pool = X.face_index(d, nondegenerate=injective).get(want, [])
        out = []
        for s in pool:
            if injective and (Complex.is_degenerate(s) or s[1] in used):
                continue
            if accept is not None and not accept(c, s):
                continue
            out.append(s)
        return out

    def rec(pos: int) -> Iterator[SMap]:
        nonlocal count
        if pos == n:
            count += 1
            yield SMap(K, X, list(assign))
            return
        c = order[pos]
        for s in candidates(c):
            assign[c] = s
            if injective:
                used.add(s[1])
            yield from rec(pos + 1)
            if injective:
                used.discard(s[1])
            if limit is not None and count >= limit:
                return
        assign[c] = None

    yield from rec(0)


def enumerate_maps(K: Complex, X: Complex, limit: Optional[int] = None) -> List[SMap]:
    return list(search_maps(K, X, limit=limit))


def find_iso(X: Complex, Y: Complex, accept: Optional[Callable[[int, Simplex], bool]] = None) -> Optional[SMap]:
    """An isomorphism X -> Y, or None."""
    if X.counts() != Y.counts():
        return None
    for f in search_maps(X, Y, injective=True, accept=accept, limit=1):
        return f
    return None
