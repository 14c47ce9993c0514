"""Generated property checks shared by the property tests and the acceptance run.

Each suite raises AssertionError on the first counterexample and otherwise
returns the number of instances it examined.
"""

import random

from complicial.constructions import (
    cojoin, diamond, gray, join, product, suspension, wedge_left, wedge_right,
)
from complicial.core import (
    compose, coface, codegeneracy, injections, monotone_maps, surjections,
)
from complicial.duality import co_dual, op_dual
from complicial.homotopy import globe
from complicial.saturation import saturate
from complicial.shapes import (
    StratSet, cart_thin, delta, delta_c, delta_k, delta_t, eq3, find_strat_iso, horn, reconstruct, sharp,
    trichotomy_classify,
)

SEED = 20240611


def constructed():
    """A spread of objects built by every operation in the library."""
    d0, d1, t1 = delta(0), delta(1), delta_t(1)
    return [
        delta(3), delta_t(2), delta_k(3, 1), eq3(), sharp(2), horn(3, 1)[0], cart_thin(2, 1), delta_c(2),
        join(d1, d1), join(t1, d0), gray(d1, d1), gray(delta(2), d1), gray(t1, delta_k(2, 1)),
        product(d1, delta(2)), product(t1, t1), suspension(d1), suspension(delta(2)), globe(3),
        cojoin(d1, d0), cojoin(d1, d1), diamond(d1, d0), wedge_right(d1), wedge_left(d0), co_dual(delta(2)),
        op_dual(gray(d1, delta(2))), saturate(gray(d1, delta(2)), 3),
    ]


def ez_uniqueness(max_rank=5):
    n_ops = 0
    for m in range(max_rank + 1):
        for n in range(max_rank + 1):
            seen = {}
            for k in range(min(m, n) + 1):
                for p in surjections(m, k):
                    for i in injections(k, n):
                        u = compose(i, p)
                        seen[u] = seen.get(u, 0) + 1
            ops = monotone_maps(m, n)
            assert set(seen) == set(ops), (m, n)
            bad = [u for u, c in seen.items() if c != 1]
            assert not bad, (m, n, bad[:3])
            n_ops += len(ops)
    return n_ops


def simplicial_identities(max_dim=3):
    """Every simplex, degenerate or not, composes operators functorially."""
    count = 0
    ops = {(m, n): monotone_maps(m, n) for m in range(max_dim + 1) for n in range(max_dim + 1)}
    for X in constructed():
        cx = X.cx
        assert cx.check() == []
        for n in range(min(cx.dim_bound, max_dim) + 1):
            for s in cx.simplices(n):
                for m in range(max_dim):
                    for u in ops[(m, n)]:
                        su = cx.apply(s, u)
                        for v in ops[(0, m)] + ([coface(0, m)] if m else []):
                            assert cx.apply(su, v) == cx.apply(s, compose(u, v))
                for j in range(n + 1):
                    for i in range(j if n >= 2 else 0):
                        lhs = cx.apply(cx.apply(s, coface(j, n)), coface(i, n - 1))
                        rhs = cx.apply(cx.apply(s, coface(i, n)), coface(j - 1, n - 1))
                        assert lhs == rhs
                    ds = cx.apply(s, codegeneracy(j, n))
                    assert cx.apply(ds, coface(j, n + 1)) == s
                    assert cx.apply(ds, coface(j + 1, n + 1)) == s
                count += 1
    return count


def _random_marking(rng, X, p=0.3):
    cells = [c for c in X.cx.cells() if X.cx.dims[c] > 0]
    return StratSet(X.cx, frozenset(c for c in cells if rng.random() < p))


def closure_laws(trials=3000):
    rng = random.Random(SEED)
    bases = [delta(3), gray(delta(1), delta(1)), product(delta(1), delta(2)), suspension(delta(1)),
             join(delta(1), delta(1)), globe(2)]
    for j in range(trials):
        X = rng.choice(bases)
        d = X.cx.dim_bound + 1
        A = _random_marking(rng, X, 0.2)
        B = A.with_marks(_random_marking(rng, X, 0.2).t)
        SA, SB = saturate(A, d), saturate(B, d)
        assert A.t <= SA.t
        assert SA.t <= SB.t
        assert saturate(SA, d) == SA
    return trials


def op_involution(trials=1500):
    rng = random.Random(SEED + 1)
    objs = constructed()
    count = 0
    for X in objs:
        assert op_dual(op_dual(X)) == X
        count += 1
    for _ in range(trials):
        X = _random_marking(rng, rng.choice(objs))
        assert op_dual(op_dual(X)) == X
        Y = op_dual(X)
        assert Y.cx.check() == [] and Y.t == X.t
        count += 1
    return count


def associativity():
    factors = [delta(0), delta(1), delta_t(1)]
    count = 0
    for A in factors:
        for B in factors:
            for C in factors:
                for op in (join, gray):
                    assert find_strat_iso(op(op(A, B), C), op(A, op(B, C))) is not None, (op.__name__,)
                    count += 1
    return count


def sharp_gray_is_product():
    count = 0
    lefts = [sharp(1), sharp(2)]
    rights = [delta(1), delta_t(1), delta(2), delta_t(2), delta_k(2, 1), sharp(1), horn(2, 0)[0]]
    for X in lefts:
        for Y in rights:
            assert gray(X, Y) == product(X, Y)
            count += 1
    return count


def _chains(n, l):
    pts = [(a, b) for a in range(n + 1) for b in range(l + 1)]
    out = []

    def grow(ch):
        out.append(ch)
        for q in pts:
            if q[0] >= ch[-1][0] and q[1] >= ch[-1][1] and q != ch[-1]:
                grow(ch + [q])
    for p in pts:
        grow([p])
    return out


def trichotomy(max_n=3):
    """Exhaustive over Delta[n] x Delta[l], l <= 2, with K empty or the vertices of Delta[l]."""
    count = 0
    for n in range(1, max_n + 1):
        for k in range(n):
            for l in range(3):
                for in_K in (lambda x: False, lambda x: l > 0 and len(set(x)) == 1):
                    t1, t2 = set(), {}
                    for ch in _chains(n, l):
                        v = tuple(a for a, _ in ch)
                        x = tuple(b for _, b in ch)
                        cl = trichotomy_classify(v, x, n, k, in_K)
                        dom = bool(set(range(n + 1)) - set(v) - {k}) or in_K(x)
                        assert (cl.kind == "domain") == dom
                        if cl.kind == "type1":
                            t1.add((v, x))
                        elif cl.kind == "type2":
                            assert reconstruct(cl, k) == (v, x)
                            t2[(v, x)] = cl.p
                        count += 1
                    faces = sorted((v[:p] + v[p + 1:], x[:p] + x[p + 1:]) for (v, x), p in t2.items())
                    assert faces == sorted(t1)
    return count


def maps_compose():
    """Composites of enumerated maps are enumerated maps, on complexes with at most 6 cells."""
    from complicial.core import boundary, enumerate_maps, horn_complex, standard_simplex
    small = [standard_simplex(0), standard_simplex(1), standard_simplex(2), boundary(2), horn_complex(2, 1),
             horn_complex(2, 0)]
    count = 0
    for K in small:
        for X in small:
            kx = enumerate_maps(K, X)
            for Y in small:
                ky = set(enumerate_maps(K, Y))
                for g in enumerate_maps(X, Y):
                    for f in kx:
                        assert f.then(g) in ky
                        count += 1
    return count


def product_laws():
    from complicial.core import colimit, find_iso, identity_map, product as cproduct, standard_simplex
    simplices = [standard_simplex(n) for n in range(3)]
    pt = simplices[0]
    count = 0
    for A in simplices:
        assert find_iso(cproduct(A, pt).complex, A) is not None
        assert find_iso(cproduct(pt, A).complex, A) is not None
        assert find_iso(colimit([A, A], [(0, 1, identity_map(A))]).complex, A) is not None
        count += 3
        for B in simplices:
            for C in simplices[:2]:
                left = cproduct(cproduct(A, B).complex, C).complex
                right = cproduct(A, cproduct(B, C).complex).complex
                assert find_iso(left, right) is not None
                count += 1
    return count


SUITES = {
    "maps_compose": maps_compose,
    "product_laws": product_laws,
    "ez_uniqueness": ez_uniqueness,
    "simplicial_identities": simplicial_identities,
    "closure_laws": closure_laws,
    "op_involution": op_involution,
    "associativity": associativity,
    "sharp_gray_is_product": sharp_gray_is_product,
    "trichotomy": trichotomy,
}
