from itertools import combinations

import pytest

from complicial.core import SMap, identity_map
from complicial.shapes import (
    MarkingError, StratSet, boundary_set, cart_horn_0, cart_thin, check_strat_map, delta, delta_c,
    delta_k, delta_k_dprime, delta_k_prime, delta_t, eq3, find_strat_iso, horn, is_entire, is_regular,
    marking_violation, reconstruct, shape, sharp, trichotomy_classify, truncate,
)


def _marked_sets(X):
    return {frozenset(X.cx.vertex_labels(X.cx.cell(c))) for c in X.t}


def _complicial_oracle(n, k):
    core = {j for j in (k - 1, k, k + 1) if 0 <= j <= n}
    return {frozenset(s) for d in range(2, n + 2) for s in combinations(range(n + 1), d)
            if core <= set(s)}


@pytest.mark.parametrize("n,k", [(1, 0), (1, 1), (2, 0), (2, 1), (2, 2), (3, 0), (3, 1), (3, 2), (3, 3)])
def test_complicial_simplex_marks_match_oracle(n, k):
    assert _marked_sets(delta_k(n, k)) == _complicial_oracle(n, k)


def test_delta_1_2_marks_only_the_top_cell():
    assert _marked_sets(delta_k(2, 1)) == {frozenset({0, 1, 2})}


def test_primed_variants():
    faces = lambda n, js: {frozenset(set(range(n + 1)) - {j}) for j in js}
    assert _marked_sets(delta_k_prime(3, 1)) == _complicial_oracle(3, 1) | faces(3, [0, 2])
    assert _marked_sets(delta_k_dprime(3, 1)) == _complicial_oracle(3, 1) | faces(3, [0, 1, 2])


def test_eq3_marks():
    assert _marked_sets(eq3()) == {frozenset({0, 1, 2, 3}), frozenset({0, 2}), frozenset({1, 3})}


def test_sharp_marks_everything():
    assert len(sharp(2).t) == 4
    assert len(sharp(3).t) == 6 + 4 + 1


def test_vertices_are_never_thin():
    X = sharp(1)
    assert not X.thin(X.cx.cell(0))
    with pytest.raises(ValueError):
        StratSet(X.cx, frozenset({0}))


def test_degenerate_simplices_are_thin():
    X = delta(1)
    s = X.cx.apply(X.cx.cell(2), (0, 0, 1))
    assert X.thin(s)


def test_bistratified_cartesian_contains_thin():
    X = cart_thin(2, 1)
    assert X.t <= X.c
    assert delta_c(1).c and not delta_c(1).t
    assert len(cart_horn_0(2).c) == 2
    with pytest.raises(ValueError):
        cart_thin(2, 0)


def test_regular_and_entire():
    H, A, i = horn(2, 1)
    f = check_strat_map(i, H, A)
    assert is_regular(f) and not is_entire(f)
    P, Q = delta_k_prime(2, 1), delta_k_dprime(2, 1)
    g = check_strat_map(identity_map(P.cx), P, Q)
    assert is_entire(g) and not is_regular(g)
    h = check_strat_map(identity_map(delta(1).cx), delta(1), delta_t(1))
    assert is_entire(h)


def test_check_strat_map_examples():
    T = delta_t(1)
    check_strat_map(identity_map(T.cx), T, T)
    with pytest.raises(MarkingError) as err:
        check_strat_map(identity_map(T.cx), T, delta(1))
    assert err.value.cell == 2
    pt = delta(0)
    s0 = SMap(delta(1).cx, pt.cx, [((0,), 0), ((0,), 0), ((0, 0), 0)])
    assert marking_violation(s0, delta_t(1), pt) is None


def test_truncation():
    for n in range(1, 4):
        assert truncate(delta(n), n) == delta_t(n)
    assert truncate(delta(2), 1) == sharp(2)
    with pytest.raises(ValueError):
        truncate(delta(1), 0)
    X = delta(3)
    for a in range(1, 4):
        for b in range(1, 4):
            assert truncate(truncate(X, a), b) == truncate(X, min(a, b))


def test_find_strat_iso_respects_marks():
    assert find_strat_iso(delta_k(2, 1), delta_k(2, 1)) is not None
    assert find_strat_iso(delta(2), delta_t(2)) is None


def test_boundary_set():
    assert boundary_set(2).cx.counts() == (3, 3)


def test_shape_dispatch():
    assert shape("delta_k", 2, 1) == delta_k(2, 1)
    assert shape("sharp", 2) == sharp(2)
    with pytest.raises(ValueError):
        shape("nope", 1)


# -- the trichotomy

def _nondeg_chains(n, l):
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


def _in_domain_oracle(v, x, n, k, in_K):
    missing = set(range(n + 1)) - set(v)
    return bool(missing - {k}) or in_K(x)


KS = {"empty": lambda x: False, "boundary": lambda x: len(set(x)) == 1}


@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("l", [0, 1, 2])
@pytest.mark.parametrize("K", sorted(KS))
def test_trichotomy_partition(n, l, K):
    in_K = KS[K] if l else KS["empty"]
    for k in range(n):
        t1, t2 = {}, {}
        for ch in _nondeg_chains(n, l):
            v, x = tuple(a for a, _ in ch), tuple(b for _, b in ch)
            cl = trichotomy_classify(v, x, n, k, in_K)
            assert (cl.kind == "domain") == _in_domain_oracle(v, x, n, k, in_K)
            if cl.kind == "type1":
                t1[(v, x)] = cl
            elif cl.kind == "type2":
                assert reconstruct(cl, k) == (v, x)
                t2[(v, x)] = cl.p
        # the p-th face matches type 2 simplices one to one with type 1 simplices
        faces = sorted((v[:p] + v[p + 1:], x[:p] + x[p + 1:]) for (v, x), p in t2.items())
        assert faces == sorted(t1)


def test_trichotomy_type1_rule():
    cl = trichotomy_classify((0, 2, 2), (0, 0, 1), 2, 1, lambda x: False)
    assert cl.kind == "type1" and cl.p == 0


def test_trichotomy_rejects_degenerate():
    with pytest.raises(ValueError):
        trichotomy_classify((0, 0), (1, 1), 1, 0, lambda x: False)
