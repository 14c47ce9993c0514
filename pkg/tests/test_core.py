from itertools import product as cartesian

import pytest

from complicial.core import (
    Complex, SMap, boundary, codegeneracy, coface, colimit, compose, decompose,
    enumerate_maps, ez_factorize, find_iso, horn_complex, identity, identity_map,
    injections, is_injective, is_surjective, monotone_maps, product, standard_simplex,
    sub_complex, surjections,
)


def _monotone_bruteforce(m, n):
    return [u for u in cartesian(range(n + 1), repeat=m + 1)
            if all(u[j] <= u[j + 1] for j in range(m))]


def _chains(n, m):
    """Nondegenerate simplices of Delta[n] x Delta[m]: strictly increasing chains in the grid."""
    pts = [(a, b) for a in range(n + 1) for b in range(m + 1)]
    out = {}
    def grow(chain):
        out.setdefault(len(chain) - 1, 0)
        out[len(chain) - 1] += 1
        a, b = chain[-1]
        for (c, d) in pts:
            if c >= a and d >= b and (c, d) != (a, b):
                grow(chain + [(c, d)])
    for p in pts:
        grow([p])
    return tuple(out[d] for d in sorted(out))


def test_coface_and_codegeneracy_shapes():
    assert coface(0, 2) == (1, 2)
    assert coface(2, 2) == (0, 1)
    assert codegeneracy(0, 1) == (0, 0, 1)
    with pytest.raises(ValueError):
        coface(3, 2)


def test_cosimplicial_identities():
    for n in range(1, 5):
        for j in range(n + 1):
            for i in range(j):
                assert compose(coface(j, n), coface(i, n - 1)) == compose(coface(i, n), coface(j - 1, n - 1))


@pytest.mark.parametrize("m,n", [(0, 0), (1, 2), (2, 2), (3, 1), (2, 4)])
def test_monotone_maps_match_bruteforce(m, n):
    assert sorted(monotone_maps(m, n)) == sorted(_monotone_bruteforce(m, n))


def test_ez_factorization_against_all_pairs():
    for m in range(4):
        for n in range(4):
            for u in monotone_maps(m, n):
                hits = [(p, i) for k in range(min(m, n) + 1)
                        for p in surjections(m, k) for i in injections(k, n)
                        if compose(i, p) == u]
                assert hits == [ez_factorize(u)]


def test_ez_rejects_non_monotone():
    with pytest.raises(ValueError):
        ez_factorize((1, 0))


def test_decompose_rebuilds_operator():
    def elem(kind, i, rank):
        return coface(i, rank) if kind == "d" else codegeneracy(i, rank)
    for m in range(4):
        for n in range(4):
            for u in monotone_maps(m, n):
                word, mm = decompose(u, n)
                acc = identity(mm)
                for f in reversed(word):
                    acc = compose(elem(*f), acc)
                assert acc == u


def test_surjectivity_predicates():
    assert is_surjective((0, 0, 1), 1)
    assert not is_surjective((0, 2), 2)
    assert is_injective((0, 2))
    assert is_surjective((), -1)


def test_standard_simplex_simplex_counts():
    for k in range(4):
        X = standard_simplex(k)
        assert X.counts() == tuple(len(injections(d, k)) for d in range(k + 1))
        for n in range(4):
            assert len(X.simplices(n)) == len(_monotone_bruteforce(n, k))


def test_boundary_and_horn():
    assert boundary(2).counts() == (3, 3)
    assert boundary(0).counts() == ()
    assert horn_complex(3, 1).counts() == (4, 6, 3)
    with pytest.raises(ValueError):
        horn_complex(2, 3)


def test_empty_complex():
    E = Complex.empty()
    assert E.dim_bound == -1 and len(E) == 0


@pytest.mark.parametrize("n,m", [(1, 1), (1, 2), (2, 2), (2, 3)])
def test_product_counts_match_chain_oracle(n, m):
    P = product(standard_simplex(n), standard_simplex(m))
    assert P.complex.counts() == _chains(n, m)
    assert not P.complex.check()


def test_face_relations_hold():
    X = product(standard_simplex(2), standard_simplex(1)).complex
    assert X.check() == []
    bad = Complex([0, 1], [(), (((0,), 0), ((0,), 0), ((0,), 0))])
    assert bad.check()


def test_simplices_are_unique_under_normalization():
    X = standard_simplex(2)
    for n in range(4):
        ss = X.simplices(n)
        assert len(ss) == len(set(ss))
        verts = {X.vertices(s) for s in ss}
        assert len(verts) == len(ss)


def test_sub_complex_closes_downward():
    X = standard_simplex(3)
    top = X.cells(2)[0]
    Y, inc = sub_complex(X, [top])
    assert Y.counts() == (3, 3, 1)
    assert inc.is_mono() and not inc.check()


def test_pushout_of_two_edges_along_a_vertex():
    E, P = standard_simplex(1), standard_simplex(0)
    a = SMap(P, E, [E.lookup((1,))])
    b = SMap(P, E, [E.lookup((0,))])
    col = colimit([P, E, E], [(0, 1, a), (0, 2, b)])
    assert col.complex.counts() == (3, 2)
    assert find_iso(col.complex, horn_complex(2, 1)) is not None


def test_colimit_of_identity_diagram():
    X = standard_simplex(2)
    col = colimit([X, X], [(0, 1, identity_map(X))])
    assert find_iso(col.complex, X) is not None


def test_find_iso_examples():
    X = standard_simplex(2)
    f = find_iso(X, X)
    assert f == identity_map(X)
    disjoint = colimit([boundary(1), standard_simplex(0)], []).complex
    assert find_iso(standard_simplex(1), disjoint) is None


def test_enumerate_maps_counts_monotone_maps():
    assert len(enumerate_maps(standard_simplex(1), standard_simplex(2))) == 6
    for m in range(3):
        for n in range(3):
            assert len(enumerate_maps(standard_simplex(m), standard_simplex(n))) == len(_monotone_bruteforce(m, n))


def test_maps_closed_under_composition():
    A, B, C = standard_simplex(1), horn_complex(2, 1), standard_simplex(1)
    ab = enumerate_maps(A, B)
    bc = enumerate_maps(B, C)
    ac = set(enumerate_maps(A, C))
    for f in ab:
        for g in bc:
            assert f.then(g) in ac
