import pytest

from complicial.constructions import cojoin, gray, join, suspension
from complicial.core import Complex, enumerate_maps, identity_map
from complicial.duality import co_dual, cosimplicial, full_dual, op_complex, op_dual, op_map
from complicial.shapes import (
    StratSet, cart_thin, delta, delta_k, delta_t, eq3, find_strat_iso, horn, truncate,
)


def _reversed_copy(X):
    """Rebuild a nonsingular stratified set with every vertex tuple read backwards."""
    gens = [tuple(reversed(X.cx.vertex_labels(X.cx.cell(c)))) for c in X.cx.cells()]
    key = {v: -j for j, v in enumerate(X.cx.labels)}
    Y = Complex.from_simplices([tuple(sorted(g, key=key.get)) for g in gens],
                               vertices=sorted(X.cx.labels, key=key.get))
    marks = {tuple(sorted(X.cx.vertex_labels(X.cx.cell(c)), key=key.get)) for c in X.t}
    t = frozenset(c for c in Y.cells() if Y.vertex_labels(Y.cell(c)) in marks)
    return StratSet(Y, t)


@pytest.mark.parametrize("X", [delta(2), delta_k(3, 1), horn(3, 2)[0], eq3(), delta_k(2, 0)])
def test_op_matches_reversed_copy(X):
    assert find_strat_iso(op_dual(X), _reversed_copy(X)) is not None


def test_op_of_simplices_and_horns():
    for n in range(4):
        assert find_strat_iso(op_dual(delta(n)), delta(n)) is not None
    assert find_strat_iso(op_dual(horn(2, 1)[0]), horn(2, 1)[0]) is not None
    assert find_strat_iso(op_dual(horn(2, 0)[0]), horn(2, 2)[0]) is not None
    assert find_strat_iso(op_dual(horn(2, 0)[0]), horn(2, 0)[0]) is None


def test_op_is_an_involution():
    for X in (gray(delta(1), delta(1)), suspension(delta(1)), join(delta_t(1), delta(1)), cart_thin(2, 1)):
        assert op_dual(op_dual(X)) == X


def test_op_keeps_cartesian_marks():
    X = cart_thin(2, 1)
    assert op_dual(X).c is not None and len(op_dual(X).c) == len(X.c)


def test_op_map_is_functorial():
    A, B = delta(1), delta(2)
    for f in enumerate_maps(A.cx, B.cx):
        assert not op_map(f).check()
        for g in enumerate_maps(B.cx, A.cx):
            assert op_map(f).then(op_map(g)) == op_map(f.then(g))
    assert op_map(identity_map(B.cx)) == identity_map(op_complex(B.cx))


# -- co

def test_cosimplicial_identities():
    assert cosimplicial(3).check_identities() == []


def test_co_of_small_simplices():
    assert find_strat_iso(co_dual(delta(0)), delta(0)) is not None
    assert find_strat_iso(co_dual(delta(1)), delta(1)) is not None


def test_co_of_triangle_is_a_cojoin():
    assert find_strat_iso(co_dual(delta(2)), cojoin(delta(1), delta(0))) is not None


def test_co_of_thin_edge():
    a = co_dual(delta_t(1))
    assert find_strat_iso(a, truncate(co_dual(delta(1)), 1)) is not None
    assert find_strat_iso(a, delta_t(1)) is not None


def test_co_bound_is_enforced():
    with pytest.raises(ValueError):
        co_dual(delta(3), co_bound=2)


def test_cosimplicial_bound():
    with pytest.raises(ValueError):
        cosimplicial(1).obj(2)


# -- full

def test_full_dual_small_cases():
    assert full_dual(delta(0)).cx.counts() == (1,)
    assert find_strat_iso(full_dual(delta(1)), delta(1)) is not None


def test_full_dual_of_triangle():
    a = full_dual(delta(2))
    b = op_dual(co_dual(delta(2)))
    assert find_strat_iso(a, b) is not None
    assert a.cx.counts() == co_dual(delta(2)).cx.counts()
