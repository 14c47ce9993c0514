import pytest

from complicial.constructions import gray, join, product
from complicial.saturation import (
    ClosureConfig, closure_report, is_saturated, saturate, saturate_bimarked, saturate_marked,
)
from complicial.shapes import (
    StratSet, cart_thin, cartesian_corner, cart_thin2, delta, delta_c, delta_k, delta_k_dprime, delta_k_prime, delta_t, eq3,
    sharp,
)


def _thinness_oracle(X, search_dim):
    """Naive fixpoint: scan every simplex of X for a (Delta^k[n])' pattern and mark its k-face."""
    t = set(X.t)
    cx = X.cx
    def thin(s):
        return len(s[0]) > 1 and (len(set(s[0])) < len(s[0]) or s[1] in t)
    changed = True
    while changed:
        changed = False
        for n in range(2, search_dim + 1):
            for k in range(n + 1):
                P = delta_k_prime(n, k)
                need = [P.cx.vertex_labels(P.cx.cell(c)) for c in P.t]
                need = [u for u in need if len(u) < n]  # the k-face pattern is checked below
                need += [tuple(range(n + 1))]
                need += [tuple(j for j in range(n + 1) if j != i) for i in (k - 1, k + 1) if 0 <= i <= n]
                kface = tuple(j for j in range(n + 1) if j != k)
                for s in cx.simplices(n):
                    if all(thin(cx.apply(s, u)) for u in set(need)):
                        f = cx.apply(s, kface)
                        if not thin(f):
                            t.add(f[1])
                            changed = True
    return frozenset(t)


SAMPLES = [
    delta_k_prime(2, 1), delta_k_prime(3, 1), delta_k_prime(3, 0), delta_k(3, 2),
    gray(delta(1), delta(1)), gray(delta_t(1), delta(1)), join(delta_t(1), delta(1)),
    product(delta_t(1), delta_t(1)), gray(delta(2), delta(1)),
]


@pytest.mark.parametrize("X", SAMPLES)
def test_thinness_closure_matches_naive_fixpoint(X):
    cfg = ClosureConfig(X.cx.dim_bound, frozenset({"thinness"}))
    assert saturate_marked(X, cfg).t == _thinness_oracle(X, X.cx.dim_bound)


def test_fixpoint_is_unchanged():
    for X in (delta(2), delta_t(1), delta_k(2, 1)):
        assert saturate(X, 3) == X


def test_primed_closes_to_double_primed():
    assert saturate(delta_k_prime(2, 1), 2) == delta_k_dprime(2, 1)


def test_eq3_saturates_to_sharp():
    assert saturate_marked(eq3(), 4) == sharp(3)


def test_eq3_needs_the_search_dimension():
    assert saturate_marked(eq3(), ClosureConfig(4, frozenset({"thinness"}))) != sharp(3)


def test_bimarked_examples():
    X = StratSet(delta(2).cx, frozenset(), frozenset())
    assert saturate_bimarked(X, 3) == X
    assert saturate_bimarked(cart_thin(2, 1), 3) == cart_thin2(2, 1)
    assert saturate(delta_c(1), 2) == delta_c(1)


def test_cartesian_corner_instance():
    start, target = cartesian_corner(2, 1)
    assert start.cx == target.cx and start.cart < target.cart
    assert saturate_bimarked(start, 4) == target


def test_cartesian_corner_is_not_an_identity_over_a_point():
    start, target = cartesian_corner(2, 0)
    assert saturate_bimarked(start, 4) != target


def test_is_saturated():
    ok, bad = is_saturated(delta_k_prime(2, 1), 2)
    assert not ok and len(bad) == 1
    assert is_saturated(delta_t(1), 2)[0]
    for X in SAMPLES:
        assert is_saturated(saturate(X, 3), 3)[0]


def test_closure_report_lists_additions():
    rep = closure_report(delta_k_prime(2, 1), 2)
    assert [r[0] for r in rep.added] == ["thinness"]
    assert rep.result == delta_k_dprime(2, 1)


def test_config_rejects_unknown_rule():
    with pytest.raises(ValueError):
        ClosureConfig(2, frozenset({"magic"}))


def test_collapsed_tensor_needs_saturation():
    from complicial.constructions import gray, suspension
    from complicial.corpus import collapsed_tensor
    from complicial.shapes import find_strat_iso
    a, b = collapsed_tensor(delta(1), "A1"), suspension(gray(delta(1), delta(1)))
    # the thin triangle of A1 pushes one mark more than the suspension carries
    assert (len(a.t), len(b.t)) == (12, 11)
    assert find_strat_iso(a, b) is None
    assert find_strat_iso(saturate(a, 5), saturate(b, 5)) is not None
