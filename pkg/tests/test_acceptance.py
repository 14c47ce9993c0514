"""Acceptance criteria, one printed verdict line each.

Run with ``pytest -s tests/test_acceptance.py`` or ``python tests/test_acceptance.py``.
"""

import os
import sys
import time

sys.path.insert(0, os.path.dirname(__file__))

from property_suites import SUITES
from test_lifting import _diagonals_bruteforce, _random_squares

from complicial.constructions import cojoin, diamond_vertex, gamma, gamma_section, gray, suspension
from complicial.core import identity_map
from complicial.corpus import (
    bundled, bundled_names, collapsed_tensor, drop_mark, drop_step, extra_mark, permute_attach, shift_horn,
)
from complicial.duality import co_dual
from complicial.lifting import check_infty, find_lift, verify_certificate
from complicial.saturation import saturate, saturate_bimarked
from complicial.shapes import CORNER_VARIANTS, cartesian_corner, delta, delta_t, find_strat_iso, horn, truncate

CORPUS_SECONDS = 60.0
PROPERTY_INSTANCES = 10_000
LIFT_SQUARES = 100


def _report(n, ok, detail):
    print(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")
    return ok


def _controls(cert):
    out = [permute_attach(cert, 0), drop_step(cert, 0), extra_mark(cert)]
    if cert["steps"][0].get("shape") == "horn":
        out.append(shift_horn(cert, 0))
    if cert.get("final") == "exact":
        out.append(drop_mark(cert))
    return out


def criterion_1():
    start = time.perf_counter()
    names = bundled_names()
    bad = [n for n in names if not verify_certificate(bundled(n)).valid]
    leaky = [n for n in names if any(verify_certificate(c).valid for c in _controls(bundled(n)))]
    secs = time.perf_counter() - start
    ok = len(names) == 12 and not bad and not leaky and secs < CORPUS_SECONDS
    return _report(1, ok, f"corpus {len(names) - len(bad)}/{len(names)} valid, "
                          f"controls rejected for {len(names) - len(leaky)}/{len(names)}, "
                          f"{secs:.1f}s (limit {CORPUS_SECONDS:.0f}s)")


def _iso(a, b):
    return find_strat_iso(a, b) is not None


def _collapsed_pairs():
    for X, tag in ((delta(0), "D0"), (delta(1), "D1")):
        yield f"A1[{tag}]", collapsed_tensor(X, "A1"), suspension(gray(X, delta(1)))
        yield f"A4[{tag}]", collapsed_tensor(X, "A4"), gray(suspension(X), delta(1))


def criterion_2():
    checks = {
        "cojoin(D0,D0)=D1": _iso(cojoin(delta(0), delta(0)), delta(1)),
        "co(D1_t)=D1_t": _iso(co_dual(delta_t(1)), delta_t(1)),
        "co(D2)=cojoin(D1,D0)": _iso(co_dual(delta(2)), cojoin(delta(1), delta(0))),
    }
    for n in (1, 2, 3):
        checks[f"trunc_{n}(D{n})=D{n}_t"] = truncate(delta(n), n) == delta_t(n)
    for name, a, b in _collapsed_pairs():
        d = max(a.cx.dim_bound, b.cx.dim_bound) + 2
        checks[name] = _iso(saturate(a, d), saturate(b, d))
    failed = [k for k, v in checks.items() if not v]
    return _report(2, not failed, f"{len(checks) - len(failed)}/{len(checks)} exact isomorphisms"
                                  + (f", failed {failed}" if failed else ""))


def criterion_3():
    bad, total = [], 0
    for n in range(4):
        for m in range(4):
            G = gamma(delta(n), delta(m))
            s = gamma_section(n, m, G)
            ok = s.then(G.map.map) == identity_map(G.join.complex)
            for k in range(n + 1):
                for e in (0, 1):
                    for l in range(m + 1):
                        got = G.map.map.then(s)(((0,), diamond_vertex(G, k, e, l)))
                        ok &= got == ((0,), diamond_vertex(G, k + e * (n - k), e, e * l))
            total += 1
            if not ok:
                bad.append((n, m))
    return _report(3, not bad, f"gamma identities hold for {total - len(bad)}/{total} pairs n,m<=3")


def criterion_4():
    bad, total = [], 0
    for variant in CORNER_VARIANTS:
        for n in range(4):
            for m in range(1, 4):
                start, target = cartesian_corner(n, m, variant)
                total += 1
                if saturate_bimarked(start, n + m + 1) != target:
                    bad.append((variant, n, m))
    return _report(4, not bad, f"cartesian corners saturate to the product marking in {total - len(bad)}/{total}"
                               f" cases (n<=3, 1<=m<=3)")


def criterion_5():
    counts = {k: f() for k, f in SUITES.items()}
    total = sum(counts.values())
    return _report(5, total >= PROPERTY_INSTANCES, f"{total} property instances (minimum {PROPERTY_INSTANCES})")


def criterion_6():
    point = check_infty(delta(0), 4).status == "pass"
    rep = check_infty(horn(2, 1)[0], 2)
    ext, res = rep.first_failure
    witness = (ext.name, ext.params) == ("horn", (2, 1)) and res.counterexample.top.is_iso()
    agree = 0
    for sq in _random_squares(LIFT_SQUARES):
        brute = _diagonals_bruteforce(sq)
        found = find_lift(sq)
        agree += (found is None) == (brute == []) and (found is None or found in brute)
    ok = point and witness and agree == LIFT_SQUARES
    return _report(6, ok, f"D0 fibrant={point}, horn witness={witness}, "
                          f"lift search agrees on {agree}/{LIFT_SQUARES} squares")


def test_criterion_1_certificate_corpus():
    assert criterion_1()


def test_criterion_2_exact_equalities():
    assert criterion_2()


def test_criterion_3_gamma_identities():
    assert criterion_3()


def test_criterion_4_cartesian_corners():
    assert criterion_4()


def test_criterion_5_property_volume():
    assert criterion_5()


def test_criterion_6_fibrancy_and_lifts():
    assert criterion_6()


if __name__ == "__main__":
    results = [c() for c in (criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6)]
    sys.exit(0 if all(results) else 1)
