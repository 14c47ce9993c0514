import json

import pytest

from complicial.constructions import cojoin, gray
from complicial.core import identity_map
from complicial.homotopy import globe
from complicial.lifting import horn_extension, to_terminal
from complicial.serialize import (
    ExprError, SchemaError, dumps, dumps_map, evaluate, from_dict, load, loads, loads_map, resolve, save, to_dict,
)
from complicial.shapes import StratMap, cart_thin, delta, delta_t, find_strat_iso, horn


@pytest.mark.parametrize("X", [delta_t(2), globe(2), cart_thin(2, 1), horn(3, 1)[0], delta(0)])
def test_roundtrip(X):
    Y = loads(dumps(X))
    assert Y == X
    assert find_strat_iso(Y, X) == identity_map(X.cx)


def test_file_roundtrip(tmp_path):
    path = tmp_path / "g2.json"
    save(globe(2), path)
    assert load(path) == globe(2)
    assert resolve(str(path)) == globe(2)


def test_map_roundtrip():
    for f in (horn_extension(2, 1).map, to_terminal(delta_t(1))):
        g = loads_map(dumps_map(f))
        assert g.map.assign == f.map.assign and g.dom == f.dom and g.cod == f.cod


def _doc(X):
    return json.loads(json.dumps(to_dict(X)))


def test_marks_outside_the_cells_are_rejected():
    doc = _doc(delta_t(2))
    doc["t"].append(99)
    with pytest.raises(SchemaError) as err:
        from_dict(doc)
    assert "t[" in str(err.value) and "99" in str(err.value)


def test_vertex_marks_are_rejected():
    doc = _doc(delta_t(1))
    doc["t"] = [0]
    with pytest.raises(SchemaError):
        from_dict(doc)


def test_thin_outside_cartesian_is_rejected():
    doc = _doc(cart_thin(2, 1))
    doc["c"] = []
    with pytest.raises(SchemaError):
        from_dict(doc)


def test_broken_faces_are_rejected():
    doc = _doc(delta(2))
    cells = doc["cells"]
    cells[-1]["faces"] = cells[-1]["faces"][:2]
    with pytest.raises(SchemaError):
        from_dict(doc)


def test_bad_json_reports_position():
    with pytest.raises(SchemaError) as err:
        loads('{"cells": [}')
    assert "line 1" in str(err.value)


def test_unmarked_map_rejected():
    T = delta_t(1)
    f = StratMap(T, delta(1), identity_map(T.cx))
    with pytest.raises(SchemaError):
        loads_map(dumps_map(f))


# -- expressions

def test_expression_examples():
    assert find_strat_iso(evaluate("cojoin(delta(0),delta(0))"), delta(1)) is not None
    assert evaluate("trunc(delta(2),2)") == delta_t(2)
    G = evaluate("gray(delta(1),delta(1))")
    assert G.cx.counts() == (4, 5, 2) and len(G.t) == 1


def test_expression_matches_direct_calls():
    assert evaluate("gray(delta_t(1), delta(1))") == gray(delta_t(1), delta(1))
    assert evaluate("cojoin(delta(1), delta(0))") == cojoin(delta(1), delta(0))
    assert evaluate("horn(2, 1)") == horn(2, 1)[0]


@pytest.mark.parametrize("text", ["nope(1)", "delta(", "delta(delta(0))", "delta(1) + 2", "gray(delta(1))"])
def test_bad_expressions(text):
    with pytest.raises(ExprError):
        evaluate(text)


def test_resolve_rejects_unknown_path():
    with pytest.raises(FileNotFoundError):
        resolve("no_such_file.json")
