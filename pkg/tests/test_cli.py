import json

import pytest

from complicial.cli import main
from complicial.corpus import bundled, permute_attach
from complicial.serialize import dumps
from complicial.shapes import horn


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def machine(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--format", "machine")
    return code, json.loads(out)


def test_verify_bundled_certificate(capsys):
    code, rep = machine(capsys, "verify-cert", "sec2_A3_B0")
    assert code == 0 and rep["status"] == "VALID"
    assert rep["budgets"]["map_budget"] == 100000


def test_verify_certificate_file(capsys, tmp_path):
    bad = tmp_path / "bad.cert"
    bad.write_text(json.dumps(permute_attach(bundled("sec2_A3_B0"), 1)))
    code, rep = machine(capsys, "verify-cert", str(bad))
    assert code == 1 and rep["certificates"][0]["verdict"].startswith("INVALID(step 2")


def test_verify_all(capsys):
    code, rep = machine(capsys, "verify-cert", "--all")
    assert code == 0 and len(rep["certificates"]) == 12


def test_check_infty_on_horn_file(capsys, tmp_path):
    path = tmp_path / "h21.json"
    path.write_text(dumps(horn(2, 1)[0]))
    code, rep = machine(capsys, "check-infty", str(path), "--dim", "2")
    assert code == 1
    assert rep["counterexample"]["extension"] == "horn[2, 1]"


def test_check_infty_passes_on_point(capsys):
    code, out, _ = run(capsys, "check-infty", "delta(0)", "--dim", "3")
    assert code == 0 and "status: pass" in out


def test_budget_exit_code(capsys):
    code, rep = machine(capsys, "check-infty", "delta(1)", "--dim", "2", "--map-budget", "0")
    assert code == 3 and rep["status"] == "budget"


def test_eq(capsys):
    assert run(capsys, "eq", "cojoin(delta(0),delta(0))", "delta(1)")[0] == 0
    assert run(capsys, "eq", "delta(1)", "delta_t(1)")[0] == 1
    assert run(capsys, "eq", "eq3()", "sharp(3)", "--saturate", "--search-dim", "4")[0] == 0


def test_usage_errors_exit_2(capsys):
    code, _, err = run(capsys, "info", "delta(")
    assert code == 2 and err.startswith("error:")
    assert run(capsys, "verify-cert", "nope")[0] == 2
    assert run(capsys, "rlp", "--p", "terminal:delta(1)", "--i", "horn:2")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_build_and_info(capsys, tmp_path):
    out = tmp_path / "x.json"
    assert run(capsys, "build", "gray(delta(1),delta(1))", "-o", str(out))[0] == 0
    code, rep = machine(capsys, "info", str(out))
    assert code == 0 and rep["counts"] == [4, 5, 2] and rep["thin"] == [0, 0, 1]


def test_saturate_command(capsys):
    code, rep = machine(capsys, "saturate", "delta_k_prime(2,1)")
    assert code == 0 and len(rep["added"]) == 1


def test_rlp_command(capsys):
    assert run(capsys, "rlp", "--p", "terminal:delta(0)", "--i", "horn:2,1")[0] == 0
    assert run(capsys, "rlp", "--p", "terminal:horn(2,1)", "--i", "horn:2,1")[0] == 1


def test_dual_command(capsys):
    code, rep = machine(capsys, "dual", "delta(2)", "--kind", "co")
    assert code == 0 and rep["object"]["counts"] == [3, 4, 2]


def test_cells_compose_equiv(capsys):
    code, rep = machine(capsys, "cells", "delta_t(2)", "--n", "1")
    assert code == 0 and rep["count"] == 6
    rows = rep["cells"]
    a = next(j for j, r in enumerate(rows) if r.split(": ", 1)[1].startswith("1-cell ['12']"))
    b = next(j for j, r in enumerate(rows) if r.split(": ", 1)[1].startswith("1-cell ['01']"))
    code, rep = machine(capsys, "compose", "delta_t(2)", "--n", "1", str(a), str(b))
    assert code == 0 and rep["composite"] == "1-cell ['02']"
    assert run(capsys, "compose", "delta_t(2)", "--n", "1", str(b), str(b))[0] == 2
    assert run(capsys, "equiv", "delta_t(2)", "--n", "1", str(a), str(a))[0] == 0


def test_pi_command(capsys):
    code, rep = machine(capsys, "pi", "horn(2,1)")
    assert code == 0 and rep["undefined_compositions"] == 1
    assert run(capsys, "pi", "delta(1)", "--n", "1")[0] == 2


def test_fibration_commands(capsys):
    assert run(capsys, "check-g-fib", "terminal:delta_t(1)", "--dim", "1")[0] == 0
    assert run(capsys, "check-g-fib", "terminal:delta(1)", "--dim", "1")[0] == 1
    assert run(capsys, "check-ff-es", "identity:delta(1)")[0] == 0
    assert run(capsys, "check-fib", "identity:delta_c(1)")[0] == 0
    assert run(capsys, "check-fib", "terminal:sharp(1)", "--level", "hom", "--cell-dim", "1",
               "--class", "coleft")[0] == 0


def test_lift_command(capsys, tmp_path):
    from complicial.lifting import horn_extension, squares, to_terminal
    from complicial.serialize import map_to_dict
    from complicial.shapes import delta
    i = horn_extension(2, 1).map
    p = to_terminal(delta(1))
    sq = next(squares(p, i))
    doc = {"i": map_to_dict(i), "p": map_to_dict(p),
           "top": [{"eta": list(e), "cell": c} for e, c in sq.top.assign],
           "bottom": [{"eta": list(e), "cell": c} for e, c in sq.bottom.assign]}
    path = tmp_path / "sq.json"
    path.write_text(json.dumps(doc))
    code, rep = machine(capsys, "lift", str(path))
    assert code == 0 and rep["lift"]
    path.write_text(json.dumps({"i": doc["i"]}))
    assert run(capsys, "lift", str(path))[0] == 2
