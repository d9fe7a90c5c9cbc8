import json

from macdaha.cli import main
from macdaha.suites import SUITES, list_suites


def run(capsys, argv):
    rc = main(argv)
    out, err = capsys.readouterr()
    return rc, out, err


def test_poly_eigen_generic(capsys):
    rc, out, _ = run(capsys, ["poly", "--lambda", "2,0", "--vars", "2",
                              "--method", "eigen", "--generic"])
    assert rc == 0
    doc = json.loads(out)
    assert doc["n"] == 2 and doc["basis"] == "monomial-symmetric"
    coeffs = {tuple(t["sig"]): t["coeff"] for t in doc["terms"]}
    assert coeffs[(2, 0)] == "1"
    assert coeffs[(1, 1)] == "(q^2*t^2 - q^2 + t^2 - 1)/(q^2*t^2 - 1)"


def test_poly_methods_agree(capsys):
    docs = []
    for method in ("eigen", "branch", "gt"):
        rc, out, _ = run(capsys, ["poly", "--lambda", "2,1,0", "--vars", "3",
                                  "--method", method])
        assert rc == 0
        docs.append(out)
    assert docs[0] == docs[1] == docs[2]


def test_psi_verbs(capsys):
    rc, out, _ = run(capsys, ["psi", "--lambda", "2,0", "--mu", "1", "--k", "1"])
    assert rc == 0
    assert json.loads(out) == {"value": "1", "route": "psi_qnum"}
    rc, out, _ = run(capsys, ["psi", "--lambda", "2,0", "--mu", "1", "--generic"])
    assert rc == 0
    doc = json.loads(out)
    assert doc["route"] == "psi_branch"
    assert doc["value"] == "(q*t - q + t - 1)/(q*t - 1)"


def test_matelt_routes_agree(capsys):
    vals = {}
    for route in ("mat_elt", "diag_sum"):
        rc, out, _ = run(capsys, ["matelt", "--lambda", "1,0", "--mu", "0",
                                  "--k", "2", "--route", route])
        assert rc == 0
        vals[route] = json.loads(out)["value"]
    assert vals["mat_elt"] == vals["diag_sum"]
    rc, out, _ = run(capsys, ["matelt", "--lambda", "1,0", "--mu", "0",
                              "--k", "2", "--route", "cg_sq"])
    assert json.loads(out)["route"] == "cg_sq"


def test_trace_verbs(capsys):
    rc, out, _ = run(capsys, ["trace", "--lambda", "0,0", "--vars", "2", "--k", "2"])
    assert rc == 0
    doc = json.loads(out)
    assert doc["basis"] == "laurent-monomial"
    rc, out, _ = run(capsys, ["trace", "--lambda", "1,0", "--vars", "2",
                              "--k", "2", "--ratio"])
    assert rc == 0
    assert json.loads(out)["basis"] == "monomial-symmetric"


def test_usage_errors_exit_2(capsys):
    cases = [
        ["psi", "--lambda", "2,0", "--mu", "3", "--k", "1"],     # not interlacing
        ["psi", "--lambda", "2,0", "--mu", "1", "--k", "0"],     # k < 1
        ["poly", "--lambda", "1,2", "--vars", "2"],              # not decreasing
        ["poly", "--lambda", "2,0", "--vars", "3"],              # length mismatch
        ["verify", "--suite", "does-not-exist"],
        ["verify"],
        ["matelt", "--lambda", "2,0", "--mu", "1,1", "--k", "2"],
    ]
    for argv in cases:
        rc, out, err = run(capsys, argv)
        assert rc == 2, argv
        assert err.strip() and len(err.strip().splitlines()) == 1


def test_verify_suite_report_shape(capsys):
    rc, out, _ = run(capsys, ["verify", "--suite", "qfield-axioms",
                              "--samples", "4", "--seed", "1"])
    assert rc == 0
    doc = json.loads(out)
    assert doc["suite"] == "qfield-axioms"
    assert doc["seed"] == 1
    assert doc["pass"] is True
    assert all(set(c) == {"name", "pass"} for c in doc["checks"])


def test_verify_deterministic_output(capsys):
    argv = ["verify", "--suite", "daha-relations", "--n", "2", "--samples",
            "3", "--seed", "7"]
    rc1, out1, _ = run(capsys, argv)
    rc2, out2, _ = run(capsys, argv)
    assert rc1 == rc2 == 0
    assert out1 == out2


def test_poly_deterministic_output(capsys):
    argv = ["poly", "--lambda", "3,1", "--vars", "2", "--method", "branch"]
    _, out1, _ = run(capsys, argv)
    _, out2, _ = run(capsys, argv)
    assert out1 == out2


def test_suite_catalog():
    cat = list_suites()
    names = [c["suite"] for c in cat]
    assert len(set(names)) == len(names)
    for required in ("qfield-axioms", "macops-eigen", "constructor-agreement",
                     "symmetry", "adjoint", "daha-relations",
                     "spherical-macdonald", "res-intertwine", "res-diff",
                     "matelt-routes", "branch", "trace"):
        assert required in names
    assert all(c["description"].strip() for c in cat)
    assert set(names) == set(SUITES)


def test_verify_all_small(capsys):
    rc, out, _ = run(capsys, ["verify", "--suite", "all", "--n", "2", "--l", "2",
                              "--k", "2", "--maxdeg", "2", "--samples", "3",
                              "--seed", "0"])
    assert rc == 0
    doc = json.loads(out)
    assert doc["pass"] is True
    assert len(doc["suites"]) == len(SUITES)
