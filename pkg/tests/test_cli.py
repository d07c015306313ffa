import json

from qsym.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_compute_qi_all_agrees(capsys):
    code, out, _ = run(
        capsys, "compute", "--family", "qI", "--lambda", "1", "--k", "1", "--m", "1"
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 5  # definition, tableau, branch, pfaffian, lgv
    assert all(line.endswith("2*x1 + 2*x1^-1 + 2*x2") for line in lines)


def test_compute_not_contained_is_zero(capsys):
    code, out, _ = run(
        capsys,
        "compute", "--family", "qI", "--lambda", "2,1", "--mu", "3", "--k", "1", "--m", "1",
    )
    assert code == 0
    assert all(line.split(": ")[1] == "0" for line in out.strip().splitlines())


def test_compute_non_strict_exit_3(capsys):
    code, _, err = run(capsys, "compute", "--family", "qA", "--lambda", "2,2", "--m", "2")
    assert code == 3
    assert "strict" in err


def test_compute_parse_error_exit_2(capsys):
    code, _, _ = run(capsys, "compute", "--family", "qA", "--lambda", "2,x", "--m", "2")
    assert code == 2


def test_compute_row_limit_exit_3(capsys):
    code, _, _ = run(capsys, "compute", "--family", "qI", "--lambda", "2,1", "--m", "1")
    assert code == 3


def test_compute_json_round_trip(capsys):
    code, out, _ = run(
        capsys,
        "compute", "--family", "qC", "--lambda", "2,1", "--k", "2", "--json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["agree"] is True
    terms = payload["routes"]["pfaffian"]["terms"]
    assert terms and all(isinstance(t["coeff"], str) for t in terms)


def test_compute_single_method_prints_bare_polynomial(capsys):
    code, out, _ = run(
        capsys,
        "compute", "--family", "schur", "--lambda", "2,1", "--m", "2",
    )
    assert code == 0
    assert out.strip() == "x1^2*x2 + x1*x2^2"


def test_compute_symp_schur_tableau_route(capsys):
    code, out, _ = run(
        capsys,
        "compute", "--family", "symp-schur", "--lambda", "1,1", "--k", "2", "--method", "all",
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 2
    assert lines[0].split(": ")[1] == lines[1].split(": ")[1]


def test_series_output_and_exit(capsys):
    code, out, _ = run(capsys, "series", "--k", "1", "--degree", "1")
    assert code == 0
    assert out.strip().splitlines() == ["1", "2*x1 + 2*x1^-1"]


def test_series_no_variables(capsys):
    code, out, _ = run(capsys, "series", "--degree", "3")
    assert code == 0
    assert out.strip().splitlines() == ["1", "0", "0", "0"]


def test_verify_small_budget(capsys):
    code, out, _ = run(
        capsys, "verify", "--suite", "qfun", "--max-weight", "3", "--max-vars", "2"
    )
    assert code == 0
    assert "PASS qfun.def-tableau-branch" in out


def test_verify_trivial_budget(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "all", "--max-weight", "0", "--max-vars", "1")
    assert code == 0
    assert "checks passed" in out


def test_inter_schur_family(capsys):
    code, out, _ = run(
        capsys,
        "compute", "--family", "inter-schur", "--lambda", "1", "--k", "1", "--m", "1",
        "--method", "all",
    )
    assert code == 0
    for line in out.strip().splitlines():
        assert line.endswith("x1 + x1^-1 + x2")
