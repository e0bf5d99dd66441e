import json

from riordan.cli import main, matrix_from_json, matrix_to_json
from riordan.matrix import FinMatrix
from riordan.numerator import W_matrix, exp_matrix


def run(capsys, *args):
    code = main(list(args))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_series_catalan(capsys):
    code, out, _ = run(capsys, "series", "catalan", "--order", "4")
    assert code == 0
    assert out.strip() == "1, 1, 2, 5, 14"


def test_series_geometric_default_format(capsys):
    code, out, _ = run(capsys, "series", "1/(1-x)", "--order", "3")
    assert code == 0
    assert out.strip() == "1, 1, 1, 1"


def test_series_genbin_half(capsys):
    code, out, _ = run(capsys, "series", "genbin(1/2, 1)", "--order", "3")
    assert code == 0
    assert out.strip() == "1, 1, 1/2, 1/8"


def test_series_env_default_order(capsys, monkeypatch):
    monkeypatch.setenv("RIORDAN_ORDER_DEFAULT", "2")
    code, out, _ = run(capsys, "series", "1/(1-x)")
    assert code == 0
    assert out.strip() == "1, 1, 1"


def test_series_parse_error(capsys):
    code, out, err = run(capsys, "series", "1 + $")
    assert code == 1
    assert "position" in err


def test_series_domain_error(capsys):
    code, out, err = run(capsys, "series", "1/x")
    assert code == 1
    assert "error" in err


def test_matrix_s3(capsys):
    code, out, _ = run(capsys, "matrix", "S", "--n", "3", "--format", "csv")
    assert code == 0
    want = exp_matrix("S", 3)
    got = [[int(v) for v in line.split(",")] for line in out.strip().splitlines()]
    assert FinMatrix(got) == want


def test_matrix_w(capsys):
    code, out, _ = run(capsys, "matrix", "W", "--n", "3", "--m", "2",
                       "--format", "csv")
    assert code == 0
    assert out.strip().splitlines() == ["4,1,0", "4,6,4", "0,1,4"]


def test_matrix_j_text_grid(capsys):
    code, out, _ = run(capsys, "matrix", "J", "--n", "3")
    assert code == 0
    rows = [line.split() for line in out.strip().splitlines()]
    assert rows == [["0", "0", "0", "1"], ["0", "0", "1", "0"],
                    ["0", "1", "0", "0"], ["1", "0", "0", "0"]]


def test_matrix_usage_errors(capsys):
    code, _, err = run(capsys, "matrix", "G", "--n", "2")
    assert code == 2 and "beta" in err
    code, _, err = run(capsys, "matrix", "W", "--n", "2")
    assert code == 2 and "m" in err
    code, _, err = run(capsys, "matrix", "U", "--n", "2", "--beta", "1")
    assert code == 2
    code, _, err = run(capsys, "matrix", "W", "--n", "2", "--m", "2",
                       "--beta", "1")
    assert code == 2


def test_matrix_json_round_trip(capsys):
    code, out, _ = run(capsys, "matrix", "H", "--n", "3", "--beta", "1/2",
                       "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["kind"] == "H" and payload["n"] == 3 and payload["beta"] == "1/2"
    from riordan.genlagrange import beta_matrix
    from fractions import Fraction as Q
    assert matrix_from_json(out) == beta_matrix("H", 3, Q(1, 2))


def test_matrix_to_json_helper():
    w = W_matrix(2, 2)
    text = matrix_to_json(w, "W", 2, m=2)
    assert matrix_from_json(text) == w


def test_numerator_euler(capsys):
    code, out, _ = run(capsys, "numerator", "euler", "--a", "exp(x)", "--n", "4")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[1] == "coeffs: 0, 1/24, 11/24, 11/24, 1/24"
    assert lines[2] == "residual_checked: 5"


def test_numerator_narayana(capsys):
    code, out, _ = run(capsys, "numerator", "narayana", "--a", "1/(1-x)",
                       "--n", "2", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["coeffs"] == ["0", "6", "6"]


def test_numerator_alpha(capsys):
    code, out, _ = run(capsys, "numerator", "alpha", "--a", "1+x", "--n", "5",
                       "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["coeffs"] == ["0", "0", "0", "0", "0", "1"]


def test_numerator_bumps_order(capsys):
    # n = 4 needs order 18 even though the default is 16
    code, out, _ = run(capsys, "numerator", "narayana", "--a", "1/(1-x)",
                       "--n", "4", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["residual_checked"] == 5


def test_numerator_alpha_rejects_weight(capsys):
    code, _, err = run(capsys, "numerator", "alpha", "--b", "2", "--a", "1+x",
                       "--n", "2")
    assert code == 2


def test_verify_single_suite(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "thm2.1")
    assert code == 0
    assert out.strip().splitlines() == ["PASS thm2.1", "passed 1/1"]


def test_verify_unknown_suite(capsys):
    code, _, err = run(capsys, "verify", "--suite", "nope")
    assert code == 2


def test_verify_fixtures_json(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "fixtures", "--format",
                       "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["passed"] == payload["total"] == 1
    assert payload["checks"][0]["name"] == "fixtures"


def test_verify_deterministic_output(capsys):
    _, out1, _ = run(capsys, "verify", "--suite", "thm2.3", "--seed", "5")
    _, out2, _ = run(capsys, "verify", "--suite", "thm2.3", "--seed", "5")
    assert out1 == out2


def test_verify_failure_exits_nonzero(capsys, monkeypatch):
    import riordan.cli as cli
    from riordan.verify import CheckResult, Report

    def fake_run_suite(suite, max_n, betas, seed):
        report = Report(suite)
        report.results.append(CheckResult("thm0.0", False, "n=1: got 0, want 1"))
        return report

    monkeypatch.setattr(cli, "run_suite", fake_run_suite)
    code, out, _ = run(capsys, "verify", "--suite", "all")
    assert code == 1
    assert "FAIL thm0.0" in out


def test_verify_custom_betas(capsys):
    # the = form keeps argparse from reading a leading '-' as an option
    code, out, _ = run(capsys, "verify", "--suite", "thm6.1",
                       "--betas=-2,1/2,3", "--max-n", "4")
    assert code == 0
    assert "PASS thm6.1" in out
