import json

from click.testing import CliRunner

from algcomb.cli import main


def run(*args):
    return CliRunner().invoke(main, args)


def clean_lines(result):
    return [
        line
        for line in result.output.splitlines()
        if not line.startswith("runtime:")
    ]


def payload(result):
    return json.loads("\n".join(clean_lines(result)))


def test_lr_command():
    result = run("lr", "--mu", "1", "--nu", "1", "--lambda", "2")
    assert result.exit_code == 0
    assert payload(result)["c"] == 1


def test_lr_meta_header():
    result = run("lr", "--mu", "2,1", "--nu", "1", "--lambda", "2,2")
    data = payload(result)
    assert data["meta"]["version"]
    assert "lr" in data["meta"]["command"]


def test_schur_expand_command():
    result = run("schur-expand", "--mu", "2", "--nu", "1,1")
    data = payload(result)
    assert data["coefficients"] == {"3,1": 1, "2,1,1": 1}


def test_nfact_command():
    result = run("nfact", "--mu", "2,1")
    data = payload(result)
    assert data["dim"] == 6


def test_diag_command():
    result = run("diag", "--n", "2")
    data = payload(result)
    assert data["total"] == 3
    assert data["catalan_check"] is True


def test_coinv_command():
    result = run("coinv", "--n", "3")
    data = payload(result)
    assert data["dim"] == 6
    assert data["q_factorial_match"] is True


def test_hall_command():
    result = run("hall", "--lambda", "1,1", "--mu", "1", "--nu", "1")
    data = payload(result)
    assert data["polynomial"] == [1, 1]
    assert data["positive_after_shift"] is True


def test_horn_command():
    result = run(
        "horn", "--n", "2", "--alpha", "2,1", "--beta", "1,0",
        "--gamma", "3,1",
    )
    data = payload(result)
    assert data["horn_feasible"] is True
    assert data["agree"] is True


def test_saturation_command():
    result = run("saturation", "--bound", "3", "--m-max", "2")
    data = payload(result)
    assert data["violations"] == []
    assert result.exit_code == 0


def test_lis_expect_command():
    result = run("lis", "expect", "--n", "4")
    data = payload(result)
    assert data["numerator"] == 29 and data["denominator"] == 12


def test_lis_uk_command():
    result = run("lis", "uk", "--k", "2", "--max-n", "6")
    assert payload(result)["counts"] == [1, 1, 2, 5, 14, 42, 132]


def test_lis_sample_csv_deterministic():
    a = run("lis", "sample", "--n", "12", "--samples", "4", "--seed", "3")
    b = run("lis", "sample", "--n", "12", "--samples", "4", "--seed", "3")
    assert clean_lines(a) == clean_lines(b)
    rows = [
        line
        for line in clean_lines(a)
        if line and not line.startswith("#") and line != "chi"
    ]
    assert len(rows) == 4


def test_tw_cdf_csv():
    result = run("tw", "cdf", "--tmin", "-2", "--tmax", "2", "--step", "1")
    rows = [r for r in clean_lines(result) if not r.startswith("#")]
    assert rows[0] == "t,F"
    assert len(rows) == 6
    t0, f0 = rows[3].split(",")
    assert float(t0) == 0.0
    assert abs(float(f0) - 0.9694) < 1e-3


def test_usage_error_exit_code():
    result = run("lr", "--mu", "bogus", "--nu", "1", "--lambda", "2")
    assert result.exit_code == 2


def test_tw_compare_roundtrip(tmp_path):
    out = tmp_path / "chi.csv"
    run(
        "lis", "sample", "--n", "64", "--samples", "50", "--seed", "5",
        "--output", str(out),
    )
    result = run("tw", "compare", "--lis-csv", str(out))
    data = payload(result)
    assert data["count"] == 50
    assert 0.0 <= data["ks"] <= 1.0
