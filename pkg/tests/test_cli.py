import json

import pytest

from tautint.cli import main


def run_cli(args, capsys):
    code = main(args)
    out = capsys.readouterr().out
    return code, out


def test_chi_values(capsys):
    code, out = run_cli(["chi", "1", "1"], capsys)
    assert code == 0 and out.strip() == "-1/12"
    code, out = run_cli(["chi", "0", "3"], capsys)
    assert code == 0 and out.strip() == "1"
    code, out = run_cli(["chi", "2", "1", "--route", "omega"], capsys)
    assert code == 0 and out.strip() == "1/120"


def test_chi_json_format(capsys):
    code, out = run_cli(["chi", "1", "2", "--format", "json"], capsys)
    assert code == 0
    payload = json.loads(out.strip())
    assert payload["value"] == "1/12"


def test_mv_and_hodge_and_omega(capsys):
    code, out = run_cli(["mv", "1", "1"], capsys)
    assert code == 0 and out.strip() == "1/12"
    code, out = run_cli(["hodge", "1", "1", "1", "0"], capsys)
    assert code == 0 and out.strip() == "1/24"
    code, out = run_cli(["omega", "1", "1", "1", "--", "-1", "0"], capsys)
    assert code == 0 and out.strip() == "-1/12"
    code, out = run_cli(["omega", "1", "2", "2", "1", "0,2", "--test-class", "k1"], capsys)
    assert code == 0 and out.strip() == "1/48"


def test_usage_errors(capsys):
    code, _ = run_cli(["chi", "0", "2"], capsys)
    assert code == 2
    code, _ = run_cli(["omega", "1", "1", "2", "0", "1"], capsys)
    assert code == 2
    with pytest.raises(SystemExit) as exc:
        main(["chi"])  # missing arguments
    assert exc.value.code == 2


def test_verify_small_subset(capsys):
    # the "small" grid is exercised in the acceptance suite; here just check
    # the output shape on the tiniest grid via the library-level runner
    from tautint.checks import CheckGrid, iter_suite
    from fractions import Fraction as F

    reports = list(iter_suite(CheckGrid(max_dim=0, max_r=1, s_values=(0,), x_values=(F(1),))))
    assert reports and all(r.passed for r in reports)
    line = reports[0].to_json()
    assert json.loads(line)["pass"] is True


def test_table_deterministic_and_parallel(capsys):
    code, out1 = run_cli(["table", "--dimmax", "2"], capsys)
    assert code == 0
    code, out2 = run_cli(["table", "--dimmax", "2"], capsys)
    assert out1 == out2
    code, out8 = run_cli(["table", "--dimmax", "2", "--jobs", "2"], capsys)
    assert out1 == out8
    assert out1.splitlines()[0] == "g,n,value,route"


def test_cache_flag_roundtrip(tmp_path, capsys):
    path = tmp_path / "psi.txt"
    code, out1 = run_cli(["chi", "1", "2", "--cache", str(path)], capsys)
    assert code == 0 and path.exists()
    code, out2 = run_cli(["chi", "1", "2", "--cache", str(path)], capsys)
    assert out1 == out2


def test_decimal_warns(capsys):
    code = main(["chi", "1", "1", "--decimal", "6"])
    captured = capsys.readouterr()
    assert code == 0
    assert "warning" in captured.err
    assert captured.out.strip() == "-0.0833333"
