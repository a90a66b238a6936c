import io
import json

import pandas as pd
import pytest

from cli import EXIT_FAIL, EXIT_PASS, EXIT_REFUSED, RunConfig, degree_values, main, run
from partitions import Partition
from report import CheckReport


def invoke(capsys, *argv):
    status = main(list(argv))
    return status, capsys.readouterr().out


def test_degree_all_methods(capsys):
    status, out = invoke(capsys, "degree", "3,2,1", "--method", "all")
    assert status == EXIT_PASS
    for method in ("hook", "det", "deriv", "cap", "syt"):
        assert "  {}: 16".format(method) in out
    assert "degree 3,2,1: PASS" in out


def test_degree_of_empty_partition(capsys):
    status, out = invoke(capsys, "degree", "-")
    assert status == EXIT_PASS
    assert "  cap: 1" in out
    assert "  hook: 1" in out


def test_degree_single_method_json(capsys):
    status, out = invoke(capsys, "--format", "json", "degree", "2,2", "--method", "det")
    assert status == EXIT_PASS
    document = json.loads(out)
    assert document["command"] == "degree"
    assert document["verdict"] == "PASS"
    assert document["values"] == {"det": 2}
    assert document["checks"][0]["check"] == "degree 2,2"


def test_json_output_is_stable(capsys):
    _, first = invoke(capsys, "--format", "json", "verify", "giambelli", "2", "4")
    _, second = invoke(capsys, "--format", "json", "verify", "giambelli", "2", "4")
    assert first == second


def test_table_csv(capsys):
    status, out = invoke(capsys, "--format", "csv", "table", "4")
    assert status == EXIT_PASS
    frame = pd.read_csv(io.StringIO(out), dtype={"partition": str})
    assert list(frame.columns) == ["partition", "weight", "f_hook", "f_det", "f_deriv", "f_cap", "agree"]
    assert list(frame["partition"]) == ["4", "3,1", "2,2", "2,1,1", "1,1,1,1"]
    assert list(frame["f_hook"]) == [1, 3, 2, 3, 1]
    assert frame["agree"].all()


def test_table_plain_shows_the_regression_value(capsys):
    status, out = invoke(capsys, "table", "7")
    assert status == EXIT_PASS
    assert "f=21  Πh=240  Δ=1/240" in out


def test_identity_square(capsys):
    status, out = invoke(capsys, "identity", "square", "4")
    assert status == EXIT_PASS
    assert out.strip().splitlines()[-1] == "24 = 1+9+4+9+1 PASS"


def test_identity_powersum_integrals_lasf(capsys):
    assert invoke(capsys, "identity", "powersum", "2", "3")[0] == EXIT_PASS
    status, out = invoke(capsys, "identity", "integrals", "2,1")
    assert status == EXIT_PASS
    assert "∫ h_2,1 = 3" in out
    assert invoke(capsys, "identity", "lasf", "2,1")[0] == EXIT_PASS


def test_verify_sweeps(capsys):
    assert invoke(capsys, "verify", "theorem13", "2", "4")[0] == EXIT_PASS
    assert invoke(capsys, "verify", "giambelli", "2", "4")[0] == EXIT_PASS
    status, out = invoke(capsys, "verify", "fock", "2", "4", "2")
    assert status == EXIT_PASS
    assert "2 of 2 checks passed" in out


def test_expand(capsys):
    status, out = invoke(capsys, "expand", "x1^2")
    assert status == EXIT_PASS
    assert out.strip() == "S[2] + S[1,1]"
    status, out = invoke(capsys, "--format", "json", "expand", "x2")
    assert json.loads(out)["expansion"] == [{"partition": "2", "coef": "1/2"}, {"partition": "1,1", "coef": "-1/2"}]


def test_parse_errors_exit_with_usage_code(capsys):
    with pytest.raises(SystemExit) as excinfo:
        main(["degree", "2,3"])
    assert excinfo.value.code == 2
    with pytest.raises(SystemExit) as excinfo:
        main(["verify", "theorem13", "two", "4"])
    assert excinfo.value.code == 2


def test_cutoff_refusals(capsys):
    status, out = invoke(capsys, "--syt-cutoff", "15", "degree", "2,1")
    assert status == EXIT_REFUSED
    assert out.startswith("refused:")
    status, out = invoke(capsys, "--formula-cutoff", "5", "degree", "3,3")
    assert status == EXIT_REFUSED
    assert invoke(capsys, "verify", "theorem13", "3", "2")[0] == EXIT_REFUSED
    assert invoke(capsys, "expand", "y1")[0] == EXIT_REFUSED


def test_syt_skipped_above_cutoff(capsys):
    status, out = invoke(capsys, "--syt-cutoff", "3", "degree", "2,2")
    assert status == EXIT_PASS
    assert "syt: skipped" in out


def test_output_file(tmp_path, capsys):
    target = tmp_path / "degree.json"
    status = main(["--format", "json", "--output", str(target), "degree", "2,2"])
    assert status == EXIT_PASS
    assert capsys.readouterr().out == ""
    assert json.loads(target.read_text(encoding="utf-8"))["values"]["hook"] == 2


def test_run_with_worker_pool():
    status, out = run(RunConfig(command="table", d=5, workers=2))
    assert status == EXIT_PASS
    assert "table 5: PASS" in out


def test_failed_checks_give_exit_status_one(monkeypatch):
    import cli

    def broken(n):
        return CheckReport("square {}".format(n)).fail("forced mismatch")

    monkeypatch.setattr(cli, "square_identity_check", broken)
    status, out = run(RunConfig(command="identity", action="square", d=3))
    assert status == EXIT_FAIL
    assert "square 3: FAIL" in out
    assert "forced mismatch" in out


def test_run_config_defaults():
    status, out = run(RunConfig(command="degree", partition=Partition((2, 2)), method="hook"))
    assert status == EXIT_PASS
    assert "hook: 2" in out


def test_degree_values_accepts_plain_tuples():
    assert degree_values((2, 2)) == {"hook": 2, "det": 2, "deriv": 2, "cap": 2}
    assert set(degree_values((3, 2, 2)).values()) == {21}
    assert degree_values((), ("cap",)) == {"cap": 1}
