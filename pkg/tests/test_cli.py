import json
import subprocess
import sys

import pytest
from hypothesis import given, settings, strategies as st

from crossmod.cli import main
from crossmod.config import RunConfig
from crossmod import suite


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_verify_single_check_passes(capsys):
    code, out, _ = run(capsys, "verify", "killing-values")
    assert code == 0
    assert "[pass] killing_3cocycle(e,f,h) = 8" in out


def test_verify_reports_failures_with_nonzero_exit(capsys):
    code, out, _ = run(capsys, "verify", "relative", "--format", "json")
    data = json.loads(out)
    assert code == 1
    assert data["summary"]["fail"] == 1


def test_betti_json(capsys):
    code, out, _ = run(capsys, "betti", "--algebra", "sl2", "--module", "F1", "--format", "json")
    assert code == 0
    assert json.loads(out)["tables"]["H(sl2, F1)"] == [0, 1, 1, 0]


def test_betti_all_weights(capsys):
    code, out, _ = run(capsys, "betti", "--module", "M", "--all-weights", "--weight-range", "4", "--format", "json")
    assert code == 0
    assert json.loads(out)["tables"]["by weight"] == {"0": [1, 1, 0, 0]}


def test_connecting_and_crossed(capsys):
    code, out, _ = run(capsys, "connecting", "--ses", "density", "--format", "json")
    assert code == 0 and json.loads(out)["tables"]["connecting(omega1)"] == {"e,h,f": {"0": 4}}
    code, out, _ = run(capsys, "crossed", "check", "--ses", "verma", "--format", "json")
    assert code == 0 and json.loads(out)["tables"]["gamma"] == {"e,h,f": {"0": 4}}
    code, _, _ = run(capsys, "crossed", "equiv")
    assert code == 0


def test_catalog_evaluation(capsys):
    code, out, _ = run(capsys, "catalog", "--name", "theta0", "--args", "e-1,e0,e1", "--format", "json")
    assert code == 0 and json.loads(out)["tables"]["value"] == {"1": 2}


def test_relative_and_e2(capsys):
    code, out, _ = run(capsys, "relative", "--module", "trivial", "--format", "json")
    assert json.loads(out)["tables"]["H(sl2, h; C)"] == [1, 0, 1]
    code, out, _ = run(capsys, "e2", "--format", "json")
    assert json.loads(out)["tables"]["relative Betti"] == [1, 0, 0]


def test_reconcile_discrepancies_are_warnings(capsys):
    code, out, _ = run(capsys, "reconcile", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert data["summary"]["discrepancy"] > 0 and data["summary"]["fail"] == 0


def test_unknown_objects_are_errors(capsys):
    assert run(capsys, "betti", "--module", "Q")[0] == 2
    code, _, err = run(capsys, "verify", "nope")
    assert code == 2 and "unknown check" in err


def test_window_overflow_is_an_error(capsys):
    code, _, err = run(capsys, "betti", "--module", "F1", "--module-window", "0,1", "--all-weights")
    assert code == 2 and "enlarge the window" in err


def test_out_file(tmp_path, capsys):
    path = tmp_path / "r.md"
    assert run(capsys, "verify", "killing-values", "--out", str(path))[0] == 0
    assert path.read_text().startswith("# crossmod verify killing-values")


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "crossmod", "verify", "killing-values", "--format", "json"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and json.loads(r.stdout)["summary"]["pass"] == 3


@settings(max_examples=8, deadline=None)
@given(st.sampled_from(["killing-values", "betti", "relative", "zero-map", "e2"]), st.sampled_from(["json", "markdown"]))
def test_reports_are_byte_deterministic(name, fmt):
    a = suite.run(name, RunConfig()).render(fmt)
    b = suite.run(name, RunConfig()).render(fmt)
    assert a == b


def test_config_validation():
    with pytest.raises(ValueError):
        RunConfig(density_window=(5, 2))
    with pytest.raises(ValueError):
        RunConfig(pbw_length=0)
