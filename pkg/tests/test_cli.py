import json

import pytest

from csrange.analytics import packing_constant_k, safe_csrange_physical
from csrange.cli import main
from csrange.geometry import save_topology
from csrange.harness import build_pairwise_counterexample
from csrange.interference import RadioParams


@pytest.fixture()
def unsafe_topology(tmp_path):
    """Topology file that violates at the pairwise range but not at the
    cumulative one."""
    p = RadioParams(tx_power=1.0, sinr_threshold=10.0, path_loss_exp=4.0)
    ce = build_pairwise_counterexample(p)
    path = tmp_path / "topo.json"
    save_topology(ce.links, str(path))
    return path, ce


def test_ranges_stdout(capsys):
    assert main(["ranges", "--gamma0", "10", "--alpha", "4"]) == 0
    out = capsys.readouterr().out
    assert "k_constant" in out
    assert f"{packing_constant_k(10.0, 4.0):.6f}"[:8] in out
    assert "5.262792" in out
    assert "3.778279" in out


def test_ranges_json(tmp_path):
    out = tmp_path / "ranges.json"
    code = main(
        ["ranges", "--gamma0", "10", "--alpha", "4", "--dmax", "2", "--json", str(out)]
    )
    assert code == 0
    doc = json.loads(out.read_text())
    assert doc["gamma0"] == 10.0
    assert doc["physical_range"] == pytest.approx(2 * safe_csrange_physical(10.0, 4.0))
    assert doc["ratio_limit"] == pytest.approx(1.83480, abs=1e-4)


def test_ranges_rejects_divergent_exponent(capsys):
    assert main(["ranges", "--gamma0", "10", "--alpha", "2"]) == 2
    assert "error:" in capsys.readouterr().err


def test_ratio_curve_csv(tmp_path):
    out = tmp_path / "curve.csv"
    args = [
        "ratio-curve",
        "--alpha-list", "3,4",
        "--gamma0-min", "1",
        "--gamma0-max", "1000000",
        "--gamma0-points", "5",
        "--out", str(out),
    ]
    assert main(args) == 0
    first = out.read_bytes()
    lines = first.decode().splitlines()
    assert lines[0] == "alpha,gamma0,ratio,limit"
    assert len(lines) == 11
    assert "e" not in first.decode()

    # rerun is byte identical
    assert main(args) == 0
    assert out.read_bytes() == first


def test_ratio_curve_rejects_bad_grid(tmp_path, capsys):
    out = tmp_path / "curve.csv"
    code = main(
        ["ratio-curve", "--alpha-list", "4", "--gamma0-min", "0",
         "--gamma0-max", "10", "--gamma0-points", "3", "--out", str(out)]
    )
    assert code == 2
    assert "error:" in capsys.readouterr().err


def test_pack_census_and_json(tmp_path, capsys):
    out = tmp_path / "pack.json"
    assert main(["pack", "--spacing", "2", "--layers", "2", "--out", str(out)]) == 0
    stdout = capsys.readouterr().out
    assert "ring" in stdout and "count" in stdout
    doc = json.loads(out.read_text())
    assert len(doc["points"]) == 18


def test_sweep_requires_seed(tmp_path):
    out = tmp_path / "sweep.csv"
    with pytest.raises(SystemExit) as exc:
        main(["sweep", "--multipliers", "2,3", "--gamma0", "10", "--alpha", "4",
              "--out", str(out)])
    assert exc.value.code == 2


def test_sweep_deterministic_across_threads(tmp_path):
    out = tmp_path / "sweep.csv"
    base = [
        "sweep", "--seed", "5", "--num-links", "8", "--area-side", "80",
        "--max-link-len", "8", "--multipliers", "2.0,3.0,5.3", "--trials", "10",
        "--gamma0", "10", "--alpha", "4", "--out", str(out),
    ]
    assert main(base) == 0
    first = out.read_bytes()
    header = first.decode().splitlines()[0]
    assert header == "cs_range_over_dmax,trials,admitted_sets,violating_sets,violation_rate,violating_links"

    assert main(base + ["--threads", "2"]) == 0
    assert out.read_bytes() == first


def test_counterexample_report(tmp_path):
    out = tmp_path / "ce.json"
    code = main(
        ["counterexample", "--gamma0", "10", "--alpha", "4", "--out", str(out)]
    )
    assert code == 0
    doc = json.loads(out.read_text())
    assert doc["rings"] == 1
    assert doc["data_sir"] < doc["sinr_threshold"]
    assert len(doc["topology"]["links"]) == 7


def test_check_safe_exit_codes(unsafe_topology, capsys):
    path, ce = unsafe_topology
    unsafe_args = [
        "check-safe", "--topology", str(path), "--cs-range", str(ce.cs.cs_range),
        "--gamma0", "10", "--alpha", "4",
    ]
    assert main(unsafe_args) == 1
    out = capsys.readouterr().out
    assert "unsafe" in out and "data" in out

    physical = safe_csrange_physical(10.0, 4.0)
    safe_args = [
        "check-safe", "--topology", str(path), "--cs-range", str(physical),
        "--gamma0", "10", "--alpha", "4",
    ]
    assert main(safe_args) == 0
    assert "safe" in capsys.readouterr().out


def test_check_safe_json_verdict(unsafe_topology, tmp_path):
    path, ce = unsafe_topology
    out = tmp_path / "verdict.json"
    code = main(
        ["check-safe", "--topology", str(path), "--cs-range", str(ce.cs.cs_range),
         "--gamma0", "10", "--alpha", "4", "--json", str(out)]
    )
    assert code == 1
    doc = json.loads(out.read_text())
    assert doc["safe"] is False
    assert doc["witness"]["frame"] == "data"
    assert doc["witness"]["link_index"] == 0


def test_check_safe_missing_file_is_io_error(tmp_path, capsys):
    code = main(
        ["check-safe", "--topology", str(tmp_path / "nope.json"),
         "--cs-range", "5", "--gamma0", "10", "--alpha", "4"]
    )
    assert code == 3
    assert "i/o error:" in capsys.readouterr().err


def test_check_safe_malformed_topology(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"links": [{"tx": [0, 0]}]}')
    code = main(
        ["check-safe", "--topology", str(bad), "--cs-range", "5",
         "--gamma0", "10", "--alpha", "4"]
    )
    assert code == 2
    assert "error:" in capsys.readouterr().err


def test_unwritable_output_is_io_error(capsys):
    code = main(
        ["ratio-curve", "--alpha-list", "4", "--gamma0-min", "1",
         "--gamma0-max", "10", "--gamma0-points", "3",
         "--out", "/nonexistent-dir/curve.csv"]
    )
    assert code == 3
    assert "i/o error:" in capsys.readouterr().err


def test_bisect_outputs_threshold(unsafe_topology, capsys):
    path, ce = unsafe_topology
    physical = safe_csrange_physical(10.0, 4.0)
    code = main(
        ["bisect", "--topology", str(path), "--lo", str(ce.cs.cs_range),
         "--hi", str(physical), "--tol", "0.001",
         "--gamma0", "10", "--alpha", "4"]
    )
    assert code == 0
    out = capsys.readouterr().out
    value = float(out.split()[-1])
    assert ce.cs.cs_range < value <= physical


def test_bisect_same_polarity_is_input_error(unsafe_topology, capsys):
    path, _ = unsafe_topology
    code = main(
        ["bisect", "--topology", str(path), "--lo", "6", "--hi", "8",
         "--gamma0", "10", "--alpha", "4"]
    )
    assert code == 2
    assert "error:" in capsys.readouterr().err
