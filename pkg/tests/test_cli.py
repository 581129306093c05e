import csv
import json
import math

import numpy as np
import pytest

from mobius_xform.cli import main


def write_vector(path, v, header=True):
    lines = [f"# N={len(v)}"] if header else []
    lines += [repr(float(x)) for x in v]
    path.write_text("\n".join(lines) + "\n")
    return path


def run(args, capsys):
    code = main([str(a) for a in args])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_aht_forward_against_oracle(tmp_path, capsys):
    vin = write_vector(tmp_path / "v.csv", np.random.default_rng(0).standard_normal(32))
    rep = tmp_path / "r.json"
    code, _, _ = run(["aht-forward", "--input", vin, "--resolver", "ideal", "--kernel", "hartley",
                      "--compare-oracle", "--out", tmp_path / "V.csv", "--report", rep], capsys)
    assert code == 0
    report = json.loads(rep.read_text())
    for key in ("algorithm", "kernel", "resolver", "N", "nontrivial_mults", "trivial_mults", "adds",
                "max_abs_err", "rmse", "relative_rmse", "wall_time_ms"):
        assert key in report
    assert report["N"] == 32 and report["max_abs_err"] <= 1e-9
    rows = list(csv.reader((tmp_path / "V.csv").open()))
    assert rows[0] == ["k", "value"] and len(rows) == 33


def test_report_counts_match_stages(tmp_path, capsys):
    vin = write_vector(tmp_path / "v.csv", np.arange(12.0))
    rep = tmp_path / "r.json"
    assert run(["aht-forward", "--input", vin, "--report", rep], capsys)[0] == 0
    report = json.loads(rep.read_text())
    stages = {k: v for k, v in report["stages"].items() if k not in ("interp", "a0")}
    for key in ("nontrivial_mults", "trivial_mults", "adds"):
        assert report[key] == sum(s[key] for s in stages.values())


def test_weights_sum_to_one(tmp_path, capsys):
    out = tmp_path / "w.csv"
    code, _, _ = run(["weights", "--kernel", "hartley", "--N", 32, "--r", "10.5", "--out", out], capsys)
    assert code == 0
    rows = list(csv.DictReader(out.open()))
    assert len(rows) == 32
    assert math.fsum(float(r["w"]) for r in rows) == pytest.approx(1.0, abs=1e-9)


def test_compare_fig5(tmp_path, capsys):
    rep = tmp_path / "r.json"
    code, _, _ = run(["compare", "--signal", "fig5", "--m", 2, "--report", rep, "--no-timing"], capsys)
    assert code == 0
    report = json.loads(rep.read_text())
    assert report["N"] == 32 and report["resolver"].startswith("top-m(m=2")
    assert 0 < report["relative_rmse"] < 1


@pytest.mark.parametrize("args", [
    ["aht-forward", "--signal", "random", "--N", 16, "--seed", 3],
    ["aft", "--N", 6, "--seed", 1, "--compare-oracle"],
    ["bench", "--sizes", "4,8", "--seed", 2],
    ["compare", "--signal", "fig5", "--m", 3],
])
def test_outputs_are_byte_identical(tmp_path, capsys, args):
    blobs = []
    for rep in ("a", "b"):
        out, report = tmp_path / f"{rep}.csv", tmp_path / f"{rep}.json"
        assert run(args + ["--out", out, "--report", report, "--no-timing"], capsys)[0] == 0
        blobs.append((out.read_bytes() if out.exists() else b"", report.read_bytes()))
    assert blobs[0] == blobs[1]


def test_aht_inverse_round_trip(tmp_path, capsys):
    v = np.random.default_rng(5).standard_normal(10)
    vin = write_vector(tmp_path / "v.csv", v)
    spec = tmp_path / "V.csv"
    back = tmp_path / "v2.csv"
    assert run(["aht-forward", "--input", vin, "--out", spec], capsys)[0] == 0
    assert run(["aht-inverse", "--input", spec, "--out", back], capsys)[0] == 0
    got = [float(r["value"]) for r in csv.DictReader(back.open())]
    assert np.allclose(got, v, atol=1e-12)


def test_parse_error_names_line_and_column(tmp_path, capsys):
    bad = tmp_path / "bad.csv"
    bad.write_text("# N=3\n1.0\n  2.x\n3.0\n")
    code, _, err = run(["aht-forward", "--input", bad], capsys)
    assert code == 2
    assert f"{bad}:3:3:" in err


def test_header_length_mismatch(tmp_path, capsys):
    bad = tmp_path / "short.csv"
    bad.write_text("# N=4\n1\n2\n3\n")
    code, _, err = run(["aht-forward", "--input", bad], capsys)
    assert code == 2 and "N=4" in err


def test_inner_errors_name_module(tmp_path, capsys):
    one = write_vector(tmp_path / "one.csv", [1.0])
    code, _, err = run(["aht-forward", "--input", one], capsys)
    assert code == 1 and "[aht]" in err


def test_m_requires_top_m(capsys):
    code, _, err = run(["aht-forward", "--signal", "random", "--N", 8, "--seed", 0,
                        "--resolver", "ideal", "--m", 2], capsys)
    assert code == 2 and "top-m" in err


def test_missing_input_file(tmp_path, capsys):
    code, _, err = run(["aht-forward", "--input", tmp_path / "nope.csv"], capsys)
    assert code == 2 and "nope.csv" in err
