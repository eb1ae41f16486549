import json

import numpy as np
import pytest

import fracdecomp as fd
from fracdecomp.cli import main
from fracdecomp.sigio import read_signal_csv, write_signal_csv


@pytest.fixture
def f_csv(tmp_path):
    grid = fd.UniformGrid.from_window(-20.0, 20.0, 512)
    sig = fd.corpus.sample(fd.corpus.GaussianDerivative(), grid)
    path = tmp_path / "f.csv"
    write_signal_csv(path, sig)
    return path


def test_corpus_list(capsys):
    assert main(["corpus", "list"]) == 0
    out = capsys.readouterr().out
    assert "gaussian" in out and "tapered_sine" in out


def test_corpus_emit(tmp_path):
    out = tmp_path / "g.csv"
    rc = main(
        ["corpus", "emit", "gaussian", "--output", str(out), "--n", "256",
         "--window", "-5", "5", "--param", "width=2.0"]
    )
    assert rc == 0
    sig = read_signal_csv(out)
    assert sig.grid.n == 256
    j0 = sig.grid.index_of_zero()
    assert sig.values[j0] == pytest.approx(1.0)


def test_apply_roundtrip(tmp_path, f_csv):
    mid = tmp_path / "mid.csv"
    back = tmp_path / "back.csv"
    assert main(["apply", "--order", "-0.3", "--input", str(f_csv),
                 "--output", str(mid)]) == 0
    assert main(["apply", "--order", "0.3", "--input", str(mid),
                 "--output", str(back)]) == 0
    orig = read_signal_csv(f_csv)
    rec = read_signal_csv(back)
    assert np.max(np.abs(rec.values - orig.values)) <= 1e-9


def test_apply_order_out_of_range_exits_2(tmp_path, f_csv, capsys):
    rc = main(["apply", "--order", "1.3", "--input", str(f_csv),
               "--output", str(tmp_path / "g.csv")])
    assert rc == 2
    err = capsys.readouterr().err
    assert err.startswith("ERROR order_out_of_range:")


def test_apply_order_inside_range_succeeds(tmp_path, f_csv):
    rc = main(["apply", "--order", "0.7", "--input", str(f_csv),
               "--output", str(tmp_path / "g.csv")])
    assert rc == 0


def test_missing_input_exits_2(tmp_path, capsys):
    rc = main(["apply", "--order", "0.5", "--input", str(tmp_path / "none.csv"),
               "--output", str(tmp_path / "g.csv")])
    assert rc == 2
    assert "ERROR" in capsys.readouterr().err


def test_decompose_s_zero_halves(tmp_path, f_csv, capsys):
    out = tmp_path / "u.csv"
    rc = main(["decompose", "--s", "0", "--variant", "symmetric",
               "--input", str(f_csv), "--output", str(out)])
    assert rc == 0
    u = read_signal_csv(out)
    f = read_signal_csv(f_csv)
    assert np.array_equal(u.values, f.values * 0.5)


def test_decompose_report(tmp_path, f_csv):
    out = tmp_path / "u.csv"
    rep = tmp_path / "rep.json"
    rc = main(["decompose", "--s", "0.25", "--input", str(f_csv),
               "--output", str(out), "--report", str(rep)])
    assert rc == 0
    payload = json.loads(rep.read_text())
    assert payload["residual_l2"] <= 1e-10
    assert payload["u_csv"] == str(out)


def test_norms_stdout(f_csv, capsys):
    rc = main(["norms", "--input", str(f_csv), "--mu", "0,1"])
    assert rc == 0
    lines = capsys.readouterr().out.strip().split("\n")
    assert lines[0] == "mu,seminorm,norm"
    assert len(lines) == 3


def test_decay_json(tmp_path):
    grid = fd.UniformGrid.from_window(-20.0, 20.0, 4096)
    box = fd.corpus.sample(fd.corpus.Box(-1.0, 1.0), grid)
    path = tmp_path / "box.csv"
    write_signal_csv(path, box)
    out = tmp_path / "decay.json"
    rc = main(["decay", "--input", str(path), "--xi-lo", "1.28",
               "--xi-hi", "7.68", "--output", str(out)])
    assert rc == 0
    fit = json.loads(out.read_text())
    assert abs(fit["exponent"] + 1.0) <= 0.1


def test_verify_pass_and_report_determinism(tmp_path, capsys):
    r1 = tmp_path / "r1.json"
    r2 = tmp_path / "r2.json"
    args = ["verify", "--suite", "symbol_bounds", "--suite", "plancherel",
            "--n", "512", "--seed", "99"]
    assert main(args + ["--output", str(r1)]) == 0
    capsys.readouterr()
    assert main(args + ["--output", str(r2)]) == 0
    assert r1.read_bytes() == r2.read_bytes()
    report = json.loads(r1.read_text())
    assert report["passed"] is True
    assert report["seed"] == 99
    assert {s["name"] for s in report["suites"]} == {"symbol_bounds", "plancherel"}


def test_verify_prints_case_lines(capsys):
    rc = main(["verify", "--suite", "energy", "--n", "1024", "--s", "0.25"])
    assert rc == 0
    out = capsys.readouterr().out
    assert "lhs=" in out and "rhs=" in out and "PASS" in out


def test_verify_injection_fails_with_exit_1(tmp_path, capsys):
    rc = main(["verify", "--suite", "symbol_bounds", "--n", "256",
               "--inject", "symbol_bounds", "--output", str(tmp_path / "r.json")])
    assert rc == 1
    out = capsys.readouterr().out
    assert "FAIL" in out
    report = json.loads((tmp_path / "r.json").read_text())
    assert report["passed"] is False


def test_verify_unknown_suite_exits_2(capsys):
    rc = main(["verify", "--suite", "bogus"])
    assert rc == 2
    assert "ERROR" in capsys.readouterr().err


def test_verify_tolerance_override_is_echoed(tmp_path):
    rep = tmp_path / "r.json"
    rc = main(["verify", "--suite", "symbol_bounds", "--n", "256",
               "--tolerance", "symbol_bound_slack=1e-6", "--output", str(rep)])
    assert rc == 0
    report = json.loads(rep.read_text())
    tolerances = {c["tolerance"] for c in report["suites"][0]["cases"]}
    assert tolerances == {1e-6}


def test_usage_error_exits_2():
    with pytest.raises(SystemExit) as exc:
        main(["apply", "--side", "up"])
    assert exc.value.code == 2
