import json
import math

import pytest

from pentadgf import dgf
from pentadgf.cli import run


def _run_json(capsys, argv):
    code = run(argv)
    out = capsys.readouterr().out.strip()
    return code, json.loads(out)


def test_eval_auto(capsys):
    code, rec = _run_json(capsys, ["eval", "--s", "2,0"])
    assert code == 0
    assert rec["command"] == "eval"
    assert rec["value"]["re"] == pytest.approx(-1.19842171457, abs=1e-10)
    assert rec["method"] == "explicit"


def test_eval_method_echo(capsys):
    for method in ("integral", "series", "mellin", "explicit"):
        code, rec = _run_json(capsys, ["eval", "--s", "2,0", "--method", method])
        assert code == 0
        assert rec["method"] == method


def test_eval_roundtrip_floats(capsys):
    code, rec = _run_json(capsys, ["eval", "--s", "1.5,0.5", "--method", "mellin"])
    internal = dgf.d_mellin(1.5 + 0.5j, 1e-12).value
    assert rec["value"]["re"] == internal.real  # exact: json floats round-trip
    assert rec["value"]["im"] == internal.imag


def test_eval_deterministic_apart_from_timing(capsys):
    _, rec1 = _run_json(capsys, ["eval", "--s", "0.5,3"])
    _, rec2 = _run_json(capsys, ["eval", "--s", "0.5,3"])
    rec1.pop("elapsed_ms")
    rec2.pop("elapsed_ms")
    assert rec1 == rec2


def test_dk_exact(capsys):
    code, rec = _run_json(capsys, ["dk", "--k", "2", "--exact"])
    assert code == 0
    assert rec["value"]["re"] == pytest.approx(-1.19842171457, abs=1e-10)
    coeffs = {c["power"]: c for c in rec["pi_coeffs"]}
    assert coeffs[0]["rational"] == "-108"
    assert coeffs[1]["root3"] == "16"
    assert coeffs[2]["rational"] == "2"


def test_zeros_cli(capsys):
    code, rec = _run_json(capsys, ["zeros", "--imag-max", "5"])
    assert code == 0
    assert rec["count"] == 1
    z = rec["zeros"][0]
    assert abs(complex(z["re"], z["im"]) - (0.88271 + 3.91652j)) < 2e-4
    assert z["residual"] <= 1e-7


def test_partial_sum_cli(capsys):
    code, rec = _run_json(capsys, ["partial-sum", "--x", "6.5"])
    assert code == 0
    assert rec["sum"] == -1


def test_phi_methods(capsys):
    values = {}
    for method in ("series", "hankel", "product"):
        code, rec = _run_json(capsys, ["phi", "--q", "0.5", "--method", method])
        assert code == 0
        assert rec["method"] == method
        values[method] = rec["value"]["re"]
    assert values["series"] == pytest.approx(values["hankel"], abs=1e-9)
    assert values["series"] == pytest.approx(values["product"], abs=1e-9)


def test_eta_cli(capsys):
    code, rec = _run_json(capsys, ["eta", "--tau", "0,1"])
    assert code == 0
    assert rec["value"]["re"] == pytest.approx(0.768225, abs=1e-6)


def test_table_csv(capsys):
    code = run(["table", "--what", "bernoulli", "--n", "4", "--format", "csv"])
    out = capsys.readouterr().out.strip().splitlines()
    assert code == 0
    assert out[0] == "command,input,value_re,value_im,err,method"
    assert len(out) == 6  # header + n = 0..4
    assert "1/6" in out[3]


def test_table_json_rows(capsys):
    code, rec = _run_json(capsys, ["table", "--what", "a", "--n", "7"])
    assert code == 0
    assert [row["value"] for row in rec["rows"]] == [1, -1, -1, 0, 0, 1, 0, 1]


def test_asymptotic_cli(capsys):
    code, rec = _run_json(capsys, ["asymptotic", "--s=-0.5"])
    assert code == 0
    assert rec["zeta_form"] == pytest.approx(-math.sqrt(2) / 2, rel=1e-12)
    assert "gamma_form" in rec


def test_domain_error_exit_code(capsys):
    code = run(["phi", "--q", "0.99"])
    captured = capsys.readouterr()
    assert code == 2
    assert "0.95" in captured.err


def test_conditioning_failure_exit_code(capsys):
    # the line integral is hopeless at Im(s) = 15; best value still printed
    code = run(["eval", "--s", "0.5,15", "--method", "integral"])
    captured = capsys.readouterr()
    assert code == 3
    rec = json.loads(captured.out)
    assert rec["flagged"] is True
    assert "convergence" in captured.err


def test_series_domain_error_exit_code(capsys):
    code = run(["eval", "--s=-1,0", "--method", "series"])
    assert code == 2
    assert "Re(s) > 0" in capsys.readouterr().err


def test_csv_eval(capsys):
    code = run(["eval", "--s", "1,0", "--format", "csv"])
    out = capsys.readouterr().out.strip().splitlines()
    assert code == 0
    assert len(out) == 2
    fields = out[1].split(",")
    assert fields[0] == "eval"
