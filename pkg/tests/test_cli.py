import json
from pathlib import Path

import pytest

from ellsurf.cli import run

FIXTURES = Path(__file__).parent / "fixtures"


def _json(capsys, argv, code=0):
    assert run(argv) == code
    return json.loads(capsys.readouterr().out)


def test_classify_golden(capsys):
    out = _json(capsys, ["classify", "--family", "j0", "--a", "27", "--b", "16"])
    assert out == {
        "method": "local",
        "representation": {"A": 3, "B": 4, "C": 1, "swapped": False},
        "sign": 1,
        "trail": ["g_2 ∈ {+1}", "g_3 ∈ {-1}"],
        "verdict": "constant",
    }


def test_classify_varies_golden(capsys):
    out = _json(capsys, ["classify", "--family", "j1728", "--A", "3", "--B", "5", "--C", "7"])
    assert out["verdict"] == "varies"
    assert out["reason"] == "local factor takes both signs at p = 2, 3"


def test_classify_literal_method(capsys):
    out = _json(capsys, ["classify", "--family", "j0", "--a", "1053", "--b", "39", "--method", "literal"])
    assert out["sign"] == 1 and out["trail"] == ["j0_w2:1", "j0_w3:first.2.b", "sigma(C; 2 mod 3)=0"]


def test_curve_root_golden(capsys):
    out = _json(capsys, ["curve-root", "--family", "j0", "--delta", "43"])
    assert out["sign"] == 1 and [f["place"] for f in out["factors"]] == ["inf", "2", "3", "43"]
    out = _json(capsys, ["curve-root", "--family", "j1728", "--delta", "8", "--mode", "PaperClosedForm"])
    assert out["sign"] == -1 and out["mode"] == "PaperClosedForm"


def test_scan_formats(capsys):
    out = _json(capsys, ["scan", "--family", "j0", "--a", "27", "--b", "16", "--height", "5", "--workers", "1"])
    assert (out["wplus"], out["wminus"]) == (39, 0)
    assert run(["scan", "--family", "j1728", "--A", "1", "--B", "1", "--C", "9", "--height", "3", "--format", "csv"]) == 0
    assert capsys.readouterr().out.splitlines()[1] == '"j1728:A=1,B=1,C=9",3,0,15,0,True,-3,1,738,-1'
    assert run(["scan", "--family", "j0", "--a", "27", "--b", "16", "--height", "3", "--format", "text"]) == 0
    assert "(constant)" in capsys.readouterr().out


def test_geometry_commands(capsys):
    out = _json(capsys, ["kodaira", "--A", "T", "--B", "0"])
    assert [f["type"] for f in out["fibers"]] == ["III", "III*"] and out["euler_sum"] == 12
    out = _json(capsys, ["kodaira", "--A", "T^2", "--B", "T^3", "--place", "inf"])
    assert out["type"] == "I0*"
    out = _json(capsys, ["section", "--A", "T^4 - 5T^2 + 4"])
    assert out["kind"] == "BiquadraticConicBundle" and (out["alpha"], out["beta"]) == ("1", "4")
    out = _json(capsys, ["places", "--A", "T", "--B", "T"])
    assert out["M"] == "4*T + 27" and out["unconditional"]


def test_validate_exit_codes(capsys):
    assert run(["validate", "--family", "j0", "--a", "27", "--b", "16", "--height", "10", "--workers", "1"]) == 0
    # the printed tables claim Constant(+1) for this surface; the scan disagrees
    assert run(["validate", "--family", "j0", "--a", "1053", "--b", "39", "--height", "10", "--method", "literal"]) == 1
    capsys.readouterr()


def test_corrupted_table_is_caught(capsys):
    args = ["validate", "--family", "j1728", "--A", "1", "--B", "1", "--C", "1", "--height", "10", "--method", "literal"]
    assert run(args) == 0
    assert run(args + ["--tables", str(FIXTURES / "corrupt_j1728_w3.json")]) == 1
    out = json.loads(capsys.readouterr().out.splitlines()[-1])
    assert out["status"] == "SoundnessViolation" and out["verdict"]["sign"] == -1


@pytest.mark.parametrize(
    "argv,needle",
    [
        (["classify", "--family", "j0", "--a", "1"], "--b is required"),
        (["classify", "--family", "j1728", "--A", "2", "--B", "4", "--C", "1"], "--A/--B/--C"),
        (["classify", "--family", "j0", "--a", "0", "--b", "1"], "--a/--b"),
        (["classify", "--family", "j0", "--a", "27", "--b", "16", "--tables", "x.json"], "--tables only applies"),
        (["kodaira", "--A", "T^", "--B", "0"], "--A"),
        (["section", "--A", "T^3"], "deg A = 3"),
    ],
)
def test_usage_errors(capsys, argv, needle):
    assert run(argv) == 2
    assert needle in capsys.readouterr().err


@pytest.mark.parametrize(
    "argv",
    [["scan", "--family", "j0", "--a", "1", "--b", "1", "--height", "0"], ["curve-root", "--family", "j0", "--delta", "0"], ["bogus"]],
)
def test_argparse_errors_exit_2(argv):
    with pytest.raises(SystemExit) as exc:
        run(argv)
    assert exc.value.code == 2
