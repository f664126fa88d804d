import pytest

from logjets.cli import main
from logjets.presentation import shipped_presentations


def pres(stem):
    return str(shipped_presentations()[stem])


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_hs_cusp_text(capsys):
    code, out, _ = run(capsys, "hs", pres("cusp"), "--show-omega")
    assert code == 0
    assert "del1_y - 2/3*del1_x" in out
    assert "rank 1" in out


def test_hs_machine(capsys):
    code, out, _ = run(capsys, "hs", pres("cusp"), "--format", "machine", "--show-omega")
    assert code == 0
    assert "order=1" in out.splitlines()
    assert "omega.rank=1" in out.splitlines()
    assert all("=" in line for line in out.splitlines())


def test_hs_over_cap_is_rejected(capsys):
    code, out, err = run(capsys, "hs", pres("line"), "--order", "7")
    assert code == 2 and out == "" and "error" in err


def test_mult_cusp(capsys):
    code, out, _ = run(capsys, "mult", pres("plane"), "--point", "0,0", "--equation", "x^2 - y^3")
    assert code == 0
    assert out.strip() == "mult = 2 (taylor) / 2 (jets)"


def test_mult_machine_has_witness(capsys):
    code, out, _ = run(capsys, "mult", pres("plane"), "--point", "0,0", "--equation",
                       "x^2 - y^3", "--format", "machine")
    assert code == 0
    assert "witness=c_x_1^2" in out.splitlines()


def test_mult_zero_equation(capsys):
    code, out, _ = run(capsys, "mult", pres("plane"), "--point", "1,2", "--equation", "0",
                       "--cap", "3")
    assert code == 0
    assert "mult = inf" in out


def test_mult_cap_reached(capsys):
    code, out, _ = run(capsys, "mult", pres("line"), "--point", "0", "--equation", "x^9",
                       "--cap", "4")
    assert code == 0
    assert out.startswith("mult >= 4")


def test_mult_bad_point(capsys):
    code, out, err = run(capsys, "mult", pres("plane"), "--point", "1,a", "--equation", "x")
    assert code == 2 and out == ""


def test_mason_pair(capsys):
    code, out, _ = run(capsys, "mason", "z^5+1", "1", "--subtract")
    assert code == 0
    assert "N(z^5 + 1) = 5" in out


def test_mason_rejects_non_coprime(capsys):
    code, out, err = run(capsys, "mason", "--", "z", "-z")
    assert code == 2 and out == ""


def test_mason_random(capsys):
    code, out, _ = run(capsys, "mason", "--random", "20", "--seed", "3", "--format", "machine")
    assert code == 0
    assert "violations=0" in out.splitlines()


def test_glue(capsys):
    code, out, _ = run(capsys, "glue", "x0^2*x2 - x1^3", "--format", "machine")
    assert code == 0 and "glues=true" in out.splitlines()
    code, out, _ = run(capsys, "glue", "x0^2*x2 - x1^3", "--corrupt-chart", "0",
                       "--format", "machine")
    assert code == 1 and "glues=false" in out.splitlines()


def test_glue_inhomogeneous(capsys):
    code, _, err = run(capsys, "glue", "x0 + x1^2")
    assert code == 2 and "homogeneous" in err


def test_unknown_key_reports_position(tmp_path, capsys):
    f = tmp_path / "bad.pres"
    f.write_text("[ring]\nvariables = x\nvariabls = y\n")
    code, out, err = run(capsys, "hs", str(f))
    assert code == 2 and out == ""
    assert "3" in err and "variabls" in err


def test_bad_alpha_is_rejected(tmp_path, capsys):
    f = tmp_path / "zero.pres"
    f.write_text("[ring]\nvariables = x\n\n[log]\nalpha m = 0\n")
    code, out, _ = run(capsys, "hs", str(f))
    assert code == 2 and out == ""


def test_suite_is_deterministic(capsys):
    code1, out1, _ = run(capsys, "suite", "--format", "machine")
    code2, out2, _ = run(capsys, "suite", "--format", "machine")
    assert code1 == code2 == 0
    assert out1 == out2
    assert "summary.failed=0" in out1


def test_suite_negative_control(capsys):
    code, out, _ = run(capsys, "suite", "--corrupt-gluing")
    assert code == 1
    assert "[FAIL] projective-gluing" in out
    assert out.count("[FAIL]") == 1


def test_missing_file(capsys):
    code, _, err = run(capsys, "hs", "/nonexistent/file.pres")
    assert code == 2
