import subprocess
import sys

import pytest

from cobwebs.cli import main, run


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_fnomial(capsys):
    assert call(capsys, "fnomial", "fibonacci", "5", "2") == (0, "15\n", "")


def test_zeta_one_by_one(capsys):
    assert call(capsys, "zeta", "--formula", "oracle", "--size", "1", "--style", "csv")[:2] == (0, "1\n")


def test_triangle_forms(capsys):
    outs = {form: call(capsys, "triangle", "fibonacci", "8", "--form", form)[1]
            for form in ("factorial", "form-A", "form-B")}
    assert len(set(outs.values())) == 1
    assert outs["factorial"].splitlines()[5] == "1,5,15,15,5,1"
    assert call(capsys, "triangle", "gaussian:2", "4", "--form", "q-form")[1].splitlines()[4] == "1,15,35,15,1"


def test_ccc_and_lah(capsys):
    assert call(capsys, "ccc", "gaussian:2", "4")[1] == "0,1\n1,2\n2,5\n3,16\n4,67\n"
    assert call(capsys, "lah", "6", "--r", "lucas", "--ccc")[1].splitlines()[1:] == \
        ["1,1", "2,3", "3,4", "4,7", "5,11", "6,18"]
    code, out, _ = call(capsys, "lah", "1", "--r", "1/2", "--s", "0")
    assert code == 0 and out == "1\n1/2,1\n"


def test_solve_roots(capsys):
    code, out, _ = call(capsys, "solve-roots", "fibonacci:6")
    assert code == 0 and out == "0,0,1,0,1,0\n"
    assert call(capsys, "solve-roots", "pow2:3")[1] == "1,1,1\n"


def test_zeta_formulas_agree(capsys):
    outs = {f: call(capsys, "zeta", "fibonacci", "--formula", f, "--size", "54")[1]
            for f in ("oracle", "dziemianczuk", "delta-fib", "blocks", "krot-grid")}
    assert len(set(outs.values())) == 1


def test_zeta_reports(capsys):
    code, out, _ = call(capsys, "zeta", "--formula", "delta-general", "--size", "20", "--report")
    assert code == 0 and out.startswith("# zeta delta-general vs oracle") and "mismatches:" in out
    code, out, _ = call(capsys, "zeta", "--formula", "dziemianczuk", "--size", "30", "--report")
    assert out.endswith("mismatches: 0 of 900 cells\n")


def test_mobius(capsys):
    code, out, _ = call(capsys, "mobius", "fibonacci", "--size", "4")
    assert code == 0 and out == "1,-1,0,0\n0,1,-1,-1\n0,0,1,0\n0,0,0,1\n"
    code, out, _ = call(capsys, "mobius", "--formula", "krot:rewritten", "--size", "33", "--report")
    assert code == 0 and "mismatches:" in out and "mismatches: 0 " not in out
    code, out, _ = call(capsys, "mobius", "--formula", "krot", "--size", "33", "--report")
    assert out.endswith("mismatches: 0 of 1089 cells\n")


def test_lascala_styles(capsys):
    assert call(capsys, "lascala", "naturals", "--size", "3", "--style", "pgm")[1] == "P1\n3 3\n1 1 1\n0 1 0\n0 0 1\n"
    assert call(capsys, "lascala", "--size", "2", "--style", "csv")[1] == "1,1\n0,1\n"
    assert call(capsys, "lascala", "--size", "3", "--align", "left")[1] == "1 - -\n1 -\n1\n"


def test_chains(capsys):
    assert call(capsys, "chains", "fibonacci", "1", "7")[1] == "enumerated,3120\nclosed_form,3120\n"
    assert call(capsys, "chains", "fibonacci", "3", "4", "--list")[1].splitlines()[:2] == ["3,5", "3,6"]
    code, _, err = call(capsys, "chains", "gaussian:2", "1", "8", "--list")
    assert code == 2 and "cap" in err


def test_verify(capsys):
    code, out, _ = call(capsys, "verify", "zeta-equivalence", "fibonacci", "--size", "90")
    assert code == 0
    assert "dziemianczuk,0,canonical" in out and "summary" in out
    code, out, _ = call(capsys, "verify", "clue-examples")
    assert code == 0 and "DISCREPANCY" in out


def test_failed_verification_exits_1(monkeypatch, capsys):
    from cobwebs import cli
    from cobwebs.verify import SuiteResult

    def failing(name, seq=None, size=None):
        res = SuiteResult("forced")
        res.check("always false", False)
        return [res]

    monkeypatch.setattr(cli, "run_suite", failing)
    code, out, _ = call(capsys, "verify", "umbral")
    assert code == 1 and "forced: FAIL" in out


def test_output_file(tmp_path, capsys):
    path = tmp_path / "t.csv"
    assert run(["triangle", "fibonacci", "3", "-o", str(path)]) == 0
    assert capsys.readouterr().out == ""
    assert path.read_text() == "1\n1,1\n1,1,1\n1,2,2,1\n"
    assert run(["-o", str(path), "ccc", "naturals", "2"]) == 0
    assert path.read_text() == "0,1\n1,2\n2,4\n"


@pytest.mark.parametrize("argv", [
    ["fnomial", "fibonaci", "5", "2"],
    ["fnomial", "custom:1,0", "5", "2"],
    ["zeta", "--size", "5", "--formula", "nope"],
    ["mobius", "--formula", "krot:sideways", "--size", "4"],
    ["lah", "3", "--r", "a,b"],
    ["solve-roots", "x:y"],
    ["frobnicate"],
    [],
])
def test_usage_errors_exit_2(argv, capsys):
    with pytest.raises(SystemExit) as info:
        main(argv)
    assert info.value.code == 2


@pytest.mark.parametrize("argv", [
    ["fnomial", "custom:2,3,4,5", "4", "2"],
    ["zeta", "naturals", "--formula", "delta-fib", "--size", "5"],
    ["zeta", "--size", "0"],
    ["chains", "fibonacci", "4", "3"],
    ["lah", "4", "--r", "1,2"],
    ["fnomial", "custom:1,2", "5", "2"],
])
def test_domain_errors_exit_2_with_grammar(argv, capsys):
    with pytest.raises(SystemExit) as info:
        main(argv)
    assert info.value.code == 2
    assert "sequence descriptors:" in capsys.readouterr().err


def test_determinism():
    argv = [sys.executable, "-m", "cobwebs", "verify", "mobius", "naturals", "--size", "30"]
    a = subprocess.run(argv, capture_output=True, check=True).stdout
    b = subprocess.run(argv, capture_output=True, check=True).stdout
    assert a == b and a


def test_module_entry_point_exit_codes():
    ok = subprocess.run([sys.executable, "-m", "cobwebs", "fnomial", "fibonacci", "6", "2"],
                        capture_output=True, text=True)
    assert (ok.returncode, ok.stdout) == (0, "40\n")
    bad = subprocess.run([sys.executable, "-m", "cobwebs", "fnomial", "primes", "6", "2"],
                         capture_output=True, text=True)
    assert bad.returncode == 2 and "grammar" in bad.stderr
