import json

import pytest

from thetatwist.cli import main
from thetatwist.polyverify import VerificationReport
from thetatwist.galrep import ScreeningReport
from thetatwist.twist import TwistCertificate


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_qexp_text(capsys):
    code, out, _ = run(capsys, "qexp", "--weight", "12", "--ell", "13", "--terms", "5")
    assert code == 0
    assert out.strip() == "1, 2, 5, 10, 7"


def test_qexp_single_term(capsys):
    code, out, _ = run(capsys, "qexp", "--weight", "12", "--ell", "13", "--terms", "1")
    assert code == 0
    assert out.strip() == "1"


def test_qexp_json(capsys):
    code, out, _ = run(
        capsys, "qexp", "--weight", "16", "--ell", "13", "--terms", "4", "--format", "json"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["ell"] == 13 and doc["k"] == 16 and doc["N"] == 1
    assert doc["coeffs"][:3] == [0, 1, 8]


def test_qexp_unsupported_weight_exits_2(capsys):
    code, _, err = run(capsys, "qexp", "--weight", "14", "--ell", "13")
    assert code == 2
    assert "weight" in err


def test_twist_search_text(capsys):
    code, out, _ = run(
        capsys, "twist-search", "--weight", "20", "--ell", "17", "--extended", "100"
    )
    assert code == 0
    assert "theta^2 delta_16" in out
    assert "warning" not in out


def test_twist_search_discrepancy_warning(capsys):
    code, out, _ = run(
        capsys, "twist-search", "--weight", "22", "--ell", "11", "--extended", "100"
    )
    assert code == 0
    assert "theta^0 delta_12" in out
    assert "warning" in out and "published" in out


def test_twist_search_json_roundtrip(capsys):
    code, out, _ = run(
        capsys,
        "twist-search", "--weight", "16", "--ell", "13",
        "--extended", "100", "--format", "json",
    )
    assert code == 0
    doc = json.loads(out)
    assert (doc["i"], doc["k_prime"]) == (2, 12)
    cert = TwistCertificate.from_json_dict(doc["certificate"])
    cert.validate()


def test_twist_search_not_found_exits_3(capsys):
    code, _, err = run(capsys, "twist-search", "--weight", "16", "--ell", "7")
    assert code == 3
    assert "no twist pair" in err


def test_verify_poly_bundled(capsys):
    code, out, _ = run(
        capsys, "verify-poly", "--weight", "22", "--ell", "19", "--pmax", "100"
    )
    assert code == 0
    assert "consistent" in out and "0 FAIL" in out


def test_verify_poly_json_roundtrip(capsys):
    code, out, _ = run(
        capsys,
        "verify-poly", "--weight", "16", "--ell", "13",
        "--pmax", "60", "--format", "json", "--full",
    )
    assert code == 0
    rep = VerificationReport.from_json_dict(json.loads(out))
    assert rep.ok and rep.pmax == 60


def test_verify_poly_mutated_file_exits_5(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    # bundled (22, 11) with the constant term changed by 1
    bad.write_text(
        "x^{12}-4*x^{11}+55*x^{9}-165*x^{8}+264*x^{7}-341*x^{6}"
        "+330*x^{5}-165*x^{4}-55*x^{3}+99*x^{2}-41*x-110"
    )
    code, out, _ = run(
        capsys,
        "verify-poly", "--weight", "22", "--ell", "11",
        "--pmax", "60", "--poly-file", str(bad),
    )
    assert code == 5
    assert "INCONSISTENT" in out


def test_verify_poly_tiny_pmax_no_crash(capsys):
    code, out, _ = run(
        capsys, "verify-poly", "--weight", "16", "--ell", "13", "--pmax", "1"
    )
    assert code == 0
    assert "pmax=1" in out


def test_verify_poly_missing_data_dir_exits_4(capsys, tmp_path):
    code, _, err = run(
        capsys,
        "verify-poly", "--weight", "16", "--ell", "13",
        "--pmax", "10", "--data-dir", str(tmp_path),
    )
    assert code == 4
    assert "pk16_l13.txt" in err


def test_screen_text(capsys):
    code, out, _ = run(
        capsys, "screen", "--weight", "12", "--ell", "691", "--pbound", "60"
    )
    assert code == 0
    assert "reducible=True" in out and "j=0" in out


def test_screen_json_roundtrip(capsys):
    code, out, _ = run(
        capsys,
        "screen", "--weight", "26", "--ell", "23",
        "--pbound", "60", "--format", "json",
    )
    assert code == 0
    rep = ScreeningReport.from_json_dict(json.loads(out))
    assert rep.verdict == "likely unexceptional"


def test_tables_small_run(capsys):
    argv = ["tables", "--pmax", "60", "--pbound", "60", "--extended", "60"]
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out.count("likely unexceptional") == 6
    assert out.count("consistent") == 6
    assert "all checks passed" in out
    # byte-identical across runs
    code2, out2, _ = run(capsys, *argv)
    assert code2 == 0 and out2 == out


def test_tables_json(capsys):
    code, out, _ = run(
        capsys,
        "tables", "--pmax", "40", "--pbound", "40",
        "--extended", "40", "--format", "json",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["all_passed"] is True
    assert len(doc["screening"]) == len(doc["twists"]) == len(doc["verification"]) == 6
    found = {(t["k"], t["ell"]): (t["i"], t["k_prime"]) for t in doc["twists"]}
    assert found[(22, 11)] == (0, 12)
    warnings = [t["warning"] for t in doc["twists"] if t["warning"]]
    assert len(warnings) == 1


def test_tables_missing_data_exits_4(capsys, tmp_path):
    code, _, err = run(
        capsys,
        "tables", "--pmax", "40", "--pbound", "40",
        "--extended", "40", "--data-dir", str(tmp_path),
    )
    assert code == 4
    assert err.startswith("error:")


def test_usage_error_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["qexp", "--weight", "12"])  # missing --ell
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["qexp", "--weight", "12", "--ell", "13", "--terms", "0"])
    assert exc.value.code == 2


def test_composite_ell_exits_2(capsys):
    code, _, err = run(capsys, "qexp", "--weight", "12", "--ell", "15")
    assert code == 2
    assert "not prime" in err
