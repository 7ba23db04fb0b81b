import random
import warnings

import pytest

from thetatwist.errors import (
    DuplicateTerm,
    ModulusMismatch,
    NonMonicWarning,
    NotSquarefree,
    ParseError,
)
from thetatwist.polyverify import (
    BUNDLED_LABELS,
    ModPoly,
    ProjPolyRecord,
    VerificationReport,
    bundled_record,
    ddf,
    is_squarefree_mod,
    parse_poly,
    poly_gcd_mod,
    reduce_mod,
    verify_record,
)

import oracles


def test_parse_simple():
    rec = parse_poly("x^2-4*x+4")
    assert rec.coeffs == (4, -4, 1)
    assert parse_poly("x").coeffs == (0, 1)
    assert parse_poly("x^{3} - x").coeffs == (0, -1, 0, 1)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", NonMonicWarning)
        assert parse_poly("7").coeffs == (7,)
        assert parse_poly("-x^3+2").coeffs == (2, 0, 0, -1)
        assert parse_poly(" 5*x \t+ 1 ").coeffs == (1, 5)


def test_parse_braced_and_bare_exponents_agree():
    assert parse_poly("x^{14}+7*x^{13}-2").coeffs == parse_poly("x^14+7*x^13-2").coeffs


def test_parse_bundled_22_11():
    rec = bundled_record(22, 11)
    assert rec.degree == 12
    assert rec.coeffs[0] == -111
    assert rec.coeffs[1] == -41
    assert rec.coeffs[12] == 1
    assert rec.coeffs[10] == 0  # the x^10 term is absent from the expression


def test_parse_duplicate_term():
    with pytest.raises(DuplicateTerm):
        parse_poly("x^3 + x^3")
    with pytest.raises(DuplicateTerm):
        parse_poly("2 - 1")


def test_parse_errors():
    for text in ("", "x^", "3**x", "x+", "+", "4x", "x^{3", "x4", "* x"):
        with pytest.raises(ParseError):
            parse_poly(text)


def test_parse_nonmonic_warns():
    with pytest.warns(NonMonicWarning):
        rec = parse_poly("2*x^2+1")
    assert rec.coeffs == (1, 0, 2)


def test_validate_label():
    rec = parse_poly("x^2+1", k=16, ell=13)
    with pytest.raises(ValueError):
        rec.validate_label()  # degree 2 != 14
    for k, ell in BUNDLED_LABELS:
        bundled_record(k, ell).validate_label()


def test_reduce_mod():
    assert reduce_mod(ProjPolyRecord((4, -4, 1)), 3).coeffs == (1, 2, 1)
    rec = bundled_record(16, 13)
    mod2 = reduce_mod(rec, 2)
    assert mod2.degree == 14
    assert set(mod2.coeffs) <= {0, 1}
    assert reduce_mod(bundled_record(22, 11), 11).coeffs[0] == (-111) % 11 == 10
    with pytest.raises(ValueError):
        reduce_mod(rec, 4)


def test_poly_gcd_mod():
    f = ModPoly(5, (4, 0, 3))  # 3x^2 + 4
    zero = ModPoly(5, ())
    assert poly_gcd_mod(f, zero).coeffs == (3, 0, 1)  # monic(f)
    x2m1 = ModPoly(5, (4, 0, 1))
    xm1 = ModPoly(5, (4, 1))
    assert poly_gcd_mod(x2m1, xm1).coeffs == (4, 1)
    sq = ModPoly(7, (1, 5, 1))  # (x-1)^2 = x^2 - 2x + 1
    deriv = ModPoly(7, (5, 2))
    assert poly_gcd_mod(sq, deriv).coeffs == (6, 1)
    with pytest.raises(ModulusMismatch):
        poly_gcd_mod(ModPoly(5, (1,)), ModPoly(7, (1,)))


def test_is_squarefree_mod():
    assert not is_squarefree_mod(ModPoly(7, (1, 5, 1)))  # (x-1)^2
    assert is_squarefree_mod(ModPoly(7, (1, 0, 1)))  # x^2 + 1, -1 non-square
    assert {x * x % 7 for x in range(1, 7)} == {1, 2, 4}
    for p in (5, 7):
        frob = [0] * (p + 1)
        frob[1] = -1
        frob[p] = 1
        assert is_squarefree_mod(ModPoly(p, tuple(frob)))  # x^p - x
    with pytest.raises(ValueError):
        is_squarefree_mod(ModPoly(7, ()))


def _mul_int(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return out


def test_ddf_examples():
    assert ddf(ModPoly(7, (1, 0, 1))) == (2,)
    assert ddf(ModPoly(7, (6, 0, 1))) == (1, 1)
    # fixture: (x-1)(x^2+1)(x^2+x+3); both quadratics verified irreducible
    assert oracles.poly_roots([1, 0, 1], 7) == []
    assert oracles.poly_roots([3, 1, 1], 7) == []
    f = _mul_int(_mul_int([-1, 1], [1, 0, 1]), [3, 1, 1])
    assert ddf(ModPoly(7, tuple(f))) == (1, 2, 2)


def test_ddf_rejects_non_squarefree():
    with pytest.raises(NotSquarefree):
        ddf(ModPoly(7, (1, 5, 1)))


def test_ddf_degree_one_counts_match_root_enumeration():
    rng = random.Random(99)
    for p in (5, 7, 11, 31, 101):
        done = 0
        while done < 12:
            deg = rng.randrange(2, 9)
            coeffs = [rng.randrange(p) for _ in range(deg)] + [1]
            f = ModPoly(p, tuple(coeffs))
            if not is_squarefree_mod(f):
                continue
            done += 1
            pattern = ddf(f)
            assert sum(pattern) == f.degree
            n_roots = len(oracles.poly_roots(list(f.coeffs), p))
            assert pattern.count(1) == n_roots


def test_ddf_full_splitting_polynomial():
    # x^p - x splits into all degree-1 factors
    for p in (5, 7, 11):
        frob = [0] * (p + 1)
        frob[1] = -1
        frob[p] = 1
        assert ddf(ModPoly(p, tuple(frob))) == (1,) * p


def test_verify_record_bundled_16_13():
    rep = verify_record(bundled_record(16, 13), 16, 13, 100)
    assert rep.counts["fail"] == 0
    assert rep.failures == ()
    assert rep.counts["skipped_ell"] == 1
    statuses = {p: s for p, s, _, _ in rep.outcomes}
    assert statuses[13] == "skipped-ell"


def test_bundled_records_16_13_and_26_13_identical():
    assert bundled_record(16, 13).coeffs == bundled_record(26, 13).coeffs


def test_verify_record_rejects_wrong_label():
    rec = bundled_record(16, 13)
    with pytest.raises(ValueError):
        verify_record(rec, 16, 17, 50)


def test_verify_record_detects_mutation():
    rec = bundled_record(16, 13)
    coeffs = list(rec.coeffs)
    coeffs[1] += 1
    mutated = ProjPolyRecord(tuple(coeffs), k=16, ell=13)
    rep = verify_record(mutated, 16, 13, 100, fail_fast=True)
    assert rep.counts["fail"] >= 1


def test_verification_report_json_roundtrip():
    rep = verify_record(bundled_record(22, 11), 22, 11, 60)
    full = rep.to_json_dict(full=True)
    assert VerificationReport.from_json_dict(full) == rep
    slim = rep.to_json_dict()
    assert "outcomes" not in slim
    assert slim["counts"] == rep.counts
