"""Parse projective polynomials and verify them against Frobenius data.

A ProjPolyRecord holds the exact integer coefficients of a degree ell+1
polynomial whose splitting field realizes a projective mod-ell
representation.  verify_record checks it against the eigenform of weight k:
for each prime p the distinct-degree factorization pattern of the polynomial
mod p must equal the cycle type of the Frobenius class predicted from
(a_p mod ell, p^{k-1} mod ell).  Primes where the reduction is not
squarefree are skipped as ramified (detected by gcd with the derivative, so
no huge integer discriminant is ever formed), and p = ell is always skipped.

This is a consistency test across many primes, not a proof of correctness:
reports say how far the scan went.  Mod-p polynomials are coefficient lists
in ascending order with the zero polynomial written as the empty tuple.
"""

import warnings
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .errors import (
    DuplicateTerm,
    ModulusMismatch,
    NonMonicWarning,
    NotSquarefree,
    ParseError,
)
from .ffield import is_prime, primes_upto
from .galrep import charpol_data, frobenius_class, predicted_degree_pattern
from .qseries import delta_k

MATCH = "match"
AMBIGUOUS_PASS = "ambiguous-pass"
SKIPPED_RAMIFIED = "skipped-ramified"
SKIPPED_ELL = "skipped-ell"
FAIL = "FAIL"

#: (k, ell) labels of the records shipped in the data directory
BUNDLED_LABELS = ((16, 13), (20, 17), (22, 11), (22, 19), (26, 13), (26, 23))


@dataclass(frozen=True)
class ProjPolyRecord:
    """Exact integer polynomial c_0 + c_1 x + ... + c_deg x^deg, with label."""

    coeffs: tuple
    k: int = None
    ell: int = None

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def validate_label(self):
        """Check the degree ell+1 and monic invariants of a labeled record."""
        if self.ell is None:
            raise ValueError("record carries no (k, ell) label")
        if self.degree != self.ell + 1:
            raise ValueError(
                f"degree {self.degree} != ell + 1 = {self.ell + 1}"
            )
        if self.coeffs[-1] != 1:
            raise ValueError("labeled records must be monic")


@dataclass(frozen=True)
class ModPoly:
    """Polynomial over F_p: ascending coefficients, stripped, () for zero."""

    modulus: int
    coeffs: tuple

    def __post_init__(self):
        p = self.modulus
        c = [x % p for x in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs


_WS = " \t\r\n"
_MINUS = "-−"


def parse_poly(text, k=None, ell=None):
    """Parse a sum of c*x^e / x^e / c*x / x / c terms into a record.

    Exponents may be braced (x^{14}) or bare (x^14); whitespace is ignored;
    '*' between a coefficient and x is required.  Duplicate exponents raise
    DuplicateTerm; a non-monic result only warns.
    """
    n = len(text)

    def skip_ws(i):
        while i < n and text[i] in _WS:
            i += 1
        return i

    def read_int(i):
        j = i
        while j < n and text[j].isdigit():
            j += 1
        if j == i:
            raise ParseError("expected digits", i)
        return int(text[i:j]), j

    terms = {}
    i = skip_ws(0)
    if i >= n:
        raise ParseError("empty polynomial expression", i)
    first = True
    while i < n:
        sign = 1
        if text[i] == "+" or text[i] in _MINUS:
            sign = -1 if text[i] in _MINUS else 1
            i = skip_ws(i + 1)
        elif not first:
            raise ParseError(f"expected '+' or '-', got {text[i]!r}", i)
        first = False
        if i >= n:
            raise ParseError("dangling sign", i)

        coef = None
        starred = False
        if text[i].isdigit():
            coef, i = read_int(i)
            i = skip_ws(i)
            if i < n and text[i] == "*":
                starred = True
                i = skip_ws(i + 1)
                if i >= n or text[i] != "x":
                    raise ParseError("expected 'x' after '*'", i)

        if coef is not None and not starred:
            if i < n and text[i] == "x":
                raise ParseError("missing '*' between coefficient and x", i)
            exp = 0
        elif i < n and text[i] == "x":
            i = skip_ws(i + 1)
            exp = 1
            if i < n and text[i] == "^":
                i = skip_ws(i + 1)
                braced = i < n and text[i] == "{"
                if braced:
                    i = skip_ws(i + 1)
                exp, i = read_int(i)
                if braced:
                    i = skip_ws(i)
                    if i >= n or text[i] != "}":
                        raise ParseError("expected '}'", i)
                    i += 1
        else:
            raise ParseError("expected a term", i)

        if exp in terms:
            raise DuplicateTerm(f"exponent {exp} appears twice", i)
        terms[exp] = sign * (1 if coef is None else coef)
        i = skip_ws(i)

    deg = max(terms)
    coeffs = [0] * (deg + 1)
    for e, c in terms.items():
        coeffs[e] = c
    if coeffs[-1] != 1:
        warnings.warn(
            f"leading coefficient is {coeffs[-1]}, not 1", NonMonicWarning
        )
    return ProjPolyRecord(coeffs=tuple(coeffs), k=k, ell=ell)


def reduce_mod(record, p):
    """Reduce a record's coefficients into [0, p)."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return ModPoly(p, record.coeffs)


# -- raw coefficient-list kernels (ascending order, stripped) --


def _strip(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _strip([x % p for x in out])


def _divmod(a, b, p):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = [x % p for x in a]
    _strip(a)
    db = len(b) - 1
    if len(a) - 1 < db:
        return [], a
    inv = pow(b[-1], -1, p)
    q = [0] * (len(a) - db)
    for shift in range(len(a) - 1 - db, -1, -1):
        c = a[shift + db]
        if c:
            c = c * inv % p
            q[shift] = c
            for j in range(db + 1):
                a[shift + j] = (a[shift + j] - c * b[j]) % p
    return q, _strip(a)


def _monic(a, p):
    if not a or a[-1] == 1:
        return list(a)
    inv = pow(a[-1], -1, p)
    return [x * inv % p for x in a]


def _gcd(a, b, p):
    a, b = list(a), list(b)
    while b:
        a, b = b, _divmod(a, b, p)[1]
    return _monic(a, p)


def _deriv(a, p):
    return _strip([i * a[i] % p for i in range(1, len(a))])


def _powmod(base, e, f, p):
    # base^e mod f by square and multiply
    result = _divmod([1], f, p)[1]
    base = _divmod(base, f, p)[1]
    while e:
        if e & 1:
            result = _divmod(_mul(result, base, p), f, p)[1]
        base = _divmod(_mul(base, base, p), f, p)[1]
        e >>= 1
    return result


def poly_gcd_mod(f, g):
    """Monic gcd of two polynomials over the same F_p (Euclid)."""
    if f.modulus != g.modulus:
        raise ModulusMismatch(f"moduli differ: {f.modulus} vs {g.modulus}")
    return ModPoly(f.modulus, _gcd(f.coeffs, g.coeffs, f.modulus))


def is_squarefree_mod(f):
    """True iff gcd(f, f') = 1; a vanishing derivative is handled by the gcd."""
    if f.is_zero():
        raise ValueError("zero polynomial has no squarefree meaning")
    g = _gcd(f.coeffs, _deriv(f.coeffs, f.modulus), f.modulus)
    return len(g) == 1


def ddf(f):
    """Degree multiset of the irreducible factors of a squarefree monic f.

    Distinct-degree factorization: for d = 1, 2, ... compute
    gcd(f, x^{p^d} - x mod f), peel off the degree-d part, and stop once
    2d exceeds the remaining degree, which is then itself irreducible.
    Only the degrees are returned, never the factors.
    """
    p = f.modulus
    if not is_squarefree_mod(f):
        raise NotSquarefree("input polynomial is not squarefree")
    work = _monic(f.coeffs, p)
    total = len(work) - 1
    out = []
    h = [0, 1]  # the Frobenius iterate x^{p^d} mod f, starting at x
    d = 0
    while len(work) - 1 > 0 and 2 * (d + 1) <= len(work) - 1:
        d += 1
        h = _powmod(h, p, work, p)
        diff = list(h)
        if len(diff) < 2:
            diff += [0] * (2 - len(diff))
        diff[1] = (diff[1] - 1) % p
        g = _gcd(work, _strip(diff), p)
        if len(g) > 1:
            out.extend([d] * ((len(g) - 1) // d))
            work = _divmod(work, g, p)[0]
            h = _divmod(h, work, p)[1]
    if len(work) - 1 > 0:
        out.append(len(work) - 1)
    result = tuple(sorted(out))
    assert sum(result) == total, "factor degrees must sum to deg f"
    return result


@dataclass(frozen=True)
class VerificationReport:
    """Per-prime outcomes of the factorization-pattern consistency check."""

    k: int
    ell: int
    pmax: int
    outcomes: tuple  # (p, status, observed, predicted)
    counts: dict
    failures: tuple

    @property
    def ok(self):
        return self.counts["fail"] == 0

    def to_json_dict(self, full=False):
        d = {
            "k": self.k,
            "ell": self.ell,
            "pmax": self.pmax,
            "counts": dict(self.counts),
            "failures": list(self.failures),
        }
        if full:
            d["outcomes"] = [
                [p, status, _pattern_to_json(obs), _pattern_to_json(pred)]
                for p, status, obs, pred in self.outcomes
            ]
        return d

    @classmethod
    def from_json_dict(cls, d):
        outcomes = tuple(
            (p, status, _pattern_from_json(obs), _pattern_from_json(pred))
            for p, status, obs, pred in d.get("outcomes", [])
        )
        return cls(
            k=d["k"],
            ell=d["ell"],
            pmax=d["pmax"],
            outcomes=outcomes,
            counts=dict(d["counts"]),
            failures=tuple(d["failures"]),
        )


def _pattern_to_json(pat):
    if pat is None:
        return None
    if pat and isinstance(pat[0], tuple):
        return [list(q) for q in pat]
    return list(pat)


def _pattern_from_json(pat):
    if pat is None:
        return None
    if pat and isinstance(pat[0], list):
        return tuple(tuple(q) for q in pat)
    return tuple(pat)


def verify_record(record, k, ell, pmax, series=None, fail_fast=False):
    """Check one polynomial record against Frobenius patterns for p <= pmax.

    For each unramified prime the observed distinct-degree multiset must
    equal the predicted cycle type (either admissible pattern counts as a
    pass for ambiguous classes).  With fail_fast the scan stops at the first
    FAIL, which is enough for mutation testing.
    """
    if record.ell is not None and record.ell != ell:
        raise ValueError("record label disagrees with requested ell")
    f = series if series is not None else delta_k(k, ell, pmax)
    outcomes = []
    failures = []
    counts = {
        "match": 0,
        "ambiguous_pass": 0,
        "skipped_ramified": 0,
        "skipped_ell": 0,
        "fail": 0,
    }
    for p in primes_upto(pmax):
        if p == ell:
            counts["skipped_ell"] += 1
            outcomes.append((p, SKIPPED_ELL, None, None))
            continue
        fp = reduce_mod(record, p)
        if not is_squarefree_mod(fp):
            counts["skipped_ramified"] += 1
            outcomes.append((p, SKIPPED_RAMIFIED, None, None))
            continue
        fc = frobenius_class(charpol_data(k, ell, p, f.coeff(p)))
        predicted = predicted_degree_pattern(fc, ell)
        observed = ddf(fp)
        if fc.is_ambiguous:
            status = AMBIGUOUS_PASS if observed in predicted else FAIL
        else:
            status = MATCH if observed == predicted else FAIL
        if status == FAIL:
            counts["fail"] += 1
            failures.append(p)
        elif status == MATCH:
            counts["match"] += 1
        else:
            counts["ambiguous_pass"] += 1
        outcomes.append((p, status, observed, predicted))
        if fail_fast and status == FAIL:
            break
    return VerificationReport(
        k=k,
        ell=ell,
        pmax=pmax,
        outcomes=tuple(outcomes),
        counts=counts,
        failures=tuple(failures),
    )


def data_path(k, ell, data_dir=None):
    """Path of the bundled polynomial file pk<k>_l<ell>.txt."""
    name = f"pk{k}_l{ell}.txt"
    if data_dir is not None:
        return Path(data_dir) / name
    return resources.files(__package__) / "data" / name


def load_poly_file(path, k=None, ell=None):
    """Read one polynomial expression from a UTF-8 text file."""
    with open(path, encoding="utf-8") as fh:
        return parse_poly(fh.read(), k=k, ell=ell)


def bundled_record(k, ell, data_dir=None):
    """The shipped Table row for (k, ell), parsed and label-validated."""
    rec = load_poly_file(data_path(k, ell, data_dir), k=k, ell=ell)
    rec.validate_label()
    return rec
