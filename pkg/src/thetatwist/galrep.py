"""Frobenius conjugacy data derived from characteristic polynomials.

For an unramified prime p the attached Frobenius has characteristic
polynomial x^2 - a_p x + p^{k-1} over F_ell.  Its image in PGL_2(F_ell) is
classified by the discriminant: a split class (distinct eigenvalues in
F_ell), a nonsplit class (conjugate eigenvalues in F_{ell^2}), or ambiguous
when the discriminant vanishes (scalar vs. non-semisimple cannot be told
apart from trace and determinant alone).  The projective order of the class
is the multiplicative order of the eigenvalue ratio, and it determines the
cycle type of the class acting on the ell+1 points of the projective line.

screen_exceptional runs three bounded congruence tests (reducible, dihedral,
small projective image) against the coefficients of delta_k.  These are
heuristic candidate flags reconstructed from the classical congruences, not
proofs; the report records the prime bound that was scanned.
"""

from dataclasses import dataclass, asdict

from .errors import RamifiedPrime
from .ffield import (
    Residue,
    QuadElt,
    check_prime,
    find_nonresidue,
    is_prime,
    legendre,
    mult_order,
    primes_upto,
    quad_mult_order,
    sqrt_mod,
)
from .qseries import delta_k

SPLIT = "split"
NONSPLIT = "nonsplit"
AMBIGUOUS = "ambiguous"


@dataclass(frozen=True)
class CharpolData:
    """Trace and determinant of Frobenius at p: x^2 - trace*x + det."""

    p: int
    trace: Residue
    det: Residue

    @property
    def ell(self):
        return self.trace.modulus


def charpol_data(k, ell, p, a_p):
    """Characteristic-polynomial data (a_p mod ell, p^{k-1} mod ell)."""
    check_prime(ell)
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p == ell:
        raise RamifiedPrime(f"p = ell = {p} is ramified")
    t = a_p if isinstance(a_p, Residue) else Residue(a_p, ell)
    if t.modulus != ell:
        raise ValueError("a_p carries the wrong modulus")
    return CharpolData(p=p, trace=t, det=Residue(pow(p, k - 1, ell), ell))


@dataclass(frozen=True)
class FrobeniusClass:
    """PGL_2(F_ell) conjugacy type: split/nonsplit with projective order, or ambiguous."""

    kind: str
    order: int = None

    @property
    def is_ambiguous(self):
        return self.kind == AMBIGUOUS


def frobenius_class(c, ell=None):
    """Classify the Frobenius class from trace and determinant.

    Split: the discriminant t^2 - 4d is a nonzero square; the projective
    order is the order of the root ratio in F_ell (either ratio, the order is
    the same).  Nonsplit: the discriminant is a non-square; the order of
    lambda/conj(lambda) is computed in F_{ell^2}.  Zero discriminant gives
    the ambiguous class.
    """
    if ell is None:
        ell = c.ell
    elif ell != c.ell:
        raise ValueError("modulus disagrees with the stored data")
    t, d = c.trace, c.det
    if not d:
        raise ValueError("determinant must be a unit")
    disc = t * t - 4 * d
    sign = legendre(disc)
    if sign == 0:
        return FrobeniusClass(AMBIGUOUS)
    inv2 = Residue(2, ell).inverse()
    if sign == 1:
        s = sqrt_mod(disc)
        r1 = (t + s) * inv2
        r2 = (t - s) * inv2
        n = mult_order(r1 / r2)
        assert (ell - 1) % n == 0, "split order must divide ell - 1"
        return FrobeniusClass(SPLIT, n)
    c0 = find_nonresidue(ell)
    s = sqrt_mod(disc / c0)
    lam = QuadElt(t * inv2, s * inv2, c0)
    n = quad_mult_order(lam / lam.conjugate())
    assert n >= 2 and (ell + 1) % n == 0, "nonsplit order must divide ell + 1"
    return FrobeniusClass(NONSPLIT, n)


def predicted_degree_pattern(fc, ell):
    """Cycle-length multiset of the class acting on the ell+1 projective points.

    Split(n) fixes the two eigenlines and moves the remaining ell-1 points in
    n-cycles; NonSplit(n) has no fixed points and only n-cycles.  Ambiguous
    returns the pair of admissible patterns (all fixed for a scalar, one
    fixed point plus one ell-cycle for the non-semisimple class).
    """
    if fc.kind == AMBIGUOUS:
        return (1,) * (ell + 1), (1, ell)
    n = fc.order
    if fc.kind == SPLIT:
        return tuple(sorted([1, 1] + [n] * ((ell - 1) // n)))
    return (n,) * ((ell + 1) // n)


@dataclass(frozen=True)
class ScreeningReport:
    """Outcome of the three heuristic exceptional-prime tests."""

    k: int
    ell: int
    bound: int
    reducible_candidate: bool
    reducible_j: int
    dihedral_candidate: bool
    small_image_candidate: bool
    verdict: str

    def to_json_dict(self):
        return asdict(self)

    @classmethod
    def from_json_dict(cls, d):
        return cls(**d)


def screen_exceptional(k, ell, bound, series=None):
    """Scan primes p <= bound for congruences that betray a small image.

    reducible: some fixed j has a_p = p^j + p^{k-1-j} for every tested p.
    dihedral: a_p = 0 for every tested p that is a non-residue mod ell.
    small image: every non-ambiguous projective order lies in {1,...,5}
    (the orders occurring in the exceptional polyhedral subgroups).
    The verdict is "likely unexceptional" only when all three are clear.
    """
    f = series if series is not None else delta_k(k, ell, bound)
    primes = [p for p in primes_upto(bound) if p != ell]
    a = {p: f.coeff(p) for p in primes}

    reducible_j = None
    for j in range(ell - 1):
        e1 = j % (ell - 1)
        e2 = (k - 1 - j) % (ell - 1)
        if all(a[p] == (pow(p, e1, ell) + pow(p, e2, ell)) % ell for p in primes):
            reducible_j = j
            break

    nonres = [p for p in primes if legendre(Residue(p, ell)) == -1]
    dihedral = bool(nonres) and all(a[p] == 0 for p in nonres)

    orders = set()
    for p in primes:
        fc = frobenius_class(charpol_data(k, ell, p, a[p]))
        if not fc.is_ambiguous:
            orders.add(fc.order)
    small_image = bool(orders) and orders <= {1, 2, 3, 4, 5}

    reducible = reducible_j is not None
    clear = not (reducible or dihedral or small_image)
    return ScreeningReport(
        k=k,
        ell=ell,
        bound=bound,
        reducible_candidate=reducible,
        reducible_j=reducible_j,
        dihedral_candidate=dihedral,
        small_image_candidate=small_image,
        verdict="likely unexceptional" if clear else "possibly exceptional",
    )
