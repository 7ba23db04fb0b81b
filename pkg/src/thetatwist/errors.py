"""Exception types shared across the package."""


class ThetaTwistError(Exception):
    """Base class for every error this package raises deliberately."""


class ModulusMismatch(ThetaTwistError):
    """Operands carry different moduli.

    Always a programming error: a single run fixes one prime, so mixed
    moduli are never recoverable.
    """


class ZeroElement(ThetaTwistError):
    """Multiplicative order requested for the zero element."""


class UnsupportedWeight(ThetaTwistError):
    """Weight outside the supported one-dimensional cusp-space list."""


class InsufficientPrecision(ThetaTwistError):
    """A coefficient beyond the recorded precision was requested.

    Truncated series never zero-extend silently; doing so is the classic
    source of false equality verdicts.
    """


class WeightIncongruent(ThetaTwistError):
    """The twist weight congruence k1 = k2 + 2i (mod ell-1) fails."""


class PrimeMismatch(ThetaTwistError):
    """A bounded prime check a_p(f1) = p^i * a_p(f2) failed."""

    def __init__(self, p, lhs, rhs):
        super().__init__(f"coefficient mismatch at prime p={p}: {lhs} != {rhs}")
        self.p = p
        self.lhs = lhs
        self.rhs = rhs


class CoefficientMismatch(ThetaTwistError):
    """The extended full-series check a_n(f1) = n^i * a_n(f2) failed."""

    def __init__(self, index, lhs, rhs):
        super().__init__(f"coefficient mismatch at index n={index}: {lhs} != {rhs}")
        self.index = index
        self.lhs = lhs
        self.rhs = rhs


class NotFound(ThetaTwistError):
    """No (i, k') pair passed the twist criteria."""


class RamifiedPrime(ThetaTwistError):
    """Frobenius data requested at the ramified prime p = ell."""


class NotSquarefree(ThetaTwistError):
    """Distinct-degree factorization requires a squarefree input."""


class ParseError(ThetaTwistError):
    """Polynomial expression could not be parsed."""

    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class DuplicateTerm(ParseError):
    """The same exponent appeared twice in a polynomial expression."""


class NonMonicWarning(UserWarning):
    """Parsed polynomial is not monic; retained for generality."""
