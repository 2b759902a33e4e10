"""Exception hierarchy shared across the toolkit."""


class SalemForgeError(Exception):
    """Base class for all toolkit errors."""


class PolyParseError(SalemForgeError):
    """Raised on malformed polynomial text; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class DegreeCapExceeded(SalemForgeError):
    """An operation would exceed a configured degree cap."""


class ZeroPolynomialError(SalemForgeError):
    """The zero polynomial was supplied where a nonzero one is required."""


class ZeroConstantTermError(SalemForgeError):
    """Composed products of roots need polynomials with nonzero constant term."""


class NotIrreducibleError(SalemForgeError):
    """An operation requires an irreducible (and possibly monic) polynomial."""


class InversionOfZeroError(SalemForgeError):
    """Multiplicative inverse of the algebraic number zero."""


class NotAnAlgebraicIntegerError(SalemForgeError):
    """Signature and related notions are defined for algebraic integers only."""


class NotInFieldError(SalemForgeError):
    """The algebraic number does not lie in the field of the Galois context."""


class NotDependentError(SalemForgeError):
    """No multiplicative relation was found within the exponent bound.

    Signals that the dependence hypothesis fails (or is undecided) for the
    pair at hand; callers may widen the bound and retry.
    """

    def __init__(self, message: str, max_exp: int):
        super().__init__(message)
        self.max_exp = max_exp


class TorsionInputError(SalemForgeError):
    """Roots of unity must be handled separately from the hyperbolic values."""


class IndependenceUnresolved(SalemForgeError):
    """Some pair is only known independent up to the exponent bound.

    Carries the best rank lower bound established so far.
    """

    def __init__(self, message: str, rank_lower_bound: int):
        super().__init__(message)
        self.rank_lower_bound = rank_lower_bound


class CompactPlaceViolation(SalemForgeError):
    """A compact-flagged embedding produced an eigenvalue off the unit circle."""


class VacuousBoundError(SalemForgeError):
    """The degree bound deg >= 1/w is vacuous because w = 0."""


class SpecValidationError(SalemForgeError):
    """A semisimple element spec violates its invariants."""


class CertificationFailure(SalemForgeError):
    """Internal certification could not be completed (e.g. a root box whose
    boundary passes through a root of its polynomial)."""
