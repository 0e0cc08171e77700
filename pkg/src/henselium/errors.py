"""Exception hierarchy shared across the package."""


class HenseliumError(Exception):
    """Base class for all errors raised by this package."""


class RankMismatchError(HenseliumError):
    """Two exponents (or series) of different rank were combined."""


class FieldMismatchError(HenseliumError):
    """Two series over different coefficient fields were combined."""


class PrecisionError(HenseliumError):
    """An operation was asked for more precision than is available or reachable."""


class ZeroLeadingTermError(HenseliumError):
    """Inversion/division by an element with empty support was attempted."""


class NegativeCoarseValueError(HenseliumError):
    """A residue was taken of an element outside the coarse valuation ring."""


class NotSimpleRootError(HenseliumError):
    """Newton refinement requires the derivative to be a unit at the approximant."""


class NotApproximateRootError(HenseliumError):
    """Newton refinement requires f(c) to have strictly positive value."""


class NonTerminationError(HenseliumError):
    """An iteration cap was hit; usually a symptom of an unreachable target."""


class InvariantError(HenseliumError):
    """A certified invariant (value doubling, degree preservation, ...) failed."""


class NotCoprimeError(HenseliumError):
    """The residue factors are not coprime (extended gcd is not a unit)."""


class ResidueMismatchError(HenseliumError):
    """The supplied residue data does not match the polynomial's residue."""


class HypothesisNotMetError(HenseliumError):
    """Sampled evidence contradicts the hypothesis of a certification routine."""


class ParseError(HenseliumError):
    """Syntax error in the expression language; carries the input position."""

    def __init__(self, message, position=None):
        super().__init__(message if position is None else f"{message} (at position {position})")
        self.position = position


class ScenarioError(HenseliumError):
    """A scenario file is malformed or one of its commands failed."""
