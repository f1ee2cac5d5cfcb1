"""Exception hierarchy shared by all hooklab modules."""


class HooklabError(Exception):
    """Base class for all errors raised by hooklab."""


class ParseError(HooklabError):
    """Malformed partition or shape text."""


class NotAPartition(HooklabError):
    """Entries are not weakly decreasing positive integers."""


class NotContained(HooklabError):
    """The inner partition is not contained in the outer one."""


class BoxOutsideShape(HooklabError):
    """A box lies outside the Young diagram it was addressed in."""


class NotExtensible(HooklabError):
    """Incrementing the requested row does not give a partition."""


class CutoffTooSmall(HooklabError):
    """The supplied cutoff index does not clear both partitions."""


class MoveBlocked(HooklabError):
    """An excited move is blocked by a neighbouring box (or the box is absent)."""


class NotAnExcitation(HooklabError):
    """The diagram is not an excitation of the given straight shape."""


class NotSemistandard(HooklabError):
    """The filling is not a semistandard tableau of a straight shape."""


class NotStandard(HooklabError):
    """The filling is not a standard tableau."""


class NonpositiveBox(HooklabError):
    """A weight was requested for a box with a coordinate below 1."""


class UnassignedVariable(HooklabError):
    """An evaluation point does not cover some variable of the polynomial."""


class ZeroDenominator(HooklabError):
    """A denominator vanished at the current evaluation point; resample."""


class DimensionMismatch(HooklabError):
    """Matrix dimensions do not agree."""


class UnfailingArray(HooklabError):
    """flip() was applied to a twisted array without a failure."""


class SamplingExhausted(HooklabError):
    """Bounded resampling failed to find a point avoiding all denominators."""


class IdentityViolated(HooklabError):
    """An identity check found a counterexample; carries the witness."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness
