"""Exception types raised across the package."""


class BidoubleError(ValueError):
    """Base class for precondition failures."""


class SingularMatrixError(BidoubleError):
    """A nondegenerate matrix or form was required."""


class AxiomError(BidoubleError):
    """An input algebra, module or bialgebra failed its defining identities."""

    def __init__(self, message, certificate=None):
        super().__init__(message)
        self.certificate = certificate


class KindError(BidoubleError):
    """Operation not defined for this kind of algebra, law or side."""


class NotSubalgebraError(BidoubleError):
    """A proposed summand is not closed under the product."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class ParseError(BidoubleError):
    """Malformed input file."""
