"""Exception types raised across the package."""


class RingLabError(Exception):
    """Base class for every error this package raises deliberately."""


class RingValidationError(RingLabError):
    """A pair of Cayley tables failed ring validation."""


class BadEntry(RingValidationError):
    """A table is malformed: wrong shape, or an entry outside 0..n-1."""


class NotAbelianGroup(RingValidationError):
    """The addition table is not an abelian group with identity at index 0."""


class NotAssociative(RingValidationError):
    """Multiplication is not associative; carries a witness triple."""

    def __init__(self, i: int, j: int, k: int):
        self.witness = (i, j, k)
        super().__init__(f"(x*y)*z != x*(y*z) at (x, y, z) = ({i}, {j}, {k})")


class NotDistributive(RingValidationError):
    """A distributive law fails; carries a witness triple and the side."""

    def __init__(self, i: int, j: int, k: int, side: str):
        self.witness = (i, j, k)
        self.side = side
        super().__init__(f"{side} distributivity fails at ({i}, {j}, {k})")


class IndexOutOfRange(RingLabError):
    """An element index is not in 0..order-1."""


class NotLeftIdentity(RingLabError):
    """The element passed as a left identity does not satisfy e*x = x."""


class NotAnIdeal(RingLabError):
    """The subset is not a two-sided ideal."""


class NotPrime(RingLabError):
    """A parameter that must be prime is not."""


class TooLarge(RingLabError):
    """A requested construction exceeds the configured size cap."""


class BadDimensions(RingLabError):
    """Builder dimensions out of range."""


class EmptyFactorList(RingLabError):
    """An invariant-factor list must contain at least one factor."""


class OrderTooLarge(RingLabError):
    """A requested enumeration order exceeds the configured cap."""


class VertexNotInGraph(RingLabError):
    """The element is not a vertex of the graph."""


class InternalInvariantViolation(RingLabError):
    """Two routes that must agree disagreed; signals an implementation bug."""
