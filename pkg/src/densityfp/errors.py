"""Exception types shared across the package."""


class ParseError(ValueError):
    """Raised when a sequence file or rational literal cannot be parsed."""


class InvalidSequence(ValueError):
    """Base class for sequences that parse but violate the model."""


class EmptyMotif(InvalidSequence):
    pass


class OverlapError(InvalidSequence):
    """Two initial intervals overlap (some gap is negative) or centers coincide."""


class NonMonotoneAbscissas(ValueError):
    pass


class DiscontinuityError(ValueError):
    pass


class NegativeArgument(ValueError):
    pass


class IndexOutOfRange(IndexError):
    pass


class IndexTooSmall(ValueError):
    pass
