"""Exception types shared across the package."""


class ComplexError(ValueError):
    """Input data does not describe a simplicial complex."""


class UnsupportedDimensionError(ValueError):
    """An operation was asked for a dimension it does not support."""


class GroundCapError(ValueError):
    """A matroid ground set exceeds the reorientation scan cap."""

    def __init__(self, ground_size, cap):
        self.ground_size = ground_size
        self.cap = cap
        super().__init__(
            "ground set of size %d exceeds reorientation cap %d" % (ground_size, cap)
        )


class NotTautError(ValueError):
    """A surface invariant was requested for a non-taut complex.

    ``offenders`` lists (stratum index, boundary circle index, edge cycle)
    for every boundary circle whose attaching map backtracks.
    """

    def __init__(self, offenders):
        self.offenders = tuple(offenders)
        super().__init__("complex is not taut: %d offending boundary circle(s)"
                         % len(self.offenders))


class InternalCheckError(AssertionError):
    """A structural self-check failed.

    This signals a bug in the library, never bad user input: the violated
    conditions are guaranteed by theory for well-formed inputs.
    """
