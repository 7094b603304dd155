"""Exception types shared across the package."""


class Error(Exception):
    """Base class for every error raised by this package."""


class SizeTooSmall(Error):
    """A generator was asked for a size below its defined minimum."""


class MixedLengths(Error):
    pass


class DisjointnessViolated(Error):
    pass


class OutOfDomain(Error):
    """A subdomain does not fit inside the picture it was taken from."""


class WrongSize(Error):
    pass


class WrongAlphabet(Error):
    pass


class MixedSizes(Error):
    """A picture set mixes pictures of different sizes."""


class WitnessMismatch(Error):
    """An overlap witness does not actually hold for the given pair."""


class NotInX(Error):
    pass


class RepairFailed(Error):
    """The repair procedure ran out of moves or budget. Treat as a defect signal."""


class NotNonOverlapping(Error):
    """A verifier precondition (the input set must be non-overlapping) failed."""


class FrameIncompatible(Error):
    pass


class WorkLimitExceeded(Error):
    """The requested computation is larger than the configured work limit."""

    def __init__(self, required: int, limit: int):
        super().__init__(f"work limit exceeded: {required} > {limit}")
        self.required = required
        self.limit = limit
