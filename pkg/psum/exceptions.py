class PsumError(Exception):
    """Base class for errors raised by the psum library."""


class GroupError(PsumError):
    pass


class CayleyTableError(GroupError):
    """A Cayley table failed one of the group axioms.

    ``triple`` holds the first offending element indices, when the
    violated law involves specific elements.
    """

    def __init__(self, message, triple=None):
        super().__init__(message)
        self.triple = triple


class OrderingError(PsumError):
    pass


class HypothesisError(PsumError):
    pass


class InternalCaseGap(PsumError):
    """No branch of a constructive case analysis produced a simple ordering."""

    def __init__(self, message, branch=None):
        super().__init__(message)
        self.branch = branch


class CheckpointError(PsumError):

    def __init__(self, message, offset=None):
        super().__init__(message)
        self.offset = offset


class LengthListError(PsumError):
    pass
