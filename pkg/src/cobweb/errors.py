"""Exception types raised across the package."""


class CobwebError(Exception):
    """Base class for all library errors."""


class IndexOutOfRange(CobwebError, IndexError):
    pass


class InvalidRange(CobwebError, ValueError):
    pass


class InvalidPermutation(CobwebError, ValueError):
    pass


class InvalidSequence(CobwebError, ValueError):
    pass


class ZeroLevel(CobwebError, ValueError):
    pass


class CyclicInput(CobwebError, ValueError):
    pass


class MissingLevels(CobwebError, ValueError):
    pass


class NotAdmissible(CobwebError):
    def __init__(self, message, failure=None):
        super().__init__(message)
        self.failure = failure


class EnumerationCapExceeded(CobwebError):
    def __init__(self, count, cap):
        super().__init__(f"{count} chains exceed the enumeration cap {cap}")
        self.count = count
        self.cap = cap


class DimensionMismatch(CobwebError, ValueError):
    pass


class TruncationTooSmall(CobwebError, ValueError):
    pass
