"""Domain error hierarchy shared by all modules.

Every error raised on bad mathematical input derives from DomainError so
the CLI can map them to a single exit code; the class name itself is the
stable, user-visible error tag.
"""


class DomainError(Exception):
    pass


class InvalidRank(DomainError):
    pass


class EmptyMarking(DomainError):
    pass


class NodeOutOfRange(DomainError):
    pass


class NotMaximalParabolic(DomainError):
    pass


class NonDominantWeight(DomainError):
    pass


class UnsupportedWeight(DomainError):
    pass


class ArityMismatch(DomainError):
    pass


class ZeroClass(DomainError):
    pass


class InvalidGroup(DomainError):
    pass


class InvalidDimension(DomainError):
    pass


class UnknownVariety(DomainError):
    pass


class ParameterViolation(DomainError):
    pass


class DatabaseFormatError(DomainError):
    pass
