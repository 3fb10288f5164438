"""Exception types raised by the engine.

Every domain error derives from :class:`DomainError` (a ``ValueError``) and
carries a short machine-readable ``kind`` used by the command line.
"""


class DomainError(ValueError):
    kind = "domain error"


class OutOfRange(DomainError):
    kind = "out of range"


class NotInDomain(DomainError):
    kind = "not in domain"


class ExcludedPartition(NotInDomain):
    kind = "excluded partition"


class TooLarge(DomainError):
    """A brute-force routine would exceed its configured cap."""

    kind = "too large"


class EnumerationTooLarge(TooLarge):
    kind = "enumeration too large"


class OracleTooLarge(TooLarge):
    kind = "oracle too large"


class CapExceeded(TooLarge):
    kind = "cap exceeded"


class NotACharacter(DomainError):
    kind = "not a nonnegative character"


class NonsquareQ(DomainError):
    kind = "nonsquare q with half-powers"


class ResidualQDependence(DomainError):
    kind = "residual q-dependence"


class MethodUnsupported(DomainError):
    kind = "method unsupported"
