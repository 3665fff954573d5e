"""Exception hierarchy.

Everything raised for a violated mathematical precondition derives from
``DomainError`` so callers (and the CLI, which maps it to exit code 3) can
catch the whole family at once.
"""


class DomainError(ValueError):
    """A value lies outside the domain of the requested operation."""


class DimensionMismatch(DomainError):
    pass


class IndexOutOfRange(DomainError):
    pass


class ZeroBody(DomainError, ZeroDivisionError):
    """Inverse requested of a nilpotent (zero-body) Grassmann element."""


class ZeroBodyNonIntegerPower(DomainError):
    pass


class SingularMatrix(DomainError):
    pass


class SingularBody(SingularMatrix):
    pass


class SingularOddOddBlock(SingularMatrix):
    pass


class SingularMinor(SingularMatrix):
    """The chart's minor is not invertible at this point."""


class ParityError(DomainError):
    pass


class PoleAtNonPositiveInteger(DomainError):
    pass


class PoleInC(DomainError):
    pass


class NoConvergentRepresentation(DomainError):
    pass


class UnresolvablePole(DomainError):
    pass


class SineZero(DomainError):
    pass


class ExponentOutOfRange(DomainError):
    pass


class NonConvergent(DomainError):
    pass


class NonIntegerPowerOnOddForm(DomainError):
    pass


class UnboundedChamber(DomainError):
    pass
