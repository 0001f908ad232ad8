"""Exception hierarchy shared by all modules."""


class RectcumError(ValueError):
    """Base class for domain errors raised by the library."""


class GuardError(RectcumError):
    """An enumeration size guard was exceeded."""


class SeriesDomainError(RectcumError):
    """exp/log called on a series with an inadmissible constant term."""


class PochhammerZeroError(RectcumError, ZeroDivisionError):
    """A Pochhammer-type denominator vanished at a rational specialization.

    ``index`` is the first order ``n`` at which the product is zero.
    """

    def __init__(self, message, index):
        super().__init__(message)
        self.index = index
