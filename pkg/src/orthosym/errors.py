"""Exception types raised across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain of the operation (e.g. mu not inside nu)."""


class ParameterError(ValueError):
    """Parameter values for which a formula is undefined (e.g. xi = 1)."""


class DegreeOverflow(ValueError):
    """A result would exceed the configured degree cap."""


class DegenerateNormalization(ZeroDivisionError):
    """A normalizing constant such as (zz')_n vanishes."""
