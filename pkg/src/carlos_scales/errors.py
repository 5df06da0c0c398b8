"""Exception hierarchy."""


class CarlosError(Exception):
    """Base class for all errors raised by carlos_scales."""


class DomainError(CarlosError, ValueError):
    """An argument lies outside the domain of the operation."""


class ParameterOrderError(DomainError):
    """Step-count parameters violate a required strict ordering."""


class DegeneratePairError(DomainError):
    """Both intervals of a pair have the same ratio."""


class SpecParseError(CarlosError, ValueError):
    """A textual interval or system description could not be parsed."""

    def __init__(self, message: str, token: str | None = None) -> None:
        super().__init__(message)
        self.token = token


class BracketError(CarlosError, ValueError):
    """A search bracket does not contain the minimizer."""


class BoundsRequiredError(CarlosError, ValueError):
    """A parameter search was requested without finite bounds."""
