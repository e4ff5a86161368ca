"""Exception hierarchy shared by the library and the command line."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class AdmissibilityError(DomainError):
    """A colour triple (or 6-tuple) fails the admissibility conditions."""


class RankDeficiencyError(DomainError):
    """A least-squares design matrix does not have full column rank."""


class ParseError(ValueError):
    """Malformed CSV or fixture input.  ``lineno`` is 1-based when known."""

    def __init__(self, message, lineno=None):
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
        self.lineno = lineno
