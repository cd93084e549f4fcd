class StrathomError(Exception):
    """Base class for errors raised by strathom."""


class ParseError(StrathomError):
    """Malformed complex or cocycle document."""


class ValidationError(StrathomError):
    """A complex failed a validation check required by the computation."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class NotFullSubcomplex(StrathomError):
    pass


class CocycleError(StrathomError):
    """Cocycle condition violated, or a cocycle unusable for the request."""

    def __init__(self, message, simplex=None):
        super().__init__(message)
        self.simplex = simplex


class CatalogError(StrathomError):
    pass
