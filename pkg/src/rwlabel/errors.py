"""Exception types shared across the package."""


class ParameterError(ValueError):
    """A family or function parameter lies outside its domain."""


class SizeLimitError(ValueError):
    """A graph is larger than the configured cap for an exponential routine."""


class DisconnectedGraphError(ValueError):
    pass


class IntegralityError(ArithmeticError):
    """An expression that must be an integer evaluated to a proper fraction.

    Raised by closed forms with rational intermediates; it almost always
    means a formula was transcribed wrongly.
    """


class OfflineError(LookupError):
    """Offline mode was requested and no cached or vendored copy exists."""


class BFileParseError(ValueError):
    pass


class FetchError(OSError):
    pass
