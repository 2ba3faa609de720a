"""Exception types shared across the package."""


class InputError(ValueError):
    """Invalid user-supplied parameters (bad p/q, n = 0, k not 5 mod 7, ...)."""


class WordParseError(InputError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class ResourceError(RuntimeError):
    """A search would exceed the configured size bound."""


class GroupClosureError(RuntimeError):
    """Generators closed up to more elements than expected."""


class CertificateIntegrityError(RuntimeError):
    """A value the proof depends on failed to check."""


class PreconditionError(ValueError):
    pass


class NotATranslationError(ValueError):
    pass
