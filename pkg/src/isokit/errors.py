class IsokitError(Exception):
    """Base class for all errors raised by isokit."""


class InputError(IsokitError, ValueError):
    """Malformed or ill-typed input (bad reference, sort mismatch, ...)."""


class ParseError(InputError):
    """Text or JSON that cannot be parsed against its schema."""


class ValidationError(IsokitError):
    """A structure violates the laws it is supposed to satisfy.

    ``violations`` is a list of JSON-friendly dicts, each naming the law and
    a witness.
    """

    def __init__(self, message, violations=()):
        super().__init__(message)
        self.violations = list(violations)

    def to_json(self):
        return {"error": str(self), "violations": self.violations}
