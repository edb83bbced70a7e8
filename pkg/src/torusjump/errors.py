"""Exception hierarchy shared by every module."""


class TorusJumpError(Exception):
    """Base class for all library errors."""


class RingMismatchError(TorusJumpError, ValueError):
    pass


class ExactDivisionError(TorusJumpError, ArithmeticError):
    pass


class ParseError(TorusJumpError, ValueError):
    pass


class NotATorusPoint(TorusJumpError, ValueError):
    """A character coordinate is zero (or not a valid field element)."""


class DomainError(TorusJumpError, ValueError):
    """An operation was requested over an unsuitable coefficient domain."""


class ResourceLimitExceeded(TorusJumpError, RuntimeError):
    pass


class UnsupportedExtension(TorusJumpError, ValueError):
    pass


class UnsupportedPresentation(TorusJumpError, ValueError):
    pass


class SchemaError(TorusJumpError, ValueError):
    def __init__(self, pointer, message):
        super().__init__(f"{pointer or '/'}: {message}")
        self.pointer = pointer


class ComplexConditionViolated(TorusJumpError, ValueError):
    def __init__(self, degree, detail=""):
        msg = f"d^{degree + 1} * d^{degree} != 0"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)
        self.degree = degree


class ShapeMismatch(TorusJumpError, ValueError):
    def __init__(self, degree, detail=""):
        msg = f"differential in degree {degree} has the wrong shape"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)
        self.degree = degree
