"""Exception hierarchy shared by all modules."""


class SurfGridError(Exception):
    """Base class for every error raised by surfgrids."""


class StructuralError(SurfGridError, ValueError):
    """The input does not describe a valid connected signed rotation system."""


class SmapParseError(StructuralError):
    """Syntax or validation error in an SMAP, plan or graph file."""

    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class PreconditionError(SurfGridError, ValueError):
    """An operation was called on an input outside its domain."""


class NotAGridError(PreconditionError):
    pass


class EmptyCurvatureError(PreconditionError):
    pass


class MalformedPatchError(SurfGridError, ValueError):
    """A face boundary does not read corner, points, corner, points, ..."""


class BudgetError(SurfGridError):
    """An enumeration would exceed its budget."""


class InfeasibleError(SurfGridError):
    """No closed surface can host the requested object."""


class InvariantError(SurfGridError, AssertionError):
    """A post-condition that must hold for correct input failed (a defect)."""
