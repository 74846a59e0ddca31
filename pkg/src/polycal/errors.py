"""Exception types shared across the package."""


class PolycalError(Exception):
    """Base class for all errors raised by polycal."""


class DimensionMismatch(PolycalError, ValueError):
    pass


class EmptySet(PolycalError):
    """Raised when an operation needs a nonempty polyhedron."""


class PointNotInSet(PolycalError):
    pass


class NotInDomain(PointNotInSet):
    pass


class NotInGraph(PointNotInSet):
    pass


class NegativeScalar(PolycalError, ValueError):
    pass


class ImproperValue(PolycalError):
    """The optimal value function would take the value -inf (or is +inf everywhere)."""


class MalformedInstance(PolycalError, ValueError):
    pass


class CapsExceeded(PolycalError, ValueError):
    pass


class FormatError(PolycalError, ValueError):
    """Bad instance document.  ``field`` names the offending location when known,
    ``line``/``column`` are set for JSON syntax errors."""

    def __init__(self, message, field=None, line=None, column=None):
        self.field = field
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}, column {column}: "
        elif field:
            where = f"{field}: "
        super().__init__(where + message)
