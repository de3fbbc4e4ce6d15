"""Exception hierarchy shared by every layer of the package."""


class ZinbielError(Exception):
    """Base class for all errors raised by this package."""


# scalar layer

class DivisionByZero(ZinbielError, ZeroDivisionError):
    pass


class MissingParameter(ZinbielError, KeyError):
    def __init__(self, name):
        super().__init__(name)
        self.name = name

    def __str__(self):
        return f"no value supplied for parameter {self.name!r}"


class PoleAtAssignment(ZinbielError, ZeroDivisionError):
    def __init__(self, expr, assignment):
        at = ", ".join(f"{k}={v}" for k, v in sorted(assignment.items()))
        super().__init__(f"denominator of {expr} vanishes at {at}")
        self.expr = expr
        self.assignment = assignment


class UnknownParameter(ZinbielError, ValueError):
    def __init__(self, name, position=None):
        where = f" at position {position}" if position is not None else ""
        super().__init__(f"undeclared parameter {name!r}{where}")
        self.name = name
        self.position = position


class ExprSyntaxError(ZinbielError, ValueError):
    """Malformed coefficient expression; ``position`` is a 0-based offset."""

    def __init__(self, message, text, position):
        super().__init__(f"{message} at position {position} in {text!r}")
        self.text = text
        self.position = position


# algebra / structure layer

class DimensionMismatch(ZinbielError, ValueError):
    pass


class NotNilpotentWithinBound(ZinbielError):
    pass


class IncompleteWitness(ZinbielError, ValueError):
    pass


class InvalidWitness(ZinbielError, ValueError):
    pass


# catalog layer

class UnknownKey(ZinbielError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else "unknown catalog key"


class DimensionOutOfRange(ZinbielError, ValueError):
    pass


class IllFormedEntry(ZinbielError, ValueError):
    """A table assigns two values to one product, or violates the file schema."""


# morphism layer

class SingularMap(ZinbielError, ValueError):
    pass


# file layer

class FileFormatError(ZinbielError, ValueError):
    """A file does not follow the algebra or matrix file schema."""
