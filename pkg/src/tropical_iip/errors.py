"""Exception hierarchy shared by every module."""


class TropicalError(Exception):
    """Base class for all errors raised by this package."""


class ShapeError(TropicalError, ValueError):
    """Operand dimensions do not fit the operation."""


class UnsupportedEntryError(TropicalError, ValueError):
    """An entry is epsilon where only finite values are allowed."""


class PreconditionError(TropicalError, ValueError):
    """The input is outside the class of matrices a solver handles."""


class DivergenceError(TropicalError, ArithmeticError):
    """The Kleene star series is unbounded (maximum cycle mean > 0)."""


class UnsupportedInstanceError(TropicalError):
    """No polynomial method applies and brute force is out of budget."""


class BudgetExceededError(TropicalError):
    """A brute-force enumeration would exceed its candidate budget."""


class ParseError(TropicalError, ValueError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)
