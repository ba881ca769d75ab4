class MatroidError(Exception):
    """Base class for errors raised by matx."""


class DimensionMismatch(MatroidError, ValueError):
    pass


class RankDeficient(MatroidError, ValueError):
    pass


class UnknownLabel(MatroidError, KeyError):
    pass


class TooLarge(MatroidError):
    """Raised when an exhaustive routine is called past its size cap."""


class InvalidCandidate(MatroidError, ValueError):
    pass


class NotAnExtension(MatroidError, ValueError):
    pass


class BudgetExceeded(MatroidError):
    pass


class UnknownName(MatroidError, KeyError):
    pass


class BadRank(MatroidError, ValueError):
    pass


class UnknownClaim(MatroidError, KeyError):
    pass


class ParseError(MatroidError, ValueError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)
        self.line = line
        self.column = column
