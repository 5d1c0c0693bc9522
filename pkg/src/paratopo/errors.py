"""Exception hierarchy shared by every module."""


class ParatopoError(ValueError):
    """Base class for all library errors."""


class MissingExtremes(ParatopoError):
    pass


class NotClosedUnderOps(ParatopoError):
    def __init__(self, op: str, left: int, right: int):
        self.op = op
        self.left = left
        self.right = right
        super().__init__(
            f"family is not closed under {op}: "
            f"{_fmt(left)} {op} {_fmt(right)} is missing"
        )


class EmptyCarrier(ParatopoError):
    pass


class ValuationNotClosed(ParatopoError):
    def __init__(self, prop: str):
        self.prop = prop
        super().__init__(f"valuation of {prop!r} is not a closed set")


class ValuationNotOpen(ParatopoError):
    def __init__(self, prop: str):
        self.prop = prop
        super().__init__(f"valuation of {prop!r} is not an open set")


class ModeMismatch(ParatopoError):
    def __init__(self, mode, offending=(), message=None):
        self.mode = mode
        self.offending = sorted(set(offending))
        if message is None:
            message = (
                f"formula uses {', '.join(repr(o) for o in self.offending)} "
                f"which is not admitted in {mode} mode"
            )
        super().__init__(message)


class WrongMode(ParatopoError):
    pass


class AlgebraOverflow(ParatopoError):
    pass


class PreconditionFailed(ParatopoError):
    pass


class SizeMismatch(ParatopoError):
    pass


class MapSpaceOverflow(ParatopoError):
    pass


class NotHomeomorphism(ParatopoError):
    def __init__(self, index: int):
        self.index = index
        super().__init__(f"map at fence index {index} is not a homeomorphism")


class FormulaSyntaxError(ParatopoError):
    """Raised by the parser; carries 1-based line/column and the expected tokens."""

    def __init__(self, message: str, line: int, column: int, expected=()):
        self.line = line
        self.column = column
        self.expected = tuple(sorted(set(expected)))
        detail = f" (expected one of: {' '.join(self.expected)})" if self.expected else ""
        super().__init__(f"{message} at line {line}, column {column}{detail}")


def _fmt(mask: int) -> str:
    members = [i for i in range(mask.bit_length()) if mask >> i & 1]
    return "{" + ",".join(map(str, members)) + "}"
