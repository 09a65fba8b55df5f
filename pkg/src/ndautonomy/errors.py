class ParseError(ValueError):
    """Malformed polynomial expression or system file.

    ``pos`` is the 0-based character offset (or ``None``), ``line`` the
    1-based line number in a system file (or ``None``).
    """

    def __init__(self, msg: str, pos=None, line=None):
        self.msg = msg
        self.pos = pos
        self.line = line
        where = []
        if line is not None:
            where.append(f"line {line}")
        if pos is not None:
            where.append(f"col {pos + 1}")
        super().__init__(f"{msg} ({', '.join(where)})" if where else msg)


class PreconditionError(ValueError):
    """Input is well formed but outside what the operation supports (e.g. k > 1)."""


class InvariantViolation(AssertionError):
    """A hard mathematical invariant failed; this signals a bug, not noise."""
