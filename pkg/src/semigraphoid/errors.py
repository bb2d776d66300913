"""Exception hierarchy shared by the library and the command line."""


class SemigraphoidError(Exception):
    """Base class for all errors raised by this package."""


class InvalidTriplet(SemigraphoidError, ValueError):
    pass


class OverlappingSets(InvalidTriplet):
    """The three sets of a triplet are not pairwise disjoint."""


class EmptySide(InvalidTriplet):
    """One of the two independent sides of a triplet is empty."""


class UniverseMismatch(SemigraphoidError, ValueError):
    """A triplet or relation refers to variables outside its universe."""


class UniverseTooLarge(SemigraphoidError):
    """A brute-force routine was asked to materialize too large a universe."""

    def __init__(self, n: int, limit: int):
        super().__init__(
            f"universe has {n} variables; brute-force guard allows at most {limit} "
            "(pass a larger max_vars to override)"
        )
        self.n = n
        self.limit = limit


class NotClosed(SemigraphoidError, ValueError):
    """A relation that must be axiom-closed is not."""

    def __init__(self, message: str, violations=()):
        super().__init__(message)
        self.violations = list(violations)


class ParseError(SemigraphoidError, ValueError):
    def __init__(self, line: int, reason: str):
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason
