"""Exception types raised across the package."""


class BetweennessError(ValueError):
    """Base class for all errors raised by this package."""


class DisconnectedGraph(BetweennessError):
    pass


class DisconnectedSubgraph(BetweennessError):
    pass


class EmptySubset(BetweennessError):
    pass


class SizeMismatch(BetweennessError):
    pass


class TrichotomyViolation(BetweennessError):
    """Two different middles were given for the same three points."""


class DegenerateTriple(BetweennessError):
    """A triple repeats a point."""


class TooLarge(BetweennessError):
    pass


class TooSmall(BetweennessError):
    pass


class NotTight(BetweennessError):
    pass


class PathIsGeodesic(BetweennessError):
    pass


class PathNotInduced(BetweennessError):
    pass


class BadEpsilon(BetweennessError):
    pass


class IsBlockGraph(BetweennessError):
    pass


class NotDistanceHereditary(BetweennessError):
    pass


class BudgetExceeded(BetweennessError):
    """The representation search visited more nodes than allowed.

    ``explored`` holds the number of search nodes visited and ``found`` the
    representations confirmed before the search stopped.
    """

    def __init__(self, message, explored=0, found=()):
        super().__init__(message)
        self.explored = explored
        self.found = list(found)


class FormatError(BetweennessError):
    """Malformed input file; ``line`` is 1-based when known."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
