"""Exception types shared across the package."""


class GameError(Exception):
    """Base class for every error raised by this package."""


class InvalidParameterError(GameError):
    """A constructor or operation received an out-of-domain parameter."""


class InvalidEdgeError(GameError):
    """An edge was not in canonical (u, v) form with 0 <= u < v < n."""


class IllegalMoveError(GameError):
    """A move targeted an edge that is already claimed."""


class ReplayError(GameError):
    """A transcript could not be replayed as legal play."""


class CapacityExceededError(GameError):
    """An exhaustive operation was asked to run beyond its supported size."""


class ConfigError(GameError):
    """An experiment configuration or strategy id could not be resolved."""


class TranscriptParseError(GameError):
    """A transcript file violated the line grammar.

    ``line_number`` is 1-based and points at the offending line.
    """

    def __init__(self, message: str, line_number: int):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


class GuaranteeViolatedError(GameError):
    """A strategy reached a state its survival argument rules out.

    Signals either an implementation bug or a board too small for the
    asymptotic argument behind the strategy.
    """
