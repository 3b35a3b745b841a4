"""Exception types shared across the package."""


class PebblabError(Exception):
    """Base class for every error raised by this package."""


class GraphError(PebblabError, ValueError):
    """Invalid graph construction or graph-family parameters."""


class DuplicateVertexError(GraphError):
    pass


class SelfLoopError(GraphError):
    pass


class BidirectionalEdgeError(GraphError):
    pass


class UnknownEndpointError(GraphError):
    pass


class UnknownVertexError(GraphError):
    pass


class AssignmentError(PebblabError, ValueError):
    """Invalid pebble counts or assignment-family parameters."""


class IllegalMoveError(AssignmentError):
    pass


class StateBudgetExceededError(PebblabError):
    """State-graph construction would exceed the configured state cap.

    Raised instead of truncating: a truncated state graph would silently
    falsify isomorphism and traversability answers.
    """

    def __init__(self, budget: int):
        self.budget = budget
        super().__init__(f"state graph exceeds the budget of {budget} states")


class SearchBudgetExceededError(PebblabError):
    """A backtracking search hit its node-expansion cap before finishing.

    Distinguishes "not found within budget" from a proved absence.
    """

    def __init__(self, budget: int):
        self.budget = budget
        super().__init__(f"search exceeded the budget of {budget} expansions")


class EmbeddingNotFoundError(PebblabError):
    pass


class ParseError(PebblabError, ValueError):
    """Malformed graph text; carries the 1-based offending line number."""

    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


class UnknownClaimError(PebblabError, ValueError):
    pass
