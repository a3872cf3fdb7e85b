"""Exception types shared across the package."""


class SizeMismatchError(ValueError):
    """A colouring and a graph (or two colourings) disagree on vertex count."""


class NoConstructionError(ValueError):
    """No construction applies to the requested parameters.

    The message names the hypothesis that failed.
    """


class VerificationError(RuntimeError):
    """A construction produced output that fails the shared verifier.

    This signals a bug, never bad user input.
    """


class BudgetExceededError(RuntimeError):
    """The exact solver ran out of search nodes before deciding."""

    def __init__(self, message, last_decided_t=None, nodes=0):
        super().__init__(message)
        self.last_decided_t = last_decided_t
        self.nodes = nodes
