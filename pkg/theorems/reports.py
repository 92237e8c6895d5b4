"""Errors shared by the validators."""

from typing import Any, Dict, Optional


class PreconditionFailed(ValueError):
    """The input does not satisfy the hypotheses of the statement being checked."""


class TheoremViolated(ValueError):
    """
    A checked statement failed on an input satisfying its hypotheses.

    ``counterexample`` holds the offending net or parameters as JSON data.
    """

    def __init__(self, message: str, counterexample: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.counterexample = counterexample or {}


class NotOrder4(PreconditionFailed):
    """The net does not have order 4."""


class NotOrder2(PreconditionFailed):
    """The net does not have order 2."""


class NoEquivalence(TheoremViolated):
    """No projectivity carries the order-2 net onto the Pasch configuration."""


class CanonicalizationFailed(PreconditionFailed):
    """No component has three non-collinear points."""
