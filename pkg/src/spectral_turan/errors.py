"""Exception types shared across the package."""

from __future__ import annotations


class FamilyParameterError(ValueError):
    """A graph-family descriptor parameter violates its documented bound."""


class Graph6DecodeError(ValueError):
    """Malformed graph6 input. Carries the byte offset of the defect."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class BudgetExhaustedError(RuntimeError):
    """The backtracking node budget ran out: the answer is unknown, not 'no'."""

    def __init__(self, budget: int):
        super().__init__(f"containment search exceeded the node budget of {budget}")
        self.budget = budget


class ConvergenceError(RuntimeError):
    """An iterative eigensolver failed to reach the tolerance. Carries the
    best estimate so callers can still inspect it."""

    def __init__(self, message: str, estimate: float, iterations: int):
        super().__init__(message)
        self.estimate = estimate
        self.iterations = iterations


class SizeCapError(ValueError):
    """Input exceeds a documented size cap."""


class NegativeRadicandError(ValueError):
    """Bound inputs are inconsistent with any graph (negative radicand)."""


class UnsupportedCaseError(ValueError):
    """The forest spec falls outside every implemented theorem's hypothesis."""


class InfeasibleParameterError(ValueError):
    """No valid construction exists for the requested comparison parameters."""
