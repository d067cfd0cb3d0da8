"""Exception types and the wall-clock budget shared by the exact solvers."""

from __future__ import annotations

import time


class InputError(ValueError):
    """Malformed input or a violated precondition.

    ``field`` names the offending input when one can be identified.
    """

    def __init__(self, message: str, field: str | None = None):
        super().__init__(message)
        self.field = field


class PropertyViolation(AssertionError):
    """A checked mathematical property failed on a concrete instance."""


class ConsistencyError(RuntimeError):
    """An internal invariant of a construction did not hold."""


class BudgetExceeded(RuntimeError):
    """Raised when an exact search runs out of its time or size budget.

    ``bounds`` carries whatever partial information the solver had, e.g.
    ``{"lower": 3, "upper": 5}``; ``partial`` an already-built report
    fragment worth emitting anyway.
    """

    def __init__(self, message: str, bounds: dict | None = None, partial: dict | None = None):
        super().__init__(message)
        self.bounds = dict(bounds or {})
        self.partial = partial


class Budget:
    """Wall-clock budget checked at DFS-node granularity.

    ``tick`` is cheap: the clock is only consulted every ``stride`` calls.
    A budget with ``ms=None`` never expires.
    """

    def __init__(self, ms: float | None = None, stride: int = 512):
        self.ms = ms
        self.stride = stride
        self.nodes = 0
        self._start = time.monotonic()
        self._deadline = None if ms is None else self._start + ms / 1000.0

    def tick(self, what: str = "search") -> None:
        self.nodes += 1
        if self._deadline is not None and self.nodes % self.stride == 0:
            if time.monotonic() > self._deadline:
                raise BudgetExceeded(f"{what}: budget of {self.ms} ms exceeded")

    def elapsed_ms(self) -> float:
        return (time.monotonic() - self._start) * 1000.0


def tick(budget: Budget | None, what: str = "search") -> None:
    if budget is not None:
        budget.tick(what)
