"""Deterministic work accounting used for time limits and reported runtimes.

All "seconds" reported by the solver, and all time limits it enforces, are
measured on a deterministic work-unit counter instead of the wall clock.
One work unit corresponds to one elementary solver operation (a label
extension, a scaled simplex pivot, ...), and UNITS_PER_SECOND converts
units to nominal seconds.  This makes every run with the same inputs and
seed bit-for-bit reproducible, including its reported timings, at the cost
of the "seconds" being nominal rather than measured.
"""

from __future__ import annotations

# Nominal solver throughput.  Calibrated once against CPython on commodity
# hardware; the exact value only scales reported times and limit budgets.
UNITS_PER_SECOND = 250_000


class WorkClock:
    """Monotone counter of deterministic work units with an optional limit."""

    __slots__ = ("units", "limit_units")

    def __init__(self, limit_seconds: float | None = None):
        self.units = 0
        self.limit_units = (
            None if limit_seconds is None else int(limit_seconds * UNITS_PER_SECOND)
        )

    def tick(self, n: int = 1) -> None:
        self.units += n

    def seconds(self) -> float:
        return self.units / UNITS_PER_SECOND

    def exceeded(self) -> bool:
        return self.limit_units is not None and self.units > self.limit_units


class Budget:
    """A sub-limit carved out of a WorkClock (e.g. the start-IP time cap)."""

    __slots__ = ("clock", "start", "limit_units")

    def __init__(self, clock: WorkClock, seconds: float | None):
        self.clock = clock
        self.start = clock.units
        self.limit_units = None if seconds is None else int(seconds * UNITS_PER_SECOND)

    def elapsed_seconds(self) -> float:
        return (self.clock.units - self.start) / UNITS_PER_SECOND

    def exceeded(self) -> bool:
        if self.clock.exceeded():
            return True
        return (
            self.limit_units is not None
            and self.clock.units - self.start > self.limit_units
        )
