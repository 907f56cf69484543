"""Small numeric helpers used throughout the package."""

from __future__ import annotations

import math

#: Slack used when a real-valued bound is rounded to an integer count.  Exact
#: saturation points of the closed-form counts are rationals of logs; plain
#: ceil() on their float images can overshoot by one.
CEIL_GUARD = 1e-9

#: Relative tolerance for detecting that a log-ratio sits on an integer.
INT_DETECT_RTOL = 1e-9


def ceil_int(x: float, guard: float = CEIL_GUARD) -> int:
    """Ceiling of ``x`` that forgives float overshoot just above an integer."""
    return math.ceil(x - guard)


def floor_int(x: float, guard: float = CEIL_GUARD) -> int:
    """Floor of ``x`` that forgives float undershoot just below an integer."""
    return math.floor(x + guard)


def x_ln_inv(x: float) -> float:
    """x * ln(1/x), extended continuously to 0 at x = 0."""
    if x <= 0.0:
        return 0.0
    return -x * math.log(x)


def log_bracket(value: float, base: float) -> tuple[int, int]:
    """Integer bracket (floor, ceil) of log_base(value) with snapping.

    Both ``value`` and ``base`` must lie in (0, 1].  A log-ratio within
    relative tolerance of an integer is snapped to it, so both ends of the
    bracket coincide there.
    """
    if value >= 1.0:
        return (0, 0)
    x = math.log(value) / math.log(base)
    r = round(x)
    if abs(x - r) <= INT_DETECT_RTOL * max(1.0, abs(x)):
        return (int(r), int(r))
    return (math.floor(x), math.ceil(x))
