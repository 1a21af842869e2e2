"""Exception types shared across the package."""

from __future__ import annotations

__all__ = ["InvariantViolation"]


class InvariantViolation(RuntimeError):
    """A proven internal property failed to hold at runtime.

    Domain errors (bad user input, out-of-range arguments) raise ValueError;
    this exception is reserved for conditions the mathematics guarantees, so
    seeing it means a bug, not a usage mistake. The command line maps it to
    exit status 3.
    """
