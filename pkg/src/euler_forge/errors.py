"""Exceptions shared across the package."""

from __future__ import annotations

__all__ = ["CacheBoundError", "StabilizationError"]


class CacheBoundError(ValueError):
    """An operation asked for an Euler-number index beyond the built table."""


class StabilizationError(RuntimeError):
    """CRT reconstruction ran out of usable primes before the lift stabilized."""
