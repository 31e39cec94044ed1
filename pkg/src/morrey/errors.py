"""Exception hierarchy shared across the package.

The CLI maps these onto exit codes: domain, format and size errors are
usage problems (exit 2), resource errors are capacity problems (exit 3).
"""

from __future__ import annotations


class MorreyError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(MorreyError, ValueError):
    """Invalid argument: dimension mismatch, exponents out of range, zero
    sequence where a nonzero one is required, and similar."""


class FormatError(MorreyError, ValueError):
    """Malformed sequence file; the message carries the offending line number."""


class SizeError(MorreyError, OverflowError):
    """An exact integer quantity left the supported signed 64-bit range."""


class ResourceError(MorreyError, RuntimeError):
    """A computation would exceed a configured memory budget."""


class VerificationError(MorreyError, AssertionError):
    """A theorem check failed; the message names the offending quantity."""
