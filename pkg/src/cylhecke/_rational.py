"""Arbitrary-precision rational backend.

gmpy2's mpq is used when available (C-speed gcd normalization); the stdlib
Fraction is a drop-in fallback.  Everything downstream only needs +, -, *, /,
**, comparison, hash, and .numerator/.denominator.
"""

from __future__ import annotations

try:
    from gmpy2 import mpq as QQ
except ImportError:  # pragma: no cover
    from fractions import Fraction as QQ

ZERO = QQ(0)
ONE = QQ(1)


def qq(numerator, denominator=1):
    return QQ(numerator, denominator)


def qq_from_str(s: str):
    """Parse "p" or "p/q" (as emitted by str() of either backend)."""
    if "/" in s:
        num, den = s.split("/")
        return QQ(int(num), int(den))
    return QQ(int(s))
