"""Rendering exact rationals for output: p/q strings and fixed-point decimals."""

from __future__ import annotations

from .arith import Rational

__all__ = ["format_exact", "format_decimal"]


def format_exact(v: Rational) -> str:
    """Always p/q, even for integers (7 -> "7/1")."""
    return f"{v.numerator}/{v.denominator}"


def format_decimal(v: Rational, digits: int = 10) -> str:
    """Fixed-point decimal with `digits` places, round-half-even, exact input."""
    if digits < 0:
        raise ValueError(f"digits must be >= 0, got {digits}")
    scaled = round(v * 10**digits)  # Fraction.__round__ is exact half-even
    if digits == 0:
        return str(scaled)
    sign = "-" if scaled < 0 else ""
    whole, frac = divmod(abs(scaled), 10**digits)
    return f"{sign}{whole}.{frac:0{digits}d}"
