"""Exact rational parsing and formatting.

All scalar quantities in this package are `fractions.Fraction` values;
nothing on the computation path ever touches floating point.  The wire
format for a rational is the string "p/q" or "p" (plain integers are
also accepted on input).
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import DomainError

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*([+-]?\d+)\s*)?$")


def parse_rational(value) -> Fraction:
    """Parse "p/q" or "p" (or a plain int / Fraction) into a Fraction.

    Floats and decimal strings are rejected: accepting them would hide
    representation error behind exact arithmetic.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise DomainError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        m = _RATIONAL_RE.match(value)
        if not m:
            raise DomainError(f"not a rational 'p/q' string: {value!r}")
        num = int(m.group(1))
        den = int(m.group(2)) if m.group(2) is not None else 1
        if den == 0:
            raise DomainError(f"zero denominator in rational: {value!r}")
        return Fraction(num, den)
    raise DomainError(f"not a rational: {value!r}")


def format_rational(value: Fraction) -> str:
    """Lowest-terms "p/q" (or "p" when the denominator is 1)."""
    return str(value)
