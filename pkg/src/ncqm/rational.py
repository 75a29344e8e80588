"""Exact rational scalars: parsing and canonical string form."""

import re
from fractions import Fraction

from .errors import ParseError

_RATIONAL_RE = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"`` into a normalized ``Fraction``.

    >>> parse_rational("-5/10")
    Fraction(-1, 2)
    """
    m = _RATIONAL_RE.match(text.strip()) if isinstance(text, str) else None
    if m is None:
        raise ParseError(f"not a rational: {text!r}")
    num, den = m.groups()
    den = int(den) if den is not None else 1
    if den == 0:
        raise ParseError(f"zero denominator: {text!r}")
    return Fraction(int(num), den)


def format_rational(x) -> str:
    # str(Fraction) already yields "p" or "p/q" with the sign on p
    return str(Fraction(x))
