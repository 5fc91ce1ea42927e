"""Text grammar shared by the library and the command line.

* integers and fractions: ``5``, ``-16/7``
* slopes: a fraction, ``inf`` (also ``1/0``, ``oo``, ``∞``) or ``empty`` (also ``∅``)
* continued fractions: comma-separated nonzero integers, ``2,4,-2``
  (surrounding brackets are allowed)
* slope pairs: ``(a,b)``
"""
from __future__ import annotations

import re
from fractions import Fraction

from .errors import ParseError
from .rational import EMPTY, INF, Slope

_INT = re.compile(r"[+-]?\d+")
_INF_WORDS = {"inf", "infinity", "oo", "∞", "+inf", "-inf"}
_EMPTY_WORDS = {"empty", "∅", "none"}


def _skip_ws(text, i):
    while i < len(text) and text[i].isspace():
        i += 1
    return i


def _int_at(text, i):
    m = _INT.match(text, i)
    if not m:
        raise ParseError("expected an integer", text, i)
    return int(m.group()), m.end()


def _slope_at(text, i, *, allow_special=True):
    i = _skip_ws(text, i)
    word = re.compile(r"[^\s,()\[\]]+").match(text, i)
    if word and word.group().lower() in _INF_WORDS:
        if not allow_special:
            raise ParseError("infinity not allowed here", text, i)
        return INF, word.end()
    if word and word.group().lower() in _EMPTY_WORDS:
        if not allow_special:
            raise ParseError("empty slope not allowed here", text, i)
        return EMPTY, word.end()
    num, j = _int_at(text, i)
    if j < len(text) and text[j] == "/":
        den, k = _int_at(text, j + 1)
        if den == 0:
            if num == 0:
                raise ParseError("0/0 is not a slope", text, i)
            if not allow_special:
                raise ParseError("zero denominator", text, j + 1)
            return INF, k
        return Fraction(num, den), k
    return Fraction(num), j


def _expect_end(text, i):
    i = _skip_ws(text, i)
    if i != len(text):
        raise ParseError("unexpected trailing input", text, i)


def parse_fraction(text: str) -> Fraction:
    value, i = _slope_at(text, 0, allow_special=False)
    _expect_end(text, i)
    return value


def parse_slope(text: str) -> Slope:
    value, i = _slope_at(text, 0)
    _expect_end(text, i)
    return value


def parse_terms(text: str) -> tuple[int, ...]:
    """Parse ``2,4,-2`` (or ``[2, 4, -2]``) into a tuple of nonzero ints."""
    i = _skip_ws(text, 0)
    closing = None
    if i < len(text) and text[i] in "[(":
        closing = "]" if text[i] == "[" else ")"
        i += 1
    terms = []
    while True:
        i = _skip_ws(text, i)
        start = i
        value, i = _int_at(text, i)
        if value == 0:
            raise ParseError("continued fraction terms must be nonzero", text, start)
        terms.append(value)
        i = _skip_ws(text, i)
        if i < len(text) and text[i] == ",":
            i += 1
            continue
        break
    if closing is not None:
        if i >= len(text) or text[i] != closing:
            raise ParseError(f"expected {closing!r}", text, i)
        i += 1
    _expect_end(text, i)
    return tuple(terms)


def parse_pair(text: str) -> tuple[Slope, Slope]:
    i = _skip_ws(text, 0)
    if i >= len(text) or text[i] != "(":
        raise ParseError("expected '('", text, i)
    first, i = _slope_at(text, i + 1)
    i = _skip_ws(text, i)
    if i >= len(text) or text[i] != ",":
        raise ParseError("expected ','", text, i)
    second, i = _slope_at(text, i + 1)
    i = _skip_ws(text, i)
    if i >= len(text) or text[i] != ")":
        raise ParseError("expected ')'", text, i)
    _expect_end(text, i + 1)
    return first, second
