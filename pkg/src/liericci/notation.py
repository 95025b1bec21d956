"""Parser and serializer for the compact structure-equation notation.

A string like ``"(0,0,0,12)"`` lists, slot by slot, the exterior derivative of
each basis covector: slot k is a signed sum of terms, each an optional
rational coefficient followed by an index pair, and the pair ``ij`` stands for
``e^i ^ e^j`` (i < j).  Index pairs are written as two digits for dimensions
up to 9 and bracketed, e.g. ``[3,12]``, for dimensions 10 and above.

Sign convention: ``de^k(e_i, e_j) = -e^k([e_i, e_j])``, so a term ``ij`` with
coefficient ``a`` in slot k yields the structure constant ``c[i][j][k] = -a``.
"""

from __future__ import annotations

import re

from .algebra import LieAlgebra
from .scalars import format_scalar, is_exact_scalar, rat

_TERM_DIGITS = re.compile(r"^(\d+(?:/\d+)?)?(\d\d)$")
_TERM_BRACKET = re.compile(r"^(\d+(?:/\d+)?)?\[(\d+),(\d+)\]$")


class NotationError(ValueError):
    """Syntax or index error in structure-equation notation."""

    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__("%s (at position %d)" % (message, position))


def _split_slots(text: str) -> list[tuple[str, int]]:
    """Top-level comma split of the parenthesized body, with start offsets."""
    if not text:
        raise NotationError("empty input", 0)
    if text[0] != "(":
        raise NotationError("expected '('", 0)
    if text[-1] != ")" or len(text) < 2:
        raise NotationError("expected ')'", len(text) - 1)
    body = text[1:-1]
    slots: list[tuple[str, int]] = []
    start = 0
    depth = 0
    for i, ch in enumerate(body):
        if ch == "[":
            depth += 1
        elif ch == "]":
            if depth == 0:
                raise NotationError("unmatched ']'", i + 1)
            depth -= 1
        elif ch == "," and depth == 0:
            slots.append((body[start:i], start + 1))
            start = i + 1
        elif ch == "(" or ch == ")":
            raise NotationError("unexpected '%s'" % ch, i + 1)
    if depth != 0:
        raise NotationError("unclosed '['", len(text) - 1)
    slots.append((body[start:], start + 1))
    return slots


def _split_terms(slot: str, offset: int) -> list[tuple[int, str, int]]:
    """Break a slot into (sign, term_text, position) triples."""
    terms = []
    sign = 1
    pos = 0
    if slot and slot[0] in "+-":
        sign = -1 if slot[0] == "-" else 1
        pos = 1
    start = pos
    depth = 0
    for i in range(pos, len(slot)):
        ch = slot[i]
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        elif ch in "+-" and depth == 0:
            terms.append((sign, slot[start:i], offset + start))
            sign = -1 if ch == "-" else 1
            start = i + 1
    terms.append((sign, slot[start:], offset + start))
    return terms


def _parse_term(term: str, position: int, dim: int) -> tuple:
    if not term:
        raise NotationError("empty term", position)
    pattern = _TERM_DIGITS if dim <= 9 else _TERM_BRACKET
    m = pattern.match(term)
    if m is None:
        hint = "two-digit pair" if dim <= 9 else "bracketed pair [i,j]"
        raise NotationError(
            "cannot read term %r (expected optional coefficient then a %s)"
            % (term, hint),
            position,
        )
    coeff = rat(m.group(1)) if m.group(1) else rat(1)
    if dim <= 9:
        i, j = int(m.group(2)[0]), int(m.group(2)[1])
    else:
        i, j = int(m.group(2)), int(m.group(3))
    if not 1 <= i <= dim:
        raise NotationError("index %d out of range 1..%d" % (i, dim), position)
    if not 1 <= j <= dim:
        raise NotationError("index %d out of range 1..%d" % (j, dim), position)
    if i >= j:
        raise NotationError(
            "term indices must satisfy i < j, got %d >= %d" % (i, j), position
        )
    return coeff, i, j


def parse_notation(text: str, eps: float | None = None) -> LieAlgebra:
    """Parse structure-equation notation into a validated LieAlgebra."""
    slots = _split_slots(text)
    n = len(slots)
    c = [[[rat(0) for _ in range(n)] for _ in range(n)] for _ in range(n)]
    for k, (slot, offset) in enumerate(slots):
        if slot == "0":
            continue
        if not slot:
            raise NotationError("empty slot", offset)
        for sign, term, position in _split_terms(slot, offset):
            coeff, i, j = _parse_term(term, position, n)
            value = sign * coeff
            c[i - 1][j - 1][k] -= value
            c[j - 1][i - 1][k] += value
    return LieAlgebra.from_structure_constants(n, c, eps)


def serialize_notation(algebra: LieAlgebra) -> str:
    """Canonical notation: lexicographic terms, unit coefficients omitted."""
    n = algebra.dim
    slots = []
    for k in range(n):
        parts = []
        for i in range(n):
            for j in range(i + 1, n):
                a = -algebra.c[i][j][k]
                if a == 0:
                    continue
                if not is_exact_scalar(a):
                    raise TypeError(
                        "cannot serialize float structure constants to notation"
                    )
                pair = "%d%d" % (i + 1, j + 1) if n <= 9 else "[%d,%d]" % (i + 1, j + 1)
                if a == 1:
                    term = pair
                elif a == -1:
                    term = "-" + pair
                else:
                    term = format_scalar(a) + pair
                if parts and not term.startswith("-"):
                    parts.append("+" + term)
                else:
                    parts.append(term)
        slots.append("".join(parts) if parts else "0")
    return "(" + ",".join(slots) + ")"
