"""Byte-string primitives: lexicographic order, Lyndon test, leftmost occurrence.

All positions exposed by this package are 1-based and inclusive, so a
substring of ``s`` is addressed exactly as ``s[i..j]``.  Symbols are single
bytes ordered by their unsigned numeric value; that order is fixed for the
whole process.
"""

from __future__ import annotations

from dataclasses import dataclass

LESS = -1
EQUAL = 0
GREATER = 1


@dataclass(frozen=True)
class Span:
    """1-based inclusive interval ``[start..end]`` inside a text.

    The empty span anchored at position ``p`` is encoded as ``Span(p, p - 1)``;
    this keeps span arithmetic uniform (length 0, start = anchor).
    """

    start: int
    end: int

    def __post_init__(self) -> None:
        if self.start < 1 or self.end < self.start - 1:
            raise ValueError(f"invalid span [{self.start}..{self.end}]")

    @classmethod
    def empty(cls, anchor: int) -> "Span":
        return cls(anchor, anchor - 1)

    @property
    def length(self) -> int:
        return self.end - self.start + 1

    @property
    def is_empty(self) -> bool:
        return self.end < self.start

    def slice(self, s: bytes) -> bytes:
        """Bytes of this span within ``s``."""
        return s[self.start - 1 : self.end]

    def contains_position(self, pos: int) -> bool:
        return self.start <= pos <= self.end

    def contains(self, other: "Span") -> bool:
        """True if ``other`` lies inside this span (empty spans always fit)."""
        if other.is_empty:
            return True
        return self.start <= other.start and other.end <= self.end

    def overlaps(self, other: "Span") -> bool:
        """True if the two spans share at least one position."""
        if self.is_empty or other.is_empty:
            return False
        return self.start <= other.end and other.start <= self.end


def lex_compare(u: bytes, v: bytes) -> int:
    """Three-way lexicographic comparison of byte strings.

    Returns LESS, EQUAL or GREATER.  ``u`` precedes ``v`` when ``u`` is a
    proper prefix of ``v`` or when the first mismatching byte of ``u`` is
    smaller.
    """
    for a, b in zip(u, v):
        if a != b:
            return LESS if a < b else GREATER
    if len(u) == len(v):
        return EQUAL
    return LESS if len(u) < len(v) else GREATER


def is_lyndon(w: bytes) -> bool:
    """True if ``w`` is strictly smaller than all of its non-empty proper suffixes."""
    if not w:
        raise ValueError("empty word has no Lyndon status")
    return all(lex_compare(w[i:], w) == GREATER for i in range(1, len(w)))


def leftmost_occurrence(s: bytes, pattern: bytes) -> int | None:
    """Smallest 1-based start position of ``pattern`` in ``s``, or None."""
    if not pattern:
        raise ValueError("pattern must be non-empty")
    pos = s.find(pattern)
    return None if pos < 0 else pos + 1
