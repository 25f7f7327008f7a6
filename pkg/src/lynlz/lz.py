"""Non-overlapping Lempel-Ziv factorization ``s = p_1 ... p_z``.

Greedy left-to-right parse: each phrase is either the leftmost occurrence of
a letter, or the longest prefix of the remaining suffix that has a full
occurrence strictly inside the already parsed prefix (the occurrence ends at
or before the phrase start minus one, i.e. inside ``p_1 ... p_{i-1}``).
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass

from .text import Span, leftmost_occurrence

DEFAULT_ORACLE_LIMIT = 10_000


@dataclass(frozen=True)
class LZFactorization:
    text: bytes
    phrases: tuple[Span, ...]
    boundary_positions: tuple[int, ...]  # sorted phrase start positions

    @property
    def z(self) -> int:
        return len(self.phrases)

    def phrase_bytes(self, i: int) -> bytes:
        """Bytes of p_i (1-based i)."""
        return self.phrases[i - 1].slice(self.text)

    def phrase_texts(self) -> list[bytes]:
        return [p.slice(self.text) for p in self.phrases]

    def boundaries_in(self, window: Span) -> int:
        """Number of phrase starts inside ``window``."""
        if window.is_empty:
            return 0
        lo = bisect_left(self.boundary_positions, window.start)
        hi = bisect_left(self.boundary_positions, window.end + 1)
        return hi - lo


def _from_lengths(s: bytes, lengths: list[int]) -> LZFactorization:
    phrases = []
    pos = 1
    for length in lengths:
        phrases.append(Span(pos, pos + length - 1))
        pos += length
    return LZFactorization(
        text=s,
        phrases=tuple(phrases),
        boundary_positions=tuple(p.start for p in phrases),
    )


def lz_factorize(s: bytes) -> LZFactorization:
    """Compute the non-overlapping LZ factorization of ``s``.

    Phrase lengths are found by binary search over the (monotone) predicate
    "this prefix occurs inside the parsed part", using C-level substring
    search.
    """
    n = len(s)
    lengths: list[int] = []
    b = 0  # 0-based phrase start
    while b < n:
        if s.find(s[b : b + 1], 0, b) < 0:
            lengths.append(1)  # leftmost occurrence of a fresh letter
            b += 1
            continue
        lo, hi = 1, min(b, n - b)
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if s.find(s[b : b + mid], 0, b) >= 0:
                lo = mid
            else:
                hi = mid - 1
        lengths.append(lo)
        b += lo
    return _from_lengths(s, lengths)


def oracle_lz_naive(s: bytes, max_len: int = DEFAULT_ORACLE_LIMIT) -> LZFactorization:
    """Literal transcription of the greedy rule, one probe length at a time.

    Uses nothing but ``leftmost_occurrence`` against the already parsed
    prefix, so it stays an independent cross-check for ``lz_factorize``.
    """
    n = len(s)
    if n > max_len:
        raise ValueError(f"oracle limited to {max_len} symbols, got {n}")
    lengths: list[int] = []
    b = 0
    while b < n:
        parsed = s[:b]
        if leftmost_occurrence(parsed, s[b : b + 1]) is None:
            lengths.append(1)
            b += 1
            continue
        length = 1
        while b + length < n and leftmost_occurrence(parsed, s[b : b + length + 1]) is not None:
            length += 1
        lengths.append(length)
        b += length
    return _from_lengths(s, lengths)


def contains_boundary(lz: LZFactorization, window: Span) -> bool:
    """True iff some phrase of ``lz`` starts inside ``window``."""
    n = len(lz.text)
    if window.is_empty or window.start < 1 or window.end > n:
        raise ValueError(f"window [{window.start}..{window.end}] outside text of length {n}")
    return lz.boundaries_in(window) > 0
