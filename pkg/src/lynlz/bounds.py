"""Size bounds: the m < 2z check, the extended-domain partition, the
lower-bound string family with its closed-form counts, and exhaustive /
random searches for extremal ratios.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import product
from multiprocessing import Pool
from typing import Iterable, Iterator

from .domains import Domain, _dom1_partition, _domain_table, extended_domain, verify_lemmas
from .errors import IntegrityError
from .lyndon import lyndon_factorize
from .lz import lz_factorize
from .text import Span


def _ceil_half(x: int) -> int:
    return (x + 1) // 2


@dataclass(frozen=True)
class TheoremReport:
    """Verdict of the run-count vs phrase-count bound for one string."""

    m: int
    z: int
    t: int  # parts in the extended-domain partition
    passes: bool  # m < 2z
    slack: int  # 2z - m


@dataclass(frozen=True)
class ExtdomPartition:
    """Tiling of the text by order-1 extended domains, stripped right to left."""

    domains: tuple[Domain, ...]

    @property
    def spans(self) -> tuple[Span, ...]:
        return tuple(extended_domain(dom) for dom in self.domains)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(dom.size for dom in self.domains)

    @property
    def t(self) -> int:
        return len(self.domains)


def extdom_partition(s: bytes) -> ExtdomPartition:
    """Partition ``s`` as extdom_1(F_{i_1}) ... extdom_1(F_{i_t}) with i_t = m."""
    if not s:
        raise ValueError("partition undefined for empty input")
    lf = lyndon_factorize(s)
    return ExtdomPartition(domains=tuple(_dom1_partition(lf, _domain_table(lf))))


def check_theorem(s: bytes) -> TheoremReport:
    """Compute both factorization sizes and the m < 2z verdict."""
    if not s:
        raise ValueError("theorem check undefined for empty input")
    m = lyndon_factorize(s).m
    z = lz_factorize(s).z
    t = extdom_partition(s).t
    return TheoremReport(m=m, z=z, t=t, passes=m < 2 * z, slack=2 * z - m)


def generate_family(k: int) -> bytes:
    """String number k of the lower-bound family: blocks B_0 .. B_k plus a final 'a'.

    B_0 = b, and B_i = (a^i b a^1 b)(a^i b a^2 b) ... (a^i b a^{i-1} b) a^i b.
    """
    if k < 0:
        raise ValueError("family index must be >= 0")
    parts = [b"b"]
    for i in range(1, k + 1):
        head = b"a" * i + b"b"
        parts.extend(head + b"a" * j + b"b" for j in range(1, i))
        parts.append(head)
    parts.append(b"a")
    return b"".join(parts)


@dataclass(frozen=True)
class FamilyCounts:
    """Closed-form factorization sizes for family string k (valid for k >= 2)."""

    k: int
    m_k: int
    z_k: int


def expected_counts(k: int) -> FamilyCounts:
    """m_k = k^2/2 + k/2 + 2 and z_k = k^2/2 - k/2 + 4, for k >= 2."""
    if k < 2:
        raise ValueError("formula domain starts at k = 2")
    return FamilyCounts(k=k, m_k=k * (k + 1) // 2 + 2, z_k=k * (k - 1) // 2 + 4)


def expected_lz_phrases(k: int) -> list[bytes]:
    """Full expected LZ phrase list for family string k (k >= 2).

    Base parse b, a, ba, aba, baaba; step j appends j - 1 phrases:
    a^{j-1}bab a^{j-1}, then ab a^r b a^{j-1} for r = 2 .. j-2, and finally
    ab a^{j-1} b a^j ba.
    """
    if k < 2:
        raise ValueError("formula domain starts at k = 2")
    phrases = [b"b", b"a", b"ba", b"aba", b"baaba"]
    for j in range(3, k + 1):
        tail = b"a" * (j - 1)
        phrases.append(tail + b"bab" + tail)
        phrases.extend(b"ab" + b"a" * r + b"b" + tail for r in range(2, j - 1))
        phrases.append(b"ab" + tail + b"b" + b"a" * j + b"ba")
    return phrases


@dataclass(frozen=True)
class SearchRecord:
    """Factorization sizes for one enumerated string."""

    sigma: int
    n: int
    string: bytes
    m: int
    z: int

    @property
    def diff(self) -> int:
        return self.m - self.z

    @property
    def ratio(self) -> float:
        return self.m / self.z

    @property
    def slack(self) -> int:
        return 2 * self.z - self.m


@dataclass
class LengthSummary:
    """Per-length extremes of m - z and m / z."""

    n: int
    count: int = 0
    max_diff: int | None = None
    max_diff_string: bytes | None = None
    max_ratio: float | None = None
    max_ratio_string: bytes | None = None

    def absorb(self, record: SearchRecord) -> None:
        self.count += 1
        if self.max_diff is None or record.diff > self.max_diff:
            self.max_diff = record.diff
            self.max_diff_string = record.string
        if self.max_ratio is None or record.ratio > self.max_ratio:
            self.max_ratio = record.ratio
            self.max_ratio_string = record.string


@dataclass
class SearchSummary:
    sigma: int
    max_len: int
    dedupe: bool
    lemmas_checked: bool
    total: int
    per_length: list[LengthSummary]

    @property
    def max_ratio(self) -> float:
        return max(ls.max_ratio for ls in self.per_length if ls.max_ratio is not None)


def _alphabet(sigma: int) -> bytes:
    if sigma < 1 or sigma > 26:
        raise ValueError("alphabet size must be between 1 and 26")
    return bytes(ord("a") + c for c in range(sigma))


def _is_canonical(s: bytes) -> bool:
    """True when the used symbols, sorted, are already the smallest letters."""
    used = sorted(set(s))
    return used == list(range(ord("a"), ord("a") + len(used)))


def _measure(s: bytes, sigma: int, check_lemmas: bool) -> SearchRecord:
    m = lyndon_factorize(s).m
    z = lz_factorize(s).z
    if m >= 2 * z:
        raise IntegrityError(f"size bound violated: m={m}, z={z}, witness {s!r}")
    if check_lemmas:
        report = verify_lemmas(s)
        if not report.passed:
            failed = [c.name for c in report.checks if not c.passed]
            raise IntegrityError(f"lemma checks failed ({failed}) on witness {s!r}")
    return SearchRecord(sigma=sigma, n=len(s), string=s, m=m, z=z)


def iter_search(
    sigma: int,
    max_len: int,
    *,
    dedupe: bool = False,
    check_lemmas: bool = False,
    limit: int = 10_000_000,
) -> Iterator[SearchRecord]:
    """Enumerate all strings of length 1..max_len in length-then-lex order.

    Raises IntegrityError on the first string violating any verified bound.
    """
    _budget(sigma, max_len, limit)
    letters = _alphabet(sigma)
    for n in range(1, max_len + 1):
        for tup in product(letters, repeat=n):
            s = bytes(tup)
            if dedupe and not _is_canonical(s):
                continue
            yield _measure(s, sigma, check_lemmas)


def _budget(sigma: int, max_len: int, limit: int) -> int:
    total = sum(sigma**n for n in range(1, max_len + 1))
    if total > limit:
        raise ValueError(f"enumeration of {total} strings exceeds the cap of {limit}")
    return total


def _worker(task: tuple[int, int, bytes, bool, bool]) -> tuple[LengthSummary, int]:
    sigma, n, prefix, dedupe, check_lemmas = task
    letters = _alphabet(sigma)
    summary = LengthSummary(n=n)
    for tup in product(letters, repeat=n - len(prefix)):
        s = prefix + bytes(tup)
        if dedupe and not _is_canonical(s):
            continue
        summary.absorb(_measure(s, sigma, check_lemmas))
    return summary, n


def default_jobs() -> int:
    env = os.environ.get("LYNLZ_JOBS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def _merge(
    per_length: dict[int, LengthSummary],
    partials: Iterable[tuple[LengthSummary, int]],
) -> None:
    """Fold partial summaries in enumeration order (ties keep the earliest string)."""
    for partial, n in partials:
        target = per_length[n]
        target.count += partial.count
        if partial.max_diff is not None and (
            target.max_diff is None or partial.max_diff > target.max_diff
        ):
            target.max_diff = partial.max_diff
            target.max_diff_string = partial.max_diff_string
        if partial.max_ratio is not None and (
            target.max_ratio is None or partial.max_ratio > target.max_ratio
        ):
            target.max_ratio = partial.max_ratio
            target.max_ratio_string = partial.max_ratio_string


def exhaustive_search(
    sigma: int,
    max_len: int,
    *,
    dedupe: bool = False,
    check_lemmas: bool = False,
    jobs: int | None = None,
    limit: int = 10_000_000,
) -> SearchSummary:
    """Sweep every string up to max_len, verifying bounds and tracking extremes.

    Work is split by string prefix across processes; partial summaries merge
    in enumeration order, so the result is deterministic.  The first
    violation found anywhere aborts the sweep with the witness string.
    """
    _budget(sigma, max_len, limit)
    jobs = default_jobs() if jobs is None else max(1, jobs)
    letters = _alphabet(sigma)
    prefix_len = 3 if jobs > 1 else 0
    tasks = []
    for n in range(1, max_len + 1):
        p = min(prefix_len, n - 1)
        for tup in product(letters, repeat=p):
            tasks.append((sigma, n, bytes(tup), dedupe, check_lemmas))

    per_length = {n: LengthSummary(n=n) for n in range(1, max_len + 1)}
    if jobs == 1:
        _merge(per_length, map(_worker, tasks))
    else:
        with Pool(processes=jobs) as pool:  # __exit__ terminates, aborting on violations
            _merge(per_length, pool.imap(_worker, tasks, chunksize=1))
    return SearchSummary(
        sigma=sigma,
        max_len=max_len,
        dedupe=dedupe,
        lemmas_checked=check_lemmas,
        total=sum(ls.count for ls in per_length.values()),
        per_length=[per_length[n] for n in range(1, max_len + 1)],
    )
