"""Domain structures over a Lyndon factorization, checked against an LZ parse.

For a run F_i and an order d, the d-domain of F_i is the block of runs
F_j .. F_{i-1} starting at the run that carries the leftmost occurrence of
F_i .. F_{i+d-1}; it is empty when that leftmost occurrence is the trivial
one.  On top of domains sit tandem domains (two domains sharing an extended
span), p-groups (chains of such pairs), and the canonical subdomain
decomposition whose boundary budget bounds from below the number of LZ
phrase starts inside an extended domain.  ``verify_lemmas`` re-checks every
one of those guarantees on a concrete input string.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import IntegrityError
from .lyndon import LyndonFactorization, lyndon_factorize
from .lz import LZFactorization, lz_factorize
from .text import Span


def _ceil_half(x: int) -> int:
    return (x + 1) // 2


@dataclass(frozen=True)
class Domain:
    """The order-d domain of run F_i, anchored at run F_j (j == i when empty).

    ``span`` covers F_j .. F_{i-1} (empty marker anchored at F_i's start when
    j == i); ``associated`` is the leftmost occurrence of F_i .. F_{i+d-1},
    the window guaranteed to contain an LZ phrase boundary.
    """

    i: int
    d: int
    j: int
    span: Span
    associated: Span

    @property
    def size(self) -> int:
        return self.i - self.j

    @property
    def is_empty(self) -> bool:
        return self.j == self.i


def extended_domain(dom: Domain) -> Span:
    """Span of the domain followed by its own runs F_i .. F_{i+d-1}."""
    return Span(dom.span.start, dom.span.end + dom.associated.length)


@dataclass(frozen=True)
class TandemDomain:
    """Pair dom_{d+1}(F_i), dom_d(F_{i+1}) whose extended spans coincide.

    Writing F_i = F_{i+1} .. F_{i+d} x, the leftmost occurrence of
    F_i .. F_{i+d} factors as F_{i+1}..F_{i+d} x F_{i+1}..F_{i+d};
    ``associated`` is the suffix occurrence of x F_{i+1}..F_{i+d} there.
    """

    i: int
    d: int
    inner: Domain  # order d+1 domain of F_i
    outer: Domain  # order d domain of F_{i+1}
    associated: Span


@dataclass(frozen=True)
class PGroup:
    """p consecutive domains of stepwise decreasing order with one shared extended span."""

    i: int
    p: int
    d: int  # order of the last member
    members: tuple[Domain, ...]  # ascending run index, descending order
    associated: Span


@dataclass(frozen=True)
class Cluster:
    """Maximal block of non-loose domains found by the canonical scan.

    A cluster of size >= 2 is a p-group; a size-1 cluster is a lone domain.
    """

    members: tuple[Domain, ...]  # ascending run index

    @property
    def size(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class CanonicalDecomposition:
    """Left-to-right sequence of clusters and loose subdomains of a root domain."""

    root: Domain
    sequence: tuple[Cluster | Domain, ...]  # bare Domain entries are loose

    @property
    def clusters(self) -> tuple[Cluster, ...]:
        return tuple(item for item in self.sequence if isinstance(item, Cluster))

    @property
    def loose(self) -> tuple[Domain, ...]:
        return tuple(item for item in self.sequence if isinstance(item, Domain))

    @property
    def t(self) -> int:
        return len(self.loose)


@dataclass(frozen=True)
class BoundaryBudget:
    """Lower-bound accounting for phrase starts inside an extended domain.

    ``S`` counts boundaries contributed by clusters (size - 1 each),
    ``loose_total`` the ones guaranteed inside loose extended domains, and
    ``total = 1 + loose_total + S`` must reach ``lower_bound = ceil(k/2) + 1``.
    """

    k: int
    ell: int  # size of the leftmost cluster
    d: int
    loose_orders: tuple[int, ...]
    loose_sizes: tuple[int, ...]
    t: int
    S: int
    loose_total: int
    total: int
    lower_bound: int


def _run_starts(lf: LyndonFactorization) -> dict[int, int]:
    return {span.start: idx + 1 for idx, span in enumerate(lf.runs)}


def _compute(lf: LyndonFactorization, i: int, d: int, starts: dict[int, int]) -> Domain:
    m = lf.m
    if i < 1 or d < 1 or i + d - 1 > m:
        raise ValueError(f"order exceeds factorization: i={i}, d={d}, m={m}")
    runs = lf.runs
    a_start = runs[i - 1].start
    a_end = runs[i + d - 2].end
    alpha = lf.text[a_start - 1 : a_end]
    q = lf.text.find(alpha) + 1
    if q == a_start:
        return Domain(i=i, d=d, j=i, span=Span.empty(a_start), associated=Span(a_start, a_end))
    j = starts.get(q)
    if j is None or j >= i:
        raise IntegrityError(
            f"leftmost occurrence of runs {i}..{i + d - 1} (position {q}) is not a run start"
        )
    return Domain(
        i=i,
        d=d,
        j=j,
        span=Span(runs[j - 1].start, a_start - 1),
        associated=Span(q, q + (a_end - a_start)),
    )


def compute_domain(lf: LyndonFactorization, i: int, d: int) -> Domain:
    """Order-d domain of run F_i (1-based i); raises ValueError when i+d-1 > m."""
    return _compute(lf, i, d, _run_starts(lf))


def _domain_table(lf: LyndonFactorization) -> dict[tuple[int, int], Domain]:
    starts = _run_starts(lf)
    table: dict[tuple[int, int], Domain] = {}
    for i in range(1, lf.m + 1):
        for d in range(1, lf.m - i + 2):
            table[(i, d)] = _compute(lf, i, d, starts)
    return table


def all_domains(lf: LyndonFactorization) -> list[Domain]:
    """Every valid (i, d) domain, ascending i then d."""
    return list(_domain_table(lf).values())


def _tandem_window(lf: LyndonFactorization, inner: Domain) -> Span:
    """Associated window of the tandem whose higher-order half is ``inner``."""
    fi_len = lf.runs[inner.i - 1].length
    q = inner.associated.start
    total = inner.associated.length
    return Span(q + total - fi_len, q + total - 1)


def _make_tandem(lf: LyndonFactorization, inner: Domain, outer: Domain) -> TandemDomain:
    return TandemDomain(
        i=inner.i,
        d=outer.d,
        inner=inner,
        outer=outer,
        associated=_tandem_window(lf, inner),
    )


def find_tandem_domains(
    lf: LyndonFactorization, *, _table: dict[tuple[int, int], Domain] | None = None
) -> list[TandemDomain]:
    """All tandem pairs dom_{d+1}(F_i), dom_d(F_{i+1}), ascending i then d."""
    table = _table if _table is not None else _domain_table(lf)
    out: list[TandemDomain] = []
    m = lf.m
    for i in range(1, m):
        for d in range(1, m - i + 1):
            inner = table[(i, d + 1)]
            outer = table[(i + 1, d)]
            if inner.j == outer.j:
                out.append(_make_tandem(lf, inner, outer))
    return out


def _make_group(lf: LyndonFactorization, members: tuple[Domain, ...]) -> PGroup:
    i = members[0].i
    p = len(members)
    d = members[-1].d
    runs = lf.runs
    first = members[0].associated
    prefix_len = runs[i + p + d - 3].end - runs[i + p - 2].start + 1
    return PGroup(
        i=i,
        p=p,
        d=d,
        members=members,
        associated=Span(first.start + prefix_len, first.start + first.length - 1),
    )


def find_p_groups(
    lf: LyndonFactorization, *, _table: dict[tuple[int, int], Domain] | None = None
) -> list[PGroup]:
    """Maximal p-groups (p >= 2): maximal chains of tandem pairs.

    Consecutive tandem conditions live on diagonals i + d = const; a maximal
    run of satisfied conditions along a diagonal yields one group that cannot
    be extended on either side.
    """
    table = _table if _table is not None else _domain_table(lf)
    m = lf.m
    groups: list[PGroup] = []
    for c in range(2, m + 1):
        run_start: int | None = None
        for i in range(1, c + 1):  # i == c acts as a sentinel that flushes the chain
            linked = False
            if i < c:
                inner = table[(i, c - i + 1)]
                outer = table[(i + 1, c - i)]
                linked = inner.j == outer.j
            if linked and run_start is None:
                run_start = i
            elif not linked and run_start is not None:
                members = tuple(table[(t, c - t + 1)] for t in range(run_start, i + 1))
                groups.append(_make_group(lf, members))
                run_start = None
    groups.sort(key=lambda g: (g.i, g.d))
    return groups


def canonical_decomposition(
    lf: LyndonFactorization,
    dom: Domain,
    *,
    _table: dict[tuple[int, int], Domain] | None = None,
) -> CanonicalDecomposition:
    """Greedy right-to-left split of a non-empty domain into clusters and loose subdomains.

    Scanning F_{i-1} down to F_j with a rising order counter: a domain
    anchored at F_j joins the current cluster; any other anchor closes the
    cluster, records the domain as loose, and restarts the scan (order 0)
    just left of the loose domain's span.
    """
    if dom.size == 0:
        raise ValueError("decomposition undefined for empty domain")

    if _table is None:
        starts = _run_starts(lf)

        def dom_at(t: int, order: int) -> Domain:
            return _compute(lf, t, order, starts)

    else:

        def dom_at(t: int, order: int) -> Domain:
            return _table[(t, order)]

    j = dom.j
    discovered: list[Cluster | Domain] = []  # right-to-left discovery order
    current: list[Domain] = [dom]
    delta = dom.d
    t = dom.i - 1
    while t >= j:
        sub = dom_at(t, delta + 1)
        if sub.j < j:
            raise IntegrityError(
                f"scan of dom(i={dom.i}, d={dom.d}) escaped its anchor: "
                f"dom(i={t}, d={delta + 1}) anchors at {sub.j} < {j}"
            )
        if sub.j == j:
            current.append(sub)
            delta += 1
            t -= 1
        else:
            if current:
                discovered.append(Cluster(tuple(reversed(current))))
                current = []
            discovered.append(sub)
            delta = 0
            t = sub.j - 1
    if not current:
        raise IntegrityError("canonical scan ended without a leftmost cluster")
    discovered.append(Cluster(tuple(reversed(current))))
    return CanonicalDecomposition(root=dom, sequence=tuple(reversed(discovered)))


def boundary_budget(cd: CanonicalDecomposition) -> BoundaryBudget:
    """Boundary accounting of a decomposition; re-derives and checks its identities.

    With t >= 1 loose subdomains the cluster sizes are pinned by the loose
    orders, giving two exact identities (sizes and cluster boundaries); any
    mismatch means the decomposition was built incorrectly.
    """
    root = cd.root
    k, d = root.size, root.d
    first = cd.sequence[0]
    if not isinstance(first, Cluster):
        raise IntegrityError("budget inconsistency: leftmost item is not a cluster")
    ell = first.size
    loose = cd.loose
    loose_orders = tuple(sub.d for sub in loose)
    loose_sizes = tuple(sub.size for sub in loose)
    t = len(loose)
    s_clusters = sum(c.size - 1 for c in cd.clusters)
    loose_total = sum(_ceil_half(kh) + 1 for kh in loose_sizes)
    total = 1 + loose_total + s_clusters
    lower = _ceil_half(k) + 1
    if t >= 1:
        if sum(loose_sizes) != k - ell - sum(loose_orders) + d:
            raise IntegrityError("budget inconsistency: loose sizes do not balance")
        expected_s = ell - 1 + sum(loose_orders) - t - d - sum(
            1 for dh in loose_orders[:-1] if dh > 1
        )
        if s_clusters != expected_s:
            raise IntegrityError("budget inconsistency: cluster boundary count")
    if total < lower:
        raise IntegrityError("budget inconsistency: total below guaranteed bound")
    return BoundaryBudget(
        k=k,
        ell=ell,
        d=d,
        loose_orders=loose_orders,
        loose_sizes=loose_sizes,
        t=t,
        S=s_clusters,
        loose_total=loose_total,
        total=total,
        lower_bound=lower,
    )


def _dom1_partition(
    lf: LyndonFactorization, table: dict[tuple[int, int], Domain]
) -> list[Domain]:
    """Right-to-left tiling of the text by order-1 extended domains."""
    parts: list[Domain] = []
    i = lf.m
    while i >= 1:
        dom = table[(i, 1)]
        parts.append(dom)
        i = dom.j - 1
    parts.reverse()
    return parts


@dataclass
class LemmaCheck:
    """One verified statement: how many instances were tested, how many failed."""

    name: str
    instances: int = 0
    failures: int = 0
    counterexample: str | None = None

    def record(self, ok: bool, *witness: object) -> None:
        self.instances += 1
        if not ok:
            self.failures += 1
            if self.counterexample is None:
                self.counterexample = " ".join(str(w) for w in witness)

    @property
    def passed(self) -> bool:
        return self.failures == 0


CHECK_NAMES = (
    "factor-order-dominates-runs",
    "window-at-anchor-prefix",
    "runs-between-share-prefix",
    "higher-order-suffix",
    "nested-domain-containment",
    "domain-window-boundary",
    "tandem-window-boundary",
    "tandem-window-inside-extdom",
    "disjoint-tandem-no-overlap",
    "group-shared-extdom",
    "group-window-concatenation",
    "group-window-boundaries",
    "disjoint-group-no-overlap",
    "tandem-inside-domain-no-overlap",
    "domain-laminarity",
    "decomposition-tiling",
    "budget-identities",
    "extdom-boundary-count",
    "partition-phrase-bound",
    "size-bound",
)


@dataclass(frozen=True)
class LemmaReport:
    """Outcome of re-checking every structural guarantee on one input string."""

    text: bytes
    m: int
    z: int
    checks: tuple[LemmaCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def check(self, name: str) -> LemmaCheck:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)


def verify_lemmas(s: bytes) -> LemmaReport:
    """Run the whole battery of structural checks for ``s``.

    Every check is a proven consequence of the two factorizations'
    definitions, so a failure indicates a defect in this library, never a
    property of the input.
    """
    lf = lyndon_factorize(s)
    lz = lz_factorize(s)
    checks = {name: LemmaCheck(name) for name in CHECK_NAMES}
    report = LemmaReport(text=s, m=lf.m, z=lz.z, checks=tuple(checks.values()))
    m = lf.m
    if m == 0:
        return report
    runs = lf.runs
    run_bytes = [span.slice(s) for span in runs]
    factor_bytes = [lf.factor_bytes(i) for i in range(1, m + 1)]

    c = checks["factor-order-dominates-runs"]
    for i in range(2, m + 1):
        target = run_bytes[i - 1]
        for jj in range(1, i):
            c.record(factor_bytes[jj - 1] > target, f"j={jj}", f"i={i}")

    try:
        table = _domain_table(lf)
    except IntegrityError as exc:
        checks["window-at-anchor-prefix"].record(False, str(exc))
        return report
    domains = list(table.values())
    nonempty = [dom for dom in domains if not dom.is_empty]

    c = checks["window-at-anchor-prefix"]
    for dom in nonempty:
        ok = (
            dom.associated.start == runs[dom.j - 1].start
            and dom.associated.length <= len(factor_bytes[dom.j - 1])
        )
        c.record(ok, f"i={dom.i}", f"d={dom.d}")

    c = checks["runs-between-share-prefix"]
    for dom in nonempty:
        if dom.j + 1 >= dom.i:
            continue
        alpha = Span(runs[dom.i - 1].start, runs[dom.i + dom.d - 2].end).slice(s)
        for t in range(dom.j + 1, dom.i):
            c.record(factor_bytes[t - 1].startswith(alpha), f"i={dom.i}", f"d={dom.d}", f"t={t}")

    c = checks["higher-order-suffix"]
    for i in range(1, m + 1):
        prev = table[(i, 1)].j
        for d in range(2, m - i + 2):
            cur = table[(i, d)].j
            c.record(cur >= prev, f"i={i}", f"d={d}")
            prev = cur

    c = checks["nested-domain-containment"]
    for dom in nonempty:
        for k in range(dom.j, dom.i):
            for dprime in range(1, m - k + 2):
                sub = table[(k, dprime)]
                c.record(dom.span.contains(sub.span), f"i={dom.i}", f"d={dom.d}", f"k={k}", f"d'={dprime}")

    c = checks["domain-window-boundary"]
    for dom in domains:
        c.record(lz.boundaries_in(dom.associated) >= 1, f"i={dom.i}", f"d={dom.d}")

    tandems = find_tandem_domains(lf, _table=table)
    c = checks["tandem-window-boundary"]
    for td in tandems:
        c.record(lz.boundaries_in(td.associated) >= 1, f"i={td.i}", f"d={td.d}")

    c = checks["tandem-window-inside-extdom"]
    for td in tandems:
        c.record(extended_domain(td.inner).contains(td.associated), f"i={td.i}", f"d={td.d}")

    c = checks["disjoint-tandem-no-overlap"]
    for a in range(len(tandems)):
        ta = tandems[a]
        for b in range(a + 1, len(tandems)):
            tb = tandems[b]
            if abs(tb.i - ta.i) <= 1:
                continue  # sharing a run: not disjoint
            c.record(
                not ta.associated.overlaps(tb.associated),
                f"({ta.i},{ta.d})",
                f"({tb.i},{tb.d})",
            )

    groups = find_p_groups(lf, _table=table)
    c = checks["group-shared-extdom"]
    for g in groups:
        shared = extended_domain(g.members[0])
        for member in g.members[1:]:
            c.record(extended_domain(member) == shared, f"i={g.i}", f"p={g.p}", f"d={g.d}")

    c = checks["group-window-concatenation"]
    for g in groups:
        cursor = g.associated.start
        ok = True
        for idx in range(g.p - 2, -1, -1):  # reverse order of member tandems
            window = _tandem_window(lf, g.members[idx])
            if window.start != cursor:
                ok = False
                break
            cursor = window.end + 1
        ok = ok and cursor == g.associated.end + 1
        c.record(ok, f"i={g.i}", f"p={g.p}", f"d={g.d}")

    c = checks["group-window-boundaries"]
    for g in groups:
        c.record(lz.boundaries_in(g.associated) >= g.p - 1, f"i={g.i}", f"p={g.p}", f"d={g.d}")

    c = checks["disjoint-group-no-overlap"]
    for a in range(len(groups)):
        ga = groups[a]
        for b in range(a + 1, len(groups)):
            gb = groups[b]
            if ga.i + ga.p - 1 >= gb.i and gb.i + gb.p - 1 >= ga.i:
                continue  # share a run: not disjoint
            c.record(
                not ga.associated.overlaps(gb.associated),
                f"({ga.i},{ga.p},{ga.d})",
                f"({gb.i},{gb.p},{gb.d})",
            )

    c = checks["tandem-inside-domain-no-overlap"]
    for dom in nonempty:
        reach = dom.i + dom.d
        for td in tandems:
            fits = td.i + td.d + 1 <= reach
            part1 = (td.i == dom.i and td.d + 1 == dom.d) or (
                dom.j <= td.i < dom.i and fits
            )
            part2 = (td.i + 1 == dom.i and td.d == dom.d) or (
                dom.j <= td.i + 1 < dom.i and fits
            )
            if part1 and part2:
                c.record(
                    not td.associated.overlaps(dom.associated),
                    f"dom=({dom.i},{dom.d})",
                    f"tandem=({td.i},{td.d})",
                )

    c = checks["domain-laminarity"]
    stack: list[Span] = []
    for span in sorted((dom.span for dom in nonempty), key=lambda sp: (sp.start, -sp.end)):
        while stack and stack[-1].end < span.start:
            stack.pop()
        c.record(not stack or stack[-1].end >= span.end, f"[{span.start}..{span.end}]")
        stack.append(span)

    c_tile = checks["decomposition-tiling"]
    c_budget = checks["budget-identities"]
    c_count = checks["extdom-boundary-count"]
    for dom in domains:
        ext = extended_domain(dom)
        need = _ceil_half(dom.size) + 1
        if dom.is_empty:
            c_count.record(lz.boundaries_in(ext) >= need, f"i={dom.i}", f"d={dom.d}")
            continue
        witness = (f"i={dom.i}", f"d={dom.d}")
        try:
            cd = canonical_decomposition(lf, dom, _table=table)
            budget = boundary_budget(cd)
        except IntegrityError as exc:
            c_budget.record(False, *witness, str(exc))
            continue
        c_budget.record(True, *witness)
        first = cd.sequence[0]
        ok = isinstance(first, Cluster) and first.members[0].i == dom.j
        if ok:
            cursor = runs[dom.j + first.size - 2].end + 1  # after F_j .. F_{j+ell-1}
            if runs[dom.j - 1].start != ext.start:
                ok = False
            for sub in cd.loose:
                sub_ext = extended_domain(sub)
                if sub_ext.start != cursor:
                    ok = False
                    break
                cursor = sub_ext.end + 1
            # With loose subdomains the last extended domain reaches the root's
            # extended end; a single all-covering cluster stops at F_i itself.
            target = ext.end if cd.loose else runs[dom.i - 1].end
            ok = ok and cursor == target + 1
        c_tile.record(ok, *witness)
        c_count.record(
            lz.boundaries_in(ext) >= max(budget.total, need), *witness
        )

    c = checks["partition-phrase-bound"]
    parts = _dom1_partition(lf, table)
    t = len(parts)
    tiles = True
    cursor = 1
    for dom in parts:
        ext = extended_domain(dom)
        if ext.start != cursor:
            tiles = False
            break
        cursor = ext.end + 1
    tiles = tiles and cursor == len(s) + 1
    c.record(tiles and lz.z >= _ceil_half(m + t), f"t={t}", f"m={m}", f"z={lz.z}")

    checks["size-bound"].record(m < 2 * lz.z, f"m={m}", f"z={lz.z}")
    return report
