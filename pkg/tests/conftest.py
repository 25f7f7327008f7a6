"""Shared test constants and builders."""

from __future__ import annotations

from lynlz import CanonicalDecomposition, Cluster, Domain, Span

# 25-character worked example: five runs (abb)^2, ababbababbb, ababb, ab, a
FIGURE_STRING = b"abbabbababbababbbababbaba"

# Constructed five-run strings with known group structure (runs u, v, w, x, y
# where each of w, x, y has its product's leftmost occurrence at u's start).
GROUP_TOP_STRING = b"ababbababbb" + b"ababbababbabb" + b"ababb" + b"ab" + b"a"
GROUP_BOTTOM_STRING = (
    b"ababbababbbababbababbbb" + b"ababbababbb" + b"ababb" + b"ab" + b"a"
)


def unit_run_domain(i: int, d: int, j: int) -> Domain:
    """Domain over a factorization whose runs all have length one."""
    if j < i:
        return Domain(i=i, d=d, j=j, span=Span(j, i - 1), associated=Span(j, j + d - 1))
    return Domain(i=i, d=d, j=i, span=Span.empty(i), associated=Span(i, i + d - 1))


def sixteen_run_decomposition() -> CanonicalDecomposition:
    """The worked 16-run decomposition: clusters of sizes 3, 1, 2, 3 and three
    loose subdomains of orders 2, 3, 5 with sizes 2, 1, 0."""
    dom = unit_run_domain
    root = dom(15, 2, 1)
    sequence = (
        Cluster((dom(1, 3, 1), dom(2, 2, 1), dom(3, 1, 1))),
        dom(6, 2, 4),
        Cluster((dom(7, 1, 1),)),
        dom(9, 3, 8),
        Cluster((dom(10, 2, 1), dom(11, 1, 1))),
        dom(12, 5, 12),
        Cluster((dom(13, 4, 1), dom(14, 3, 1), root)),
    )
    return CanonicalDecomposition(root=root, sequence=sequence)
