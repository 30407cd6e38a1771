"""Frustration index and frustration number, minimality certificates, and
the independent-set balance counts used by the coloring difference formula.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .graphs import Graph, MAX_SEARCH_VERTICES, SearchSizeError, cut, independent_sets
from .signed import SignedGraph, SwitchingFunction, is_balanced, switch


@dataclass(frozen=True)
class FrustrationReport:
    l: int
    l0: int
    witness_edges: frozenset
    witness_vertices: frozenset


def frustration_index(s: SignedGraph) -> tuple[int, frozenset]:
    """Minimum negative-edge count over all switchings, with the negative
    edge set of a minimizing switching as balancing witness."""
    g = s.graph
    n = g.vertex_count
    if n > MAX_SEARCH_VERTICES:
        raise SearchSizeError("graph too large for switching enumeration")
    if not g.is_connected():
        raise ValueError("frustration index requires a connected graph")
    best = None
    best_neg = None
    for sub in range(1 << (n - 1)) if n else (0,):
        x = {b + 1 for b in range(n - 1) if sub >> b & 1}
        sw = switch(s, SwitchingFunction.from_set(n, x))
        neg = sw.negative_edges
        if best is None or len(neg) < best:
            best = len(neg)
            best_neg = neg
            if best == 0:
                break
    return best, best_neg


def frustration_number(s: SignedGraph) -> tuple[int, frozenset]:
    """Minimum vertex deletions leaving a balanced signature, by
    increasing-size subset search."""
    g = s.graph
    n = g.vertex_count
    if n > MAX_SEARCH_VERTICES:
        raise SearchSizeError("graph too large for vertex-subset search")
    for k in range(n + 1):
        for combo in itertools.combinations(range(n), k):
            if is_balanced(delete_vertices(s, combo)):
                return k, frozenset(combo)
    raise AssertionError("unreachable: deleting all vertices balances")


def delete_vertices(s: SignedGraph, w) -> SignedGraph:
    """Signature induced on the remaining vertices (ids compacted)."""
    ws = set(w)
    keep = [v for v in range(s.graph.vertex_count) if v not in ws]
    new_id = {v: i for i, v in enumerate(keep)}
    edges, signs = [], []
    for (u, v), sig in zip(s.graph.edges, s.signs):
        if u in ws or v in ws:
            continue
        edges.append((new_id[u], new_id[v]))
        signs.append(sig)
    order = sorted(range(len(edges)), key=lambda i: edges[i])
    g = Graph(len(keep), tuple(edges[i] for i in order))
    return SignedGraph(g, tuple(signs[i] for i in order))


def frustration_report(s: SignedGraph) -> FrustrationReport:
    l, we = frustration_index(s)
    l0, wv = frustration_number(s)
    return FrustrationReport(l=l, l0=l0, witness_edges=we, witness_vertices=wv)


def is_minimal(s: SignedGraph) -> bool:
    return len(s.negative_edges) == frustration_index(s)[0]


def cut_dominance_check(s: SignedGraph):
    """A vertex set whose cut holds more negative than positive edges, if
    any exists; such a set certifies that switching it lowers the negative
    count, so its absence certifies minimality."""
    g = s.graph
    n = g.vertex_count
    if n > MAX_SEARCH_VERTICES:
        raise SearchSizeError("graph too large for cut enumeration")
    for sub in range(1, 1 << (n - 1)):
        x = {b + 1 for b in range(n - 1) if sub >> b & 1}
        neg = pos = 0
        for i in cut(g, x):
            if s.signs[i] < 0:
                neg += 1
            else:
                pos += 1
        if neg > pos:
            return frozenset(x)
    return None


def alpha_k(s: SignedGraph, k: int) -> int:
    """Number of independent vertex sets of size k whose deletion leaves a
    balanced signature."""
    if k not in (0, 1, 2):
        raise ValueError("k must be 0, 1, or 2")
    return sum(1 for w in independent_sets(s.graph, k)
               if is_balanced(delete_vertices(s, w)))
