"""Signed graphs: switching, balance, circle signs, switching equivalence,
and the six-way classifier for signatures of the Petersen graph.

Signs are stored as a tuple of +1/-1 over the canonical edge order, with an
equivalent bitmask view (bit set = negative edge) used heavily by the census.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property, lru_cache

from .graphs import Cycle, Graph, cut, enumerate_cycles, petersen


@dataclass(frozen=True)
class SignedGraph:
    graph: Graph
    signs: tuple[int, ...]

    def __post_init__(self):
        if len(self.signs) != len(self.graph.edges):
            raise ValueError("sign vector length mismatch")
        if any(s not in (1, -1) for s in self.signs):
            raise ValueError("signs must be +1 or -1")

    @classmethod
    def from_mask(cls, g: Graph, mask: int) -> "SignedGraph":
        m = len(g.edges)
        if not 0 <= mask < (1 << m):
            raise ValueError(f"mask {mask:#x} out of range for {m} edges")
        return cls(g, tuple(-1 if mask >> i & 1 else 1 for i in range(m)))

    @classmethod
    def all_positive(cls, g: Graph) -> "SignedGraph":
        return cls(g, (1,) * len(g.edges))

    @property
    def mask(self) -> int:
        m = 0
        for i, s in enumerate(self.signs):
            if s < 0:
                m |= 1 << i
        return m

    @cached_property
    def negative_edges(self) -> frozenset:
        return frozenset(e for e, s in zip(self.graph.edges, self.signs) if s < 0)

    @cached_property
    def positive_edges(self) -> frozenset:
        return frozenset(e for e, s in zip(self.graph.edges, self.signs) if s > 0)

    def sign(self, u: int, v: int) -> int:
        return self.signs[self.graph.index_of(u, v)]


@dataclass(frozen=True)
class SwitchingFunction:
    """A +1/-1 vertex labeling, compared modulo global sign flip per
    connected component."""

    values: tuple[int, ...]

    def __post_init__(self):
        if any(v not in (1, -1) for v in self.values):
            raise ValueError("switching values must be +1 or -1")

    @classmethod
    def from_set(cls, n: int, x) -> "SwitchingFunction":
        xs = set(x)
        return cls(tuple(-1 if v in xs else 1 for v in range(n)))

    @classmethod
    def identity(cls, n: int) -> "SwitchingFunction":
        return cls((1,) * n)

    @property
    def negative_set(self) -> frozenset:
        return frozenset(v for v, s in enumerate(self.values) if s < 0)

    def canonical_form(self, g: Graph) -> "SwitchingFunction":
        """Flip each connected component so its least vertex carries +1."""
        vals = list(self.values)
        seen = [False] * g.vertex_count
        for root in range(g.vertex_count):
            if seen[root]:
                continue
            comp = [root]
            seen[root] = True
            i = 0
            while i < len(comp):
                for w in g.adjacency[comp[i]]:
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                i += 1
            if vals[root] < 0:
                for v in comp:
                    vals[v] = -vals[v]
        return SwitchingFunction(tuple(vals))


def switch(s: SignedGraph, z: SwitchingFunction) -> SignedGraph:
    if len(z.values) != s.graph.vertex_count:
        raise ValueError("switching function size mismatch")
    signs = tuple(sig * z.values[u] * z.values[v]
                  for (u, v), sig in zip(s.graph.edges, s.signs))
    return SignedGraph(s.graph, signs)


def negate(s: SignedGraph) -> SignedGraph:
    return SignedGraph(s.graph, tuple(-x for x in s.signs))


def sign_of_circle(s: SignedGraph, c: Cycle) -> int:
    prod = 1
    for i in c.edge_indices:
        prod *= s.signs[i]
    return prod


@dataclass(frozen=True)
class BalanceResult:
    balanced: bool
    bipartition: tuple[frozenset, frozenset] | None
    negative_cycle: Cycle | None

    def __bool__(self):
        return self.balanced


def is_balanced(s: SignedGraph) -> BalanceResult:
    """Sign-aware BFS 2-labeling.  Balanced signatures get the bipartition
    with all positive edges inside a side; unbalanced ones get a negative
    cycle built from the BFS tree."""
    g = s.graph
    n = g.vertex_count
    label = [0] * n  # 0 unknown, else +1/-1
    parent = [-1] * n
    for root in range(n):
        if label[root]:
            continue
        label[root] = 1
        queue = [root]
        i = 0
        while i < len(queue):
            u = queue[i]
            i += 1
            for w in g.adjacency[u]:
                want = label[u] * s.sign(u, w)
                if label[w] == 0:
                    label[w] = want
                    parent[w] = u
                    queue.append(w)
                elif label[w] != want:
                    return BalanceResult(False, None,
                                         _tree_cycle(g, parent, u, w))
    pos = frozenset(v for v in range(n) if label[v] > 0)
    neg = frozenset(v for v in range(n) if label[v] < 0)
    return BalanceResult(True, (pos, neg), None)


def _tree_cycle(g: Graph, parent, u: int, w: int) -> Cycle:
    """Cycle through edge uw plus the tree paths back to their meeting point."""
    pu, pw = [u], [w]
    seen = {u: 0}
    x = u
    while parent[x] >= 0:
        x = parent[x]
        seen[x] = len(pu)
        pu.append(x)
    x = w
    while x not in seen:
        x = parent[x]
        pw.append(x)
    meet = pw[-1]
    verts = pu[:seen[meet]] + list(reversed(pw))
    return Cycle.from_vertices(g, verts)


def switching_equivalence(s1: SignedGraph, s2: SignedGraph):
    """A switching function carrying s1 to s2, or None.

    Spanning-tree method: fix each component root at +1, propagate the
    required value along tree edges from the sign ratio, then verify every
    remaining edge.
    """
    if s1.graph != s2.graph:
        raise ValueError("underlying graphs differ")
    g = s1.graph
    n = g.vertex_count
    vals = [0] * n
    for root in range(n):
        if vals[root]:
            continue
        vals[root] = 1
        queue = [root]
        i = 0
        while i < len(queue):
            u = queue[i]
            i += 1
            for w in g.adjacency[u]:
                ratio = s1.sign(u, w) * s2.sign(u, w)
                if vals[w] == 0:
                    vals[w] = vals[u] * ratio
                    queue.append(w)
    z = SwitchingFunction(tuple(vals))
    return z if switch(s1, z).signs == s2.signs else None


def negative_circle_counts(s: SignedGraph, lengths) -> dict[int, int]:
    lengths = set(lengths)
    counts = {k: 0 for k in lengths}
    for c in enumerate_cycles(s.graph, max(lengths)):
        if c.length in lengths and sign_of_circle(s, c) < 0:
            counts[c.length] += 1
    return counts


# ---------------------------------------------------------------------------
# Petersen-specific machinery
# ---------------------------------------------------------------------------

class SixType(enum.Enum):
    """The six switching-isomorphism classes of Petersen signatures, in
    fixed column order."""

    PLUS_P = "+P"
    P1 = "P1"
    P22 = "P2,2"
    P23 = "P2,3"
    P32 = "P3,2"
    P33 = "P3,3"


SIX_ORDER = (SixType.PLUS_P, SixType.P1, SixType.P22,
             SixType.P23, SixType.P32, SixType.P33)

# Fingerprint (frustration index, negative pentagon count) per class.
SIX_FINGERPRINT = {
    (0, 0): SixType.PLUS_P,
    (1, 4): SixType.P1,
    (2, 6): SixType.P22,
    (2, 8): SixType.P23,
    (3, 6): SixType.P32,
    (3, 12): SixType.P33,
}


@lru_cache(maxsize=1)
def petersen_cut_masks() -> tuple[int, ...]:
    """Edge bitmask of the cut of every vertex subset containing neither
    side twice: all 512 cuts, indexed by subsets of vertices 1..9 (vertex 0
    pinned positive).  Entry 0 is the empty cut."""
    g, _ = petersen()
    vert_cut = []
    for v in range(10):
        m = 0
        for i in cut(g, {v}):
            m |= 1 << i
        vert_cut.append(m)
    out = []
    for sub in range(512):
        m = 0
        for b in range(9):
            if sub >> b & 1:
                m ^= vert_cut[b + 1]
        out.append(m)
    return tuple(out)


@lru_cache(maxsize=1)
def petersen_pentagon_masks() -> tuple[int, ...]:
    g, _ = petersen()
    return tuple(_edge_mask(c) for c in enumerate_cycles(g, 5)
                 if c.length == 5)


@lru_cache(maxsize=1)
def petersen_hexagon_masks() -> tuple[int, ...]:
    g, _ = petersen()
    return tuple(_edge_mask(c) for c in enumerate_cycles(g, 6)
                 if c.length == 6)


def _edge_mask(c: Cycle) -> int:
    m = 0
    for i in c.edge_indices:
        m |= 1 << i
    return m


def petersen_frustration_of_mask(mask: int) -> int:
    """Frustration index of a Petersen signature given as a 15-bit mask:
    minimum negative count over all 512 switchings."""
    return min((mask ^ c).bit_count() for c in petersen_cut_masks())


def classify_six(s: SignedGraph) -> SixType:
    g, _ = petersen()
    if s.graph != g:
        raise ValueError("classifier requires the canonical Petersen graph")
    return classify_six_mask(s.mask)


def classify_six_mask(mask: int) -> SixType:
    l = petersen_frustration_of_mask(mask)
    c5 = sum(1 for p in petersen_pentagon_masks()
             if (mask & p).bit_count() & 1)
    return SIX_FINGERPRINT[(l, c5)]


def minimal_representative(s: SignedGraph) -> tuple[SignedGraph, SwitchingFunction]:
    """Among the 512 switchings, one with fewest negative edges; ties break
    to the least sign bitmask."""
    g, _ = petersen()
    if s.graph != g:
        raise ValueError("requires the canonical Petersen graph")
    mask = s.mask
    best = None
    best_sub = 0
    for sub, c in enumerate(petersen_cut_masks()):
        m = mask ^ c
        key = (m.bit_count(), m)
        if best is None or key < best:
            best = key
            best_sub = sub
    x = {b + 1 for b in range(9) if best_sub >> b & 1}
    z = SwitchingFunction.from_set(10, x)
    return switch(s, z), z
