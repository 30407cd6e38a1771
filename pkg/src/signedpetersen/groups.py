"""Permutations, switching permutations with semidirect-product arithmetic,
automorphism and switching-automorphism groups of signed graphs, coset
representative systems, and isomorphism-type identification of small groups.

Conventions. Permutations are image tuples over vertex ids and compose left
to right: compose(p, q) applies p first. A switching permutation pairs an
exact vertex subset (as a bitmask) with a permutation and acts on signatures
by switching first, permuting second. Two switching permutations that differ
by complementing the switching set act identically on a connected graph;
group elements are stored with the canonical lift (vertex 0 unswitched).
"""

from __future__ import annotations

import enum
import itertools
import random
from dataclasses import dataclass
from functools import cached_property

from .graphs import Graph, MAX_SEARCH_VERTICES, SearchSizeError, automorphism_images, cut
from .signed import SignedGraph, SwitchingFunction, switch

# ---------------------------------------------------------------------------
# Plain permutations
# ---------------------------------------------------------------------------

def compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    """Left-to-right composition: p first, then q."""
    return tuple(q[x] for x in p)


def inverse(p: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def identity_perm(n: int) -> tuple[int, ...]:
    return tuple(range(n))


# Base permutations act on {1..5}; stored as image tuples of length 5 with
# entry i-1 giving the image of i.

def parse_cycles(text: str, degree: int = 5) -> tuple[int, ...]:
    """Parse cycle notation such as ``(12)(45)`` or ``(145)`` on {1..degree}.
    An empty string or ``()`` is the identity."""
    images = list(range(1, degree + 1))
    body = text.strip()
    while body:
        if not body.startswith("("):
            raise ValueError(f"bad cycle notation {text!r}")
        end = body.index(")")
        cyc = [int(ch) for ch in body[1:end]]
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            if not 1 <= a <= degree:
                raise ValueError(f"entry {a} out of range in {text!r}")
            images[a - 1] = b
        body = body[end + 1:].strip()
    if sorted(images) != list(range(1, degree + 1)):
        raise ValueError(f"not a permutation: {text!r}")
    return tuple(images)


def format_cycles(base: tuple[int, ...]) -> str:
    """Cycle notation for a permutation of {1..len(base)}; identity is ()."""
    n = len(base)
    seen = [False] * n
    parts = []
    for start in range(1, n + 1):
        if seen[start - 1] or base[start - 1] == start:
            seen[start - 1] = True
            continue
        cyc = [start]
        seen[start - 1] = True
        x = base[start - 1]
        while x != start:
            cyc.append(x)
            seen[x - 1] = True
            x = base[x - 1]
        parts.append("(" + "".join(str(c) for c in cyc) + ")")
    return "".join(parts) or "()"


def induced_permutation(labeling, base: tuple[int, ...]) -> tuple[int, ...]:
    """Vertex permutation of the Petersen graph induced by a permutation of
    {1..5}: v_{ij} goes to v_{i^base j^base}."""
    images = []
    for i, j in labeling.pair_of:
        images.append(labeling.vertex(base[i - 1], base[j - 1]))
    return tuple(images)


# ---------------------------------------------------------------------------
# Switching permutations
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SwitchingPermutation:
    """An exact switching set (vertex bitmask) paired with a vertex
    permutation, acting switch-first."""

    switch_mask: int
    perm: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.perm)

    @property
    def switch_set(self) -> frozenset:
        return frozenset(v for v in range(self.n) if self.switch_mask >> v & 1)


def sp_identity(n: int) -> SwitchingPermutation:
    return SwitchingPermutation(0, identity_perm(n))


def sp_from_set(x, perm: tuple[int, ...]) -> SwitchingPermutation:
    m = 0
    for v in x:
        m |= 1 << v
    return SwitchingPermutation(m, perm)


def sp_multiply(a: SwitchingPermutation, b: SwitchingPermutation) -> SwitchingPermutation:
    """Semidirect product: the switching set of b is pulled back through the
    permutation of a, then combined by symmetric difference."""
    if a.n != b.n:
        raise ValueError("size mismatch")
    pulled = 0
    for w in range(a.n):
        if b.switch_mask >> a.perm[w] & 1:
            pulled |= 1 << w
    return SwitchingPermutation(a.switch_mask ^ pulled, compose(a.perm, b.perm))


def sp_inverse(a: SwitchingPermutation) -> SwitchingPermutation:
    inv = inverse(a.perm)
    pushed = 0
    for v in range(a.n):
        if a.switch_mask >> inv[v] & 1:
            pushed |= 1 << v
    return SwitchingPermutation(pushed, inv)


def sp_conjugate(a: SwitchingPermutation, alpha: tuple[int, ...]) -> SwitchingPermutation:
    """Conjugate by a plain permutation: the switching set is relabeled by
    alpha and the permutation part becomes alpha^-1 * a.perm * alpha."""
    moved = 0
    for v in range(a.n):
        if a.switch_mask >> v & 1:
            moved |= 1 << alpha[v]
    ai = inverse(alpha)
    return SwitchingPermutation(moved, compose(compose(ai, a.perm), alpha))


def sp_negate(a: SwitchingPermutation) -> SwitchingPermutation:
    """Complement the switching set; same action on a connected graph."""
    full = (1 << a.n) - 1
    return SwitchingPermutation(a.switch_mask ^ full, a.perm)


def sp_canonical(a: SwitchingPermutation) -> SwitchingPermutation:
    """Kernel-canonical lift on a connected graph: vertex 0 unswitched."""
    return sp_negate(a) if a.switch_mask & 1 else a


def sp_act(a: SwitchingPermutation, s: SignedGraph) -> SignedGraph:
    """Switch by the switching set, then relabel by the permutation."""
    z = SwitchingFunction(tuple(-1 if a.switch_mask >> v & 1 else 1
                                for v in range(a.n)))
    sw = switch(s, z)
    g = s.graph
    signs = [0] * len(g.edges)
    for (u, v), sig in zip(g.edges, sw.signs):
        signs[g.index_of(a.perm[u], a.perm[v])] = sig
    return SignedGraph(g, tuple(signs))


def edge_permutation(g: Graph, perm: tuple[int, ...]) -> tuple[int, ...]:
    """Index map sending each edge to its image edge."""
    return tuple(g.index_of(perm[u], perm[v]) for u, v in g.edges)


# ---------------------------------------------------------------------------
# Finite groups with explicit Cayley tables
# ---------------------------------------------------------------------------

class GroupAxiomError(ValueError):
    """Raised when a purported group fails closure/identity/inverse checks."""


class FiniteGroup:
    """Explicit element list with a verified multiplication table."""

    def __init__(self, elements, mul):
        self.elements = list(elements)
        if len(set(self.elements)) != len(self.elements):
            raise GroupAxiomError("repeated elements")
        self.index = {e: i for i, e in enumerate(self.elements)}
        n = len(self.elements)
        self.table = []
        for a in self.elements:
            row = []
            for b in self.elements:
                c = mul(a, b)
                if c not in self.index:
                    raise GroupAxiomError(f"not closed: {a} * {b} = {c}")
                row.append(self.index[c])
            self.table.append(row)
        self.identity = self._find_identity()
        self.inverses = self._find_inverses()
        self._check_associativity()

    def _find_identity(self) -> int:
        for i in range(len(self.elements)):
            if all(self.table[i][j] == j and self.table[j][i] == j
                   for j in range(len(self.elements))):
                return i
        raise GroupAxiomError("no identity element")

    def _find_inverses(self):
        e = self.identity
        inv = [-1] * len(self.elements)
        for i, row in enumerate(self.table):
            for j, x in enumerate(row):
                if x == e:
                    inv[i] = j
        if any(v < 0 for v in inv):
            raise GroupAxiomError("missing inverse")
        return inv

    def _check_associativity(self):
        n = len(self.elements)
        if n <= 30:
            triples = itertools.product(range(n), repeat=3)
        else:
            rng = random.Random(0)
            triples = ((rng.randrange(n), rng.randrange(n), rng.randrange(n))
                       for _ in range(2000))
        t = self.table
        for i, j, k in triples:
            if t[t[i][j]][k] != t[i][t[j][k]]:
                raise GroupAxiomError("not associative")

    @property
    def order(self) -> int:
        return len(self.elements)

    def mul_idx(self, i: int, j: int) -> int:
        return self.table[i][j]

    def element_order(self, i: int) -> int:
        k, x = 1, i
        while x != self.identity:
            x = self.table[x][i]
            k += 1
        return k

    @cached_property
    def order_histogram(self) -> dict[int, int]:
        hist = {}
        for i in range(self.order):
            o = self.element_order(i)
            hist[o] = hist.get(o, 0) + 1
        return hist

    def is_abelian(self) -> bool:
        n = self.order
        return all(self.table[i][j] == self.table[j][i]
                   for i in range(n) for j in range(i + 1, n))

    def contains(self, e) -> bool:
        return e in self.index

    def is_subgroup(self, other: "FiniteGroup") -> bool:
        """Whether this group's elements form a subgroup of other."""
        if not all(e in other.index for e in self.elements):
            return False
        for a in self.elements:
            for b in self.elements:
                c = other.elements[other.table[other.index[a]][other.index[b]]]
                if c not in self.index:
                    return False
        return True

    @classmethod
    def generate(cls, generators, mul, identity) -> "FiniteGroup":
        """Closure of the generators under mul."""
        seen = {identity}
        frontier = [identity]
        while frontier:
            nxt = []
            for a in frontier:
                for g in generators:
                    c = mul(a, g)
                    if c not in seen:
                        seen.add(c)
                        nxt.append(c)
            frontier = nxt
        return cls(sorted(seen, key=repr), mul)


class GroupLabel(enum.Enum):
    TRIVIAL = "1"
    Z2 = "Z2"
    Z4 = "Z4"
    V4 = "V4"
    S3 = "S3"
    D4 = "D4"
    Q8 = "Q8"
    S4 = "S4"
    A5 = "A5"
    S5 = "S5"
    OTHER = "other"


_CATALOG = {
    (1, True, ((1, 1),)): GroupLabel.TRIVIAL,
    (2, True, ((1, 1), (2, 1))): GroupLabel.Z2,
    (4, True, ((1, 1), (2, 1), (4, 2))): GroupLabel.Z4,
    (4, True, ((1, 1), (2, 3))): GroupLabel.V4,
    (6, False, ((1, 1), (2, 3), (3, 2))): GroupLabel.S3,
    (8, False, ((1, 1), (2, 5), (4, 2))): GroupLabel.D4,
    (8, False, ((1, 1), (2, 1), (4, 6))): GroupLabel.Q8,
    (24, False, ((1, 1), (2, 9), (3, 8), (4, 6))): GroupLabel.S4,
    (60, False, ((1, 1), (2, 15), (3, 20), (5, 24))): GroupLabel.A5,
    (120, False, ((1, 1), (2, 25), (3, 20), (4, 30), (5, 24), (6, 20))): GroupLabel.S5,
}


def identify_group(g: FiniteGroup) -> GroupLabel:
    """Label by order, abelianness, and element-order histogram; the
    combination separates every pair in the catalog."""
    if g.order > 120:
        return GroupLabel.OTHER
    key = (g.order, g.is_abelian(),
           tuple(sorted(g.order_histogram.items())))
    return _CATALOG.get(key, GroupLabel.OTHER)


# ---------------------------------------------------------------------------
# Automorphism groups of signed graphs
# ---------------------------------------------------------------------------

def _sp_group(elements) -> FiniteGroup:
    return FiniteGroup(
        sorted(elements, key=lambda e: (e.switch_mask, e.perm)),
        lambda a, b: sp_canonical(sp_multiply(a, b)),
    )


def graph_automorphisms(g: Graph) -> FiniteGroup:
    """All graph automorphisms, as switching permutations with empty
    switching part."""
    return _sp_group(SwitchingPermutation(0, p) for p in automorphism_images(g))


def aut_signed(s: SignedGraph) -> FiniteGroup:
    """Sign-preserving automorphisms: the stabilizer of the negative edge
    set inside the automorphism group of the underlying graph."""
    g = s.graph
    neg = s.negative_edges
    keep = []
    for p in automorphism_images(g):
        image = {tuple(sorted((p[u], p[v]))) for u, v in neg}
        if image == set(neg):
            keep.append(SwitchingPermutation(0, p))
    return _sp_group(keep)


def swaut(s: SignedGraph) -> FiniteGroup:
    """Switching automorphism group by exhaustive scan over canonical
    switching sets and graph automorphisms."""
    g = s.graph
    n = g.vertex_count
    if n > MAX_SEARCH_VERTICES:
        raise SearchSizeError("graph too large for switching scan")
    if not g.is_connected():
        raise ValueError("switching automorphisms need a connected graph")

    # Per-vertex cut masks let switching act on the sign mask by XOR.
    vert_cut = []
    for v in range(n):
        m = 0
        for i in cut(g, {v}):
            m |= 1 << i
        vert_cut.append(m)

    mask = 0
    for i, sig in enumerate(s.signs):
        if sig < 0:
            mask |= 1 << i

    perms = automorphism_images(g)
    edge_perms = [edge_permutation(g, p) for p in perms]
    found = []
    for sub in range(1 << (n - 1)):
        switched = mask
        x = sub << 1
        for b in range(1, n):
            if x >> b & 1:
                switched ^= vert_cut[b]
        for p, ep in zip(perms, edge_perms):
            out = 0
            m = switched
            while m:
                low = m & -m
                out |= 1 << ep[low.bit_length() - 1]
                m ^= low
            if out == mask:
                found.append(SwitchingPermutation(x, p))
    return _sp_group(found)


def orbit_counts(s: SignedGraph) -> tuple[int, int]:
    """(isomorphic copies, switching-equivalence classes in the orbit):
    index of the stabilizers Aut and SwAut inside Aut of the underlying
    graph."""
    full = len(automorphism_images(s.graph))
    return full // aut_signed(s).order, full // swaut(s).order


def lift_permutation(s: SignedGraph, xi: tuple[int, ...]):
    """The unique switching automorphism of s whose permutation part is xi,
    or None when xi is not in the projection."""
    for e in swaut(s).elements:
        if e.perm == xi:
            return e
    return None


# ---------------------------------------------------------------------------
# Coset representative systems
# ---------------------------------------------------------------------------

class CosetError(ValueError):
    pass


@dataclass
class CosetSystem:
    group: FiniteGroup
    subgroup: FiniteGroup
    representatives: list[SwitchingPermutation]  # exact switching sets
    closed_under_conjugation: bool

    def rep_for_mask(self, canonical_mask: int) -> int:
        for i, r in enumerate(self.representatives):
            if sp_canonical(r).switch_mask == canonical_mask:
                return i
        raise CosetError(f"no representative for switching class {canonical_mask:#x}")

    def decompose(self, x: SwitchingPermutation):
        """Write x (exact) as sign * representative * tau with tau in the
        subgroup; returns (sign, rep index, tau)."""
        k = self.rep_for_mask(sp_canonical(x).switch_mask)
        t = sp_multiply(sp_inverse(self.representatives[k]), x)
        full = (1 << x.n) - 1
        if t.switch_mask == 0:
            sign = 1
        elif t.switch_mask == full:
            sign, t = -1, SwitchingPermutation(0, t.perm)
        else:
            raise CosetError("element not in representative * subgroup")
        if t not in self.subgroup.index:
            raise CosetError("residual permutation outside the subgroup")
        return sign, k, t


def coset_system(group: FiniteGroup, subgroup: FiniteGroup,
                 representatives=None) -> CosetSystem:
    """Left-coset representatives of the subgroup (trivial switching parts)
    inside a switching automorphism group.

    All elements of one left coset share the same switching class, so cosets
    are keyed by canonical switching mask. Representatives may be supplied
    (exact switching sets); otherwise one is chosen per coset with switching
    set of size at most n/2, tie-broken to the least mask and permutation.
    A conjugation-closed system is preferred when the default choice is not
    closed; closure is reported, never assumed.
    """
    if not subgroup.is_subgroup(group):
        raise CosetError("not a subgroup")
    if any(e.switch_mask for e in subgroup.elements):
        raise CosetError("subgroup must have trivial switching parts")

    n = subgroup.elements[0].n
    cosets: dict[int, list[SwitchingPermutation]] = {}
    for e in group.elements:
        cosets.setdefault(e.switch_mask, []).append(e)

    if representatives is not None:
        reps = list(representatives)
        if sorted(sp_canonical(r).switch_mask for r in reps) != sorted(cosets):
            raise CosetError("supplied representatives do not cover the cosets")
        for r in reps:
            if sp_canonical(r) not in group.index:
                raise CosetError("representative not in the group")
    else:
        reps = _default_reps(cosets, n)
        if not _is_conjugation_closed(reps, subgroup):
            closed = _closed_reps(cosets, subgroup, n)
            if closed is not None:
                reps = closed
    return CosetSystem(group, subgroup, reps,
                       _is_conjugation_closed(reps, subgroup))


def _default_reps(cosets, n: int) -> list[SwitchingPermutation]:
    reps = []
    half = n / 2
    for mask in sorted(cosets):
        elem = min(cosets[mask], key=lambda e: e.perm)
        exact = elem
        comp = sp_negate(elem)
        size = bin(elem.switch_mask).count("1")
        if size > half or (size == half and comp.switch_mask < elem.switch_mask):
            exact = comp
        reps.append(exact)
    return reps


def _is_conjugation_closed(reps, subgroup: FiniteGroup) -> bool:
    rep_set = set(reps)
    return all(sp_conjugate(r, a.perm) in rep_set
               for r in reps for a in subgroup.elements)


def _closed_reps(cosets, subgroup: FiniteGroup, n: int):
    """Try to pick one exact representative per coset so the whole system is
    closed under conjugation by the subgroup; None when impossible.

    Conjugation permutes cosets, so work orbit by orbit: try every exact
    candidate for a seed coset and propagate it around the orbit, rejecting
    candidates whose propagation is inconsistent.
    """
    alphas = [a.perm for a in subgroup.elements]
    todo = set(cosets)
    chosen: dict[int, SwitchingPermutation] = {}
    while todo:
        seed = min(todo)
        candidates = []
        for e in cosets[seed]:
            candidates.extend([e, sp_negate(e)])
        ok = None
        for cand in candidates:
            assign: dict[int, SwitchingPermutation] = {}
            good = True
            for a in alphas:
                img = sp_conjugate(cand, a)
                key = sp_canonical(img).switch_mask
                if key in assign:
                    if assign[key] != img:
                        good = False
                        break
                else:
                    assign[key] = img
            if good:
                ok = assign
                break
        if ok is None:
            return None
        chosen.update(ok)
        todo -= set(ok)
    return [chosen[mask] for mask in sorted(chosen)]


def general_product(system: CosetSystem,
                    x: tuple[int, SwitchingPermutation],
                    y: tuple[int, SwitchingPermutation]):
    """Product of x = rep_i * alpha and y = rep_j * beta computed through the
    coset representatives: returns (sign, rep index, nu, alpha*beta) with nu
    in the subgroup, and cross-checks against direct multiplication.

    Requires a conjugation-closed representative system.
    """
    if not system.closed_under_conjugation:
        raise CosetError("representative system is not conjugation-closed")
    i, alpha = x
    j, beta = y
    rx, ry = system.representatives[i], system.representatives[j]
    if alpha not in system.subgroup.index or beta not in system.subgroup.index:
        raise CosetError("cofactors must lie in the subgroup")

    # Raw switching set of the product: X xor the pullback of Y through
    # (gamma_X alpha).
    ga = compose(rx.perm, alpha.perm)
    pulled = 0
    for w in range(rx.n):
        if ry.switch_mask >> ga[w] & 1:
            pulled |= 1 << w
    u_raw = rx.switch_mask ^ pulled
    k = system.rep_for_mask(sp_canonical(SwitchingPermutation(u_raw, ga)).switch_mask)
    ru = system.representatives[k]
    sign = 1 if u_raw == ru.switch_mask else -1

    # nu = gamma_U^-1 * gamma_X * (gamma_Y conjugated by alpha^-1)
    gy_conj = compose(compose(alpha.perm, ry.perm), inverse(alpha.perm))
    nu_perm = compose(compose(inverse(ru.perm), rx.perm), gy_conj)
    nu = SwitchingPermutation(0, nu_perm)
    if nu not in system.subgroup.index:
        raise CosetError("nu fell outside the subgroup")
    ab = SwitchingPermutation(0, compose(alpha.perm, beta.perm))

    direct = sp_multiply(sp_multiply(rx, alpha), sp_multiply(ry, beta))
    recombined = sp_multiply(sp_multiply(ru, nu), ab)
    if sign < 0:
        recombined = sp_negate(recombined)
    if recombined != direct:
        raise CosetError("decomposition disagrees with direct product")
    return sign, k, nu, ab
