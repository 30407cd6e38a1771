"""Exhaustive census of all 2^15 Petersen signatures, table construction,
and the verification harness comparing recomputed tables against the
embedded expected values.
"""

from __future__ import annotations

import csv
import io
import itertools
import json
from dataclasses import dataclass
from functools import lru_cache

from . import expected
from .clustering import cluster_number, inclusterability_index, max_inclusterability
from .coloring import chi3_difference, chromatic_numbers, count_colorations
from .frustration import alpha_k, frustration_number
from .graphs import petersen
from .groups import GroupLabel, aut_signed, identify_group, swaut
from .signed import (SIX_ORDER, SignedGraph, SixType, classify_six_mask, negate,
                     negative_circle_counts, petersen_cut_masks,
                     petersen_frustration_of_mask, petersen_pentagon_masks)


def class_name(t: SixType) -> str:
    return t.value


def standard_representative(t: SixType) -> SignedGraph:
    """The standard minimal signature of a class, from the embedded
    negative-edge lists."""
    return SignedGraph.from_mask(petersen()[0], standard_mask(t))


@lru_cache(maxsize=None)
def standard_mask(t: SixType) -> int:
    g, lab = petersen()
    mask = 0
    for a, b in expected.STANDARD_NEGATIVE_EDGES[t.value]:
        u = lab.vertex(int(a[0]), int(a[1]))
        v = lab.vertex(int(b[0]), int(b[1]))
        mask |= 1 << g.index_of(u, v)
    return mask


# ---------------------------------------------------------------------------
# Fast per-mask frustration number
# ---------------------------------------------------------------------------

@lru_cache(maxsize=1)
def _deletion_tables():
    """For every vertex set W with |W| <= 3: the kept-edge mask and the set
    of all cut masks of P minus W, restricted to kept edges. A signature
    minus W is balanced exactly when its restricted mask is such a cut."""
    g, _ = petersen()
    tables = []
    for k in range(4):
        for w in itertools.combinations(range(10), k):
            ws = set(w)
            keep = 0
            for i, (a, b) in enumerate(g.edges):
                if a not in ws and b not in ws:
                    keep |= 1 << i
            verts = [v for v in range(10) if v not in ws]
            vert_cut = {}
            for v in verts:
                m = 0
                for i, (a, b) in enumerate(g.edges):
                    if keep >> i & 1 and v in (a, b):
                        m |= 1 << i
                vert_cut[v] = m
            cuts = {0}
            for v in verts[1:]:
                cuts |= {c ^ vert_cut[v] for c in cuts}
            tables.append((k, keep, frozenset(cuts)))
    return tables


def petersen_l0_of_mask(mask: int) -> int:
    """Frustration number of a Petersen signature, by increasing deletion
    size (only sizes 0..3 occur)."""
    for k, keep, cuts in _deletion_tables():
        if mask & keep in cuts:
            return k
    raise AssertionError("frustration number above 3 on a Petersen signature")


# ---------------------------------------------------------------------------
# Census
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ClassCensus:
    six_type: SixType
    signature_count: int
    switching_class_count: int
    minimal_count: int
    representative_mask: int


@dataclass(frozen=True)
class CensusReport:
    per_class: dict[SixType, ClassCensus]
    total_signatures: int
    total_switching_classes: int


def run_census() -> CensusReport:
    """Classify every 15-bit signature by walking switching orbits: each
    orbit holds the 512 switchings of a base signature, shares its class,
    and contributes its minimum-weight members to the minimal count."""
    cuts = petersen_cut_masks()
    pentagons = petersen_pentagon_masks()
    seen = bytearray(1 << 15)
    sig = {t: 0 for t in SIX_ORDER}
    cls = {t: 0 for t in SIX_ORDER}
    mins = {t: 0 for t in SIX_ORDER}
    rep = {t: None for t in SIX_ORDER}
    for base in range(1 << 15):
        if seen[base]:
            continue
        orbit = [base ^ c for c in cuts]
        weights = [m.bit_count() for m in orbit]
        l = min(weights)
        c5 = sum(1 for p in pentagons if (base & p).bit_count() & 1)
        t = expected_fingerprint(l, c5)
        best = min(m for m, w in zip(orbit, weights) if w == l)
        for m, w in zip(orbit, weights):
            seen[m] = 1
            if w == l:
                mins[t] += 1
        sig[t] += 512
        cls[t] += 1
        if rep[t] is None or best < rep[t]:
            rep[t] = best
    per_class = {
        t: ClassCensus(t, sig[t], cls[t], mins[t], rep[t]) for t in SIX_ORDER
    }
    return CensusReport(per_class, sum(sig.values()), sum(cls.values()))


def expected_fingerprint(l: int, c5: int) -> SixType:
    from .signed import SIX_FINGERPRINT
    return SIX_FINGERPRINT[(l, c5)]


def verify_l0_equals_l_everywhere() -> bool:
    """Frustration number equals frustration index on all 32768
    signatures, both computed per mask."""
    cuts = petersen_cut_masks()
    for mask in range(1 << 15):
        l = min((mask ^ c).bit_count() for c in cuts)
        if petersen_l0_of_mask(mask) != l:
            return False
    return True


# ---------------------------------------------------------------------------
# Tables
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TableArtifact:
    table_id: str
    columns: tuple[str, ...]
    rows: tuple[tuple[str, tuple], ...]

    def to_text(self) -> str:
        width = max([len(self.table_id)] +
                    [len(label) for label, _ in self.rows])
        cols = [max(len(str(c)), *(len(_fmt(r[1][i])) for r in self.rows))
                for i, c in enumerate(self.columns)]
        out = [" ".join([self.table_id.ljust(width)] +
                        [str(c).rjust(w) for c, w in zip(self.columns, cols)])]
        for label, values in self.rows:
            out.append(" ".join([label.ljust(width)] +
                                [_fmt(v).rjust(w) for v, w in zip(values, cols)]))
        return "\n".join(out) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow([self.table_id] + list(self.columns))
        for label, values in self.rows:
            writer.writerow([label] + [_fmt(v) for v in values])
        return buf.getvalue()

    def to_json(self) -> str:
        return json.dumps({
            "table": self.table_id,
            "columns": list(self.columns),
            "rows": [{"label": label, "values": list(values)}
                     for label, values in self.rows],
        }, indent=2) + "\n"

    def render(self, fmt: str) -> str:
        if fmt == "text":
            return self.to_text()
        if fmt == "csv":
            return self.to_csv()
        if fmt == "json":
            return self.to_json()
        raise ValueError(f"unknown format {fmt!r}")


def _fmt(v) -> str:
    return "-" if v is None else str(v)


TABLE_IDS = ("T1", "T2", "T3", "T4_orders", "T5", "T8", "T9", "T10", "census")


def build_table(table_id: str) -> TableArtifact:
    builders = {
        "T1": _table_t1,
        "T2": _table_t2,
        "T3": _table_t3,
        "T4_orders": _table_t4,
        "T5": _table_t5,
        "T8": _table_t8,
        "T9": _table_t9,
        "T10": _table_t10,
        "census": _table_census,
    }
    if table_id not in builders:
        raise ValueError(f"unknown table id {table_id!r}")
    return builders[table_id]()


def _reps():
    return [standard_representative(t) for t in SIX_ORDER]


def _table_t1() -> TableArtifact:
    rows5, rows6 = [], []
    for s in _reps():
        counts = negative_circle_counts(s, {5, 6})
        rows5.append(counts[5])
        rows6.append(counts[6])
    return TableArtifact("T1", expected.CLASS_NAMES, (
        ("negative pentagons", tuple(rows5)),
        ("negative hexagons", tuple(rows6)),
    ))


def _table_t2() -> TableArtifact:
    row = tuple(petersen_frustration_of_mask(standard_mask(t)) for t in SIX_ORDER)
    return TableArtifact("T2", expected.CLASS_NAMES, (
        ("frustration index", row),
    ))


def _table_t3() -> TableArtifact:
    row = tuple(frustration_number(s)[0] for s in _reps())
    return TableArtifact("T3", expected.CLASS_NAMES, (
        ("frustration number", row),
    ))


def _table_t4() -> TableArtifact:
    auts = [aut_signed(s) for s in _reps()]
    swauts = [swaut(s) for s in _reps()]
    return TableArtifact("T4_orders", expected.CLASS_NAMES, (
        ("aut order", tuple(g.order for g in auts)),
        ("aut label", tuple(identify_group(g).value for g in auts)),
        ("swaut order", tuple(g.order for g in swauts)),
        ("swaut label", tuple(identify_group(g).value for g in swauts)),
    ))


def _table_t5() -> TableArtifact:
    copies = tuple(120 // aut_signed(s).order for s in _reps())
    classes = tuple(120 // swaut(s).order for s in _reps())
    return TableArtifact("T5", expected.CLASS_NAMES, (
        ("copies", copies),
        ("switching classes", classes),
    ))


def _table_t8() -> TableArtifact:
    pairs = [chromatic_numbers(s) for s in _reps()]
    return TableArtifact("T8", expected.CLASS_NAMES, (
        ("chromatic number", tuple(p[0] for p in pairs)),
        ("zero-free chromatic number", tuple(p[1] for p in pairs)),
    ))


def _table_t9() -> TableArtifact:
    reps = _reps()
    a0 = tuple(alpha_k(s, 0) for s in reps)
    a1 = tuple(alpha_k(s, 1) for s in reps)
    a2 = tuple(alpha_k(s, 2) for s in reps)
    c6 = tuple(negative_circle_counts(s, {6})[6] for s in reps)
    diff = tuple(chi3_difference(s) for s in reps)
    chi3 = tuple(count_colorations(s, 1, zero_free=False) for s in reps)
    return TableArtifact("T9", expected.CLASS_NAMES, (
        ("balance-after-deletion count, size 0", a0),
        ("balance-after-deletion count, size 1", a1),
        ("balance-after-deletion count, size 2", a2),
        ("negative hexagons", c6),
        ("3-color count minus all-positive", diff),
        ("3-color count", chi3),
    ))


def _table_t10() -> TableArtifact:
    signatures = []
    for t in SIX_ORDER:
        s = standard_representative(t)
        signatures.extend([s, negate(s)])
    clun = tuple(cluster_number(s) for s in signatures)
    q = tuple(inclusterability_index(s)[0] for s in signatures)
    return TableArtifact("T10", expected.T10_COLUMNS, (
        ("cluster number", clun),
        ("inclusterability index", q),
    ))


def _table_census() -> TableArtifact:
    report = run_census()
    cc = [report.per_class[t] for t in SIX_ORDER]
    return TableArtifact("census", expected.CLASS_NAMES, (
        ("signatures", tuple(c.signature_count for c in cc)),
        ("switching classes", tuple(c.switching_class_count for c in cc)),
        ("minimal signatures", tuple(c.minimal_count for c in cc)),
        ("representative mask", tuple(f"0x{c.representative_mask:04x}" for c in cc)),
    ))


# ---------------------------------------------------------------------------
# Verification
# ---------------------------------------------------------------------------

EXPECTED_ROWS = {
    "T1": {"negative pentagons": expected.NEGATIVE_PENTAGONS,
           "negative hexagons": expected.NEGATIVE_HEXAGONS},
    "T2": {"frustration index": expected.FRUSTRATION_INDEX},
    "T3": {"frustration number": expected.FRUSTRATION_NUMBER},
    "T4_orders": {"aut order": expected.AUT_ORDERS,
                  "aut label": expected.AUT_LABELS,
                  "swaut order": expected.SWAUT_ORDERS,
                  "swaut label": expected.SWAUT_LABELS},
    "T5": {"copies": expected.COPIES,
           "switching classes": expected.SWITCHING_CLASSES},
    "T8": {"chromatic number": expected.CHI,
           "zero-free chromatic number": expected.CHI_STAR},
    "T9": {"balance-after-deletion count, size 0": expected.ALPHA0,
           "balance-after-deletion count, size 1": expected.ALPHA1,
           "balance-after-deletion count, size 2": expected.ALPHA2,
           "negative hexagons": expected.NEGATIVE_HEXAGONS,
           "3-color count minus all-positive": expected.CHI3_DIFFERENCE,
           "3-color count": expected.CHI3},
    "T10": {"cluster number": expected.CLUSTER_NUMBER,
            "inclusterability index": expected.INCLUSTERABILITY},
    "census": {"signatures": expected.SIGNATURE_COUNTS,
               "switching classes": expected.SWITCHING_CLASSES,
               "minimal signatures": expected.COPIES},
}


def verify_all() -> list[str]:
    """Recompute every table and compare cell-by-cell against the embedded
    expected values; the returned list of differences is empty on a clean
    build."""
    diffs = []
    for table_id, wanted in EXPECTED_ROWS.items():
        artifact = build_table(table_id)
        got = dict(artifact.rows)
        for label, values in wanted.items():
            if label not in got:
                diffs.append(f"{table_id}: missing row {label!r}")
                continue
            for col, (have, want) in zip(artifact.columns,
                                         zip(got[label], values)):
                if have != want:
                    diffs.append(
                        f"{table_id} [{label}] {col}: got {have!r}, "
                        f"expected {want!r}")
    return diffs
