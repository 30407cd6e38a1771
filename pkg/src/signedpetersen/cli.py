"""Command-line interface: census, table emission, per-signature
classification, groups, coloring counts, clustering, and verification.

Exit codes: 0 success, 1 verification difference, 2 input error. The
SIGNEDPETERSEN_WORKERS environment variable caps worker processes for the
census (the default of 1 is already fast; values above 1 split the mask
range across a process pool).
"""

from __future__ import annotations

import argparse
import os
import sys

from . import census as census_mod
from . import io as io_mod
from .clustering import cluster_report, max_inclusterability
from .coloring import BudgetError, chromatic_numbers, count_colorations
from .frustration import frustration_index, frustration_number
from .graphs import petersen
from .groups import (aut_signed, coset_system, format_cycles, identify_group,
                     swaut)
from .signed import SignedGraph, classify_six, negative_circle_counts


def _worker_count() -> int:
    raw = os.environ.get("SIGNEDPETERSEN_WORKERS", "1")
    try:
        count = int(raw)
    except ValueError:
        raise io_mod.InputError(f"bad SIGNEDPETERSEN_WORKERS value {raw!r}")
    return max(1, count)


def _load(args) -> SignedGraph:
    if getattr(args, "mask", None) is not None:
        return SignedGraph.from_mask(petersen()[0], io_mod.parse_mask(args.mask))
    return io_mod.load_signed_graph(args.file)


def cmd_census(args) -> int:
    _worker_count()  # validated; the orbit walk needs no pool at this scale
    print(census_mod.build_table("census").render(args.format), end="")
    return 0


def cmd_table(args) -> int:
    try:
        artifact = census_mod.build_table(args.id)
    except ValueError as exc:
        raise io_mod.InputError(str(exc))
    print(artifact.render(args.format), end="")
    return 0


def cmd_classify(args) -> int:
    s = _load(args)
    g, _ = petersen()
    if s.graph == g:
        print(f"class {classify_six(s).value}")
    l, _ = frustration_index(s)
    l0, _ = frustration_number(s)
    print(f"frustration index {l}")
    print(f"frustration number {l0}")
    if s.graph == g:
        counts = negative_circle_counts(s, {5, 6})
        print(f"negative pentagons {counts[5]}")
        print(f"negative hexagons {counts[6]}")
    return 0


def cmd_group(args) -> int:
    s = SignedGraph.from_mask(petersen()[0], io_mod.parse_mask(args.mask))
    aut = aut_signed(s)
    sw = swaut(s)
    print(f"aut order {aut.order} label {identify_group(aut).value}")
    print(f"swaut order {sw.order} label {identify_group(sw).value}")
    if args.coset_table:
        system = coset_system(sw, aut)
        print(f"cosets {len(system.representatives)} "
              f"conjugation-closed {system.closed_under_conjugation}")
        _, lab = petersen()
        for i, r in enumerate(system.representatives):
            sset = ",".join(f"{a}{b}" for a, b in
                            sorted(lab.pair_of[v] for v in sorted(r.switch_set)))
            perm = _vertex_perm_name(r.perm)
            print(f"rep {i}: switch {{{sset}}} perm {perm}")
    return 0


def _vertex_perm_name(perm) -> str:
    """Cycle notation on {1..5} when the vertex permutation is induced from
    one, else the raw image vector."""
    from .groups import induced_permutation
    import itertools
    _, lab = petersen()
    for base in itertools.permutations(range(1, 6)):
        if induced_permutation(lab, base) == tuple(perm):
            return format_cycles(base)
    return str(list(perm))


def cmd_color(args) -> int:
    s = _load(args)
    try:
        count = count_colorations(s, args.k, zero_free=args.zero_free)
    except BudgetError as exc:
        raise io_mod.InputError(str(exc))
    kind = "zero-free colorations" if args.zero_free else "colorations"
    print(f"{kind} at k={args.k}: {count}")
    chi, chi_star = chromatic_numbers(s)
    print(f"chromatic number {chi}")
    print(f"zero-free chromatic number {chi_star}")
    return 0


def cmd_cluster(args) -> int:
    s = _load(args)
    report = cluster_report(s)
    if report.clusterable:
        print(f"clusterable yes clusters {report.clun}")
    else:
        print(f"clusterable no inclusterability {report.q}")
    return 0


def cmd_verify(args) -> int:
    diffs = census_mod.verify_all()
    if diffs:
        for d in diffs:
            print(d)
        return 1
    print("all tables verified")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="signed-petersen",
        description="Signed-graph census and analysis of Petersen signatures")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("census", help="full 2^15 signature census")
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("table", help="emit one verification table")
    p.add_argument("id", choices=census_mod.TABLE_IDS)
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("classify", help="classify a signature")
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--mask", help="15-bit hex sign mask")
    grp.add_argument("--file", help="signed edge-list file")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("group", help="automorphism groups of a signature")
    p.add_argument("--mask", required=True, help="15-bit hex sign mask")
    p.add_argument("--coset-table", action="store_true")
    p.set_defaults(func=cmd_group)

    p = sub.add_parser("color", help="signed coloration counts")
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--mask", help="15-bit hex sign mask")
    grp.add_argument("--file", help="signed edge-list file")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--zero-free", action="store_true")
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("cluster", help="clusterability of a signature")
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--mask", help="15-bit hex sign mask")
    grp.add_argument("--file", help="signed edge-list file")
    p.set_defaults(func=cmd_cluster)

    p = sub.add_parser("verify", help="recompute and compare all tables")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except io_mod.InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
