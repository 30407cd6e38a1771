import csv
import io as stdio
import json

import pytest

from signedpetersen import cli
from signedpetersen import expected
from signedpetersen.census import (TABLE_IDS, build_table, run_census,
                                   standard_mask, verify_all)
from signedpetersen.io import (InputError, format_mask, parse_mask,
                               parse_signed_graph, serialize_signed_graph)
from signedpetersen.signed import SIX_ORDER, SignedGraph
from signedpetersen.graphs import petersen


# --------------------------------------------------------------------------
# census core
# --------------------------------------------------------------------------

def test_run_census_totals():
    report = run_census()
    assert report.total_signatures == expected.TOTAL_SIGNATURES
    assert report.total_switching_classes == expected.TOTAL_SWITCHING_CLASSES
    for i, t in enumerate(SIX_ORDER):
        c = report.per_class[t]
        assert c.signature_count == expected.SIGNATURE_COUNTS[i]
        assert c.switching_class_count == expected.SWITCHING_CLASSES[i]
        assert c.minimal_count == expected.COPIES[i]
        # the orbit walk picks the least minimal mask, which classifies the
        # same and carries the class's frustration index
        from signedpetersen.signed import classify_six_mask
        assert classify_six_mask(c.representative_mask) is t
        assert c.representative_mask.bit_count() == expected.FRUSTRATION_INDEX[i]


def test_standard_masks_classify_correctly(rep_masks):
    from signedpetersen.signed import classify_six_mask
    for t, mask in zip(SIX_ORDER, rep_masks):
        assert classify_six_mask(mask) is t


def test_verify_all_empty():
    assert verify_all() == []


def test_table_artifacts_render():
    for tid in TABLE_IDS:
        art = build_table(tid)
        text = art.render("text")
        assert text.strip()
        rows = list(csv.reader(stdio.StringIO(art.render("csv"))))
        assert len(rows) >= 2
        data = json.loads(art.render("json"))
        assert data["table"] == tid
        assert data["columns"]
        assert all("label" in r and "values" in r for r in data["rows"])
    with pytest.raises(ValueError):
        build_table("T99")


def test_table_t1_values():
    data = json.loads(build_table("T1").render("json"))
    by_label = {r["label"]: r["values"] for r in data["rows"]}
    assert by_label["negative pentagons"] == list(expected.NEGATIVE_PENTAGONS)
    assert by_label["negative hexagons"] == list(expected.NEGATIVE_HEXAGONS)


# --------------------------------------------------------------------------
# io round trips
# --------------------------------------------------------------------------

def test_mask_round_trip():
    assert parse_mask("0x1a2") == 0x1A2
    assert parse_mask("1A2") == 0x1A2
    assert parse_mask(format_mask(0x7FFF)) == 0x7FFF
    with pytest.raises(InputError):
        parse_mask("0x8000")
    with pytest.raises(InputError):
        parse_mask("zz")


def test_edge_list_round_trip(pg):
    g, _ = pg
    s = SignedGraph.from_mask(g, 0x1234)
    assert parse_signed_graph(serialize_signed_graph(s)) == s
    # sign column optional, comments ignored
    t = parse_signed_graph("# comment\nn 3\n0 1\n1 2 -\n")
    assert t.signs == (1, -1)


@pytest.mark.parametrize("text", [
    "", "0 1 +", "n x", "n -1", "n 3\n0 1 *", "n 3\n0 3 +",
    "n 3\n0 0 +", "n 3\n0 1 +\n1 0 -",
])
def test_edge_list_errors(text):
    with pytest.raises(InputError):
        parse_signed_graph(text)


# --------------------------------------------------------------------------
# command line
# --------------------------------------------------------------------------

def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_cli_census_and_tables(capsys):
    code, out, _ = run_cli(capsys, "census")
    assert code == 0 and "P3,3" in out
    code, out, _ = run_cli(capsys, "table", "T1", "--format", "json")
    assert code == 0 and json.loads(out)["table"] == "T1"
    code, out, _ = run_cli(capsys, "table", "T10", "--format", "csv")
    assert code == 0 and out.splitlines()[0].startswith("T10,")


def test_cli_classify(capsys, rep_masks):
    code, out, _ = run_cli(capsys, "classify", "--mask",
                           format_mask(rep_masks[4]))
    assert code == 0
    assert "class P3,2" in out
    assert "frustration index 3" in out
    assert "negative pentagons 6" in out


def test_cli_classify_file(capsys, tmp_path, pg):
    g, _ = pg
    path = tmp_path / "sig.txt"
    path.write_text(serialize_signed_graph(SignedGraph.from_mask(g, 1)))
    code, out, _ = run_cli(capsys, "classify", "--file", str(path))
    assert code == 0 and "class P1" in out


def test_cli_group(capsys, rep_masks):
    code, out, _ = run_cli(capsys, "group", "--mask",
                           format_mask(rep_masks[4]), "--coset-table")
    assert code == 0
    assert "aut order 6 label S3" in out
    assert "swaut order 60 label A5" in out
    assert "cosets 10 conjugation-closed True" in out
    assert sum(1 for ln in out.splitlines() if ln.startswith("rep ")) == 10


def test_cli_color_and_cluster(capsys, rep_masks):
    code, out, _ = run_cli(capsys, "color", "--mask",
                           format_mask(rep_masks[4]), "--k", "1")
    assert code == 0 and "colorations at k=1: 80" in out
    code, out, _ = run_cli(capsys, "cluster", "--mask", "0x0")
    assert code == 0 and "clusterable yes clusters 1" in out
    code, out, _ = run_cli(capsys, "cluster", "--mask",
                           format_mask(rep_masks[2]))
    assert code == 0 and "clusterable no inclusterability 2" in out
    code, out, _ = run_cli(capsys, "cluster", "--mask",
                           format_mask(rep_masks[1]))
    assert code == 0 and "clusterable no inclusterability 1" in out


def test_cli_verify(capsys):
    code, out, _ = run_cli(capsys, "verify")
    assert code == 0 and "all tables verified" in out


def test_cli_errors(capsys, monkeypatch):
    code, _, err = run_cli(capsys, "classify", "--mask", "0xFFFFF")
    assert code == 2 and "error" in err
    code, _, err = run_cli(capsys, "color", "--mask", "0x0", "--k", "9")
    assert code == 2
    code, _, err = run_cli(capsys, "classify", "--file", "/nonexistent")
    assert code == 2
    monkeypatch.setenv("SIGNEDPETERSEN_WORKERS", "bogus")
    code, _, err = run_cli(capsys, "census")
    assert code == 2
