import csv
import io
import json

import pytest

from anticomm.catalog import UnknownCatalogName
from anticomm.cli import main
from anticomm.harness import (
    IncompatiblePair,
    SweepConfig,
    dumps_csv,
    dumps_report,
    exit_status,
    explain_instance,
    format_explanation,
    run_sweep,
)


def sweep(**kw):
    summary, records, timing = run_sweep(SweepConfig(**kw))
    return summary, records


def test_tiny_sweep_agrees():
    summary, records = sweep(max_order=4, rings=["z4"])
    assert records and all(r["agreement"] for r in records)
    assert summary["mismatch_count"] == 0 and exit_status(summary) == 0
    for r in records:
        assert set(r) >= {"group", "ring", "involution", "orientation", "direct", "predicate", "structure", "agreement"}
        assert "timing" not in r


def test_char3_never_holds():
    summary, records = sweep(max_order=8, rings=["z3"])
    assert summary["direct_holds"] == 0 and records


def test_z8_nontrivial_involution_fails():
    _, records = sweep(max_order=8, rings=["z8"])
    moved = [r for r in records if r["involution"] != list(range(r["group_order"]))]
    assert moved and not any(r["direct"] for r in moved)


def test_char2_rejected():
    summary, records = sweep(max_order=4, rings=["dual-z2"])
    assert records and all(r["rejected"] == "char 2" for r in records)
    assert summary["rejected_char2"] == len(records) and summary["evaluated"] == 0


def test_trivial_sigma_flag():
    s0, r0 = sweep(max_order=4, rings=["z4"])
    s1, r1 = sweep(max_order=4, rings=["z4"], include_trivial_sigma=True)
    assert len(r1) > len(r0)
    assert sum(1 for r in r1 if r.get("trivial_sigma")) == s1["trivial_sigma"] > 0


def test_config_validation():
    with pytest.raises(ValueError):
        SweepConfig(max_order=20).validate()
    SweepConfig(max_order=20, allow_order_32=True).validate()
    with pytest.raises(ValueError):
        SweepConfig(rings=[]).validate()
    with pytest.raises(ValueError):
        SweepConfig(mode="nope").validate()


def test_modes_add_fields():
    _, rec = sweep(max_order=4, rings=["z4"], mode="lemmas")
    holding = [r for r in rec if r["direct"]]
    assert holding and all(r["lemmas_all_hold"] for r in holding)
    assert all("classification" in r for r in rec)


def test_report_is_deterministic_and_parallel_safe():
    s1, r1 = sweep(max_order=6, rings=["z4", "z8"], mode="classify")
    s2, r2 = sweep(max_order=6, rings=["z4", "z8"], mode="classify", jobs=2)
    assert dumps_report(s1, r1) == dumps_report(s2, r2)


def test_csv_flattening():
    _, records = sweep(max_order=4, rings=["z8"], mode="classify")
    rows = list(csv.DictReader(io.StringIO(dumps_csv(records))))
    assert len(rows) == len(records)
    assert "classification.structure.tag" in rows[0]
    assert "witness.a" in rows[0]


def test_explain_examples():
    d = explain_instance("C2", "z4", "id", "0")
    assert d["generators"] == {"2S1": ["2*e"], "S2": ["2*a"], "S3": []}
    assert d["direct"]["holds"] and d["classification"]["structure"]["tag"] == "IA"
    d = explain_instance("C4", "z4", "inv", "[1,3,1,3]")
    st = d["classification"]["structure"]
    assert st["tag"] == "IB1" and st["s"] == "a^2"
    d = explain_instance("C4", "z8", "inversion", "a=3")
    w = d["direct"]["witness"]
    assert w["a"] == w["b"] == "a + 3*a^3"
    text = format_explanation(d)
    assert "witness" in text and "jordan products" in text


def test_explain_errors():
    with pytest.raises(UnknownCatalogName):
        explain_instance("Z99", "z4", "id", "0")
    with pytest.raises(IncompatiblePair):
        _first_incompatible()


def _first_incompatible():
    from anticomm.catalog import builtin_catalog
    from anticomm.involutions import enumerate_involutions
    from anticomm.orientation import enumerate_orientations, is_compatible
    from anticomm.rings import ring_from_token

    R = ring_from_token("z8")
    for G in builtin_catalog(8):
        for i, tau in enumerate(enumerate_involutions(G)):
            for j, sigma in enumerate(enumerate_orientations(G, R)):
                if not is_compatible(tau, sigma):
                    return explain_instance(G.name, "z8", str(i), str(j))
    raise AssertionError("no incompatible pair found")


def test_group_file_input(tmp_path):
    p = tmp_path / "k4.json"
    p.write_text(json.dumps({"order": 4, "table": [[i ^ j for j in range(4)] for i in range(4)]}))
    summary, records = sweep(max_order=None, group_files=[str(p)], rings=["z4"])
    assert records and {r["group"] for r in records} == {"k4"}


def test_cli_verify_writes_report(tmp_path, capsys):
    out = tmp_path / "r.json"
    assert main(["verify", "--max-order", "4", "--rings", "z4", "--out", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data["summary"]["mismatch_count"] == 0
    assert (tmp_path / "r.json.timing.json").exists()
    assert "total_seconds" not in out.read_text()
    capsys.readouterr()


def test_cli_csv(tmp_path, capsys):
    out = tmp_path / "r.csv"
    assert main(["classify", "--max-order", "4", "--rings", "z4,z8", "--out", str(out), "--format", "csv"]) == 0
    assert out.read_text().startswith("group,")
    assert (tmp_path / "r.csv.summary.json").exists()
    capsys.readouterr()


def test_cli_exit_codes(tmp_path, capsys):
    assert main(["verify", "--max-order", "4", "--rings", "q7"]) == 1
    assert main(["witness", "--group", "Z99", "--ring", "z4"]) == 1
    assert main(["verify", "--max-order", "4", "--rings", "z4", "--out", str(tmp_path / "no" / "r.json")]) == 1
    assert main(["witness", "--group", "C4", "--ring", "z8", "--involution", "inv", "--orientation", "0"]) == 0
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--bogus"])
    assert exc.value.code == 2  # argparse usage error
    capsys.readouterr()


def test_cli_mismatch_exit_code(capsys):
    # one of the order-16 instances the closed form misses
    assert main(["verify", "--group", "C4:C4", "--rings", "z4"]) == 2
    out = json.loads(capsys.readouterr().out)
    assert out["mismatch_count"] > 0
