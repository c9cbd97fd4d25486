import json

from bktame.cli import run


def run_json(argv):
    text, code = run(argv)
    return json.loads(text), code


def test_types_counts_p3_f1():
    report, code = run_json(["types", "-p", "3", "-f", "1"])
    assert code == 0
    kinds = [it["kind"] for it in report["items"]]
    assert kinds.count("cusp") == 3
    scalars = [it for it in report["items"] if it["scalar"]]
    assert len(scalars) == 2
    nonscalar_ps = [it for it in report["items"]
                    if it["kind"] == "ps" and not it["scalar"]]
    assert len(nonscalar_ps) == 1


def test_types_ordered_lists_pairs():
    report, _ = run_json(["types", "-p", "3", "-f", "1", "--ordered"])
    ps = [it for it in report["items"] if it["kind"] == "ps"]
    assert len(ps) == 4


def test_p_must_be_odd():
    text, code = run(["types", "-p", "2", "-f", "1"])
    assert code == 2 and "odd" in text


def test_bad_type_selector():
    text, code = run(["ptau", "-p", "3", "-f", "1", "--type", "cusp:4"])
    assert code == 2


def test_ptau_report():
    report, code = run_json(["ptau", "-p", "3", "-f", "1", "--type", "ps:1,0"])
    assert code == 0
    by_key = {it["key"]: it for it in report["items"]}
    assert by_key["ps:1,0|J={}"]["in_ptau"] is True
    assert by_key["ps:1,0|J={0}"]["in_ptau"] is True
    assert by_key["ps:1,0|J={0}"]["family_dim"] == 1
    report2, _ = run_json(["ptau", "-p", "3", "-f", "1", "--type", "cusp:1"])
    flags = {it["key"]: it["in_ptau"] for it in report2["items"]}
    assert flags == {"cusp:1|J={0}": False, "cusp:1|J={1}": True}


def test_weights_report_has_dimension_checks():
    report, code = run_json(["weights", "-p", "3", "-f", "1"])
    assert code == 0
    sums = [it for it in report["items"] if it["key"].endswith("dimsum")]
    assert sums and all(it["ok"] for it in sums)
    rows = [it for it in report["items"] if "char_exponent" in it]
    assert all(it["char_exponent"] == it["char_exponent_alpha_route"] for it in rows)


def test_oracle_seeded_run_is_byte_identical():
    a, code_a = run(["oracle", "-p", "3", "-f", "1", "-e", "1",
                     "--samples", "5", "--seed", "11"])
    b, code_b = run(["oracle", "-p", "3", "-f", "1", "-e", "1",
                     "--samples", "5", "--seed", "11"])
    assert a == b and code_a == code_b == 0


def test_oracle_different_seeds_differ():
    a, _ = run(["oracle", "-p", "3", "-f", "1", "--samples", "5", "--seed", "1"])
    b, _ = run(["oracle", "-p", "3", "-f", "1", "--samples", "5", "--seed", "2"])
    assert a != b


def test_oracle_exhaustive_passes():
    report, code = run_json(["oracle", "-p", "3", "-f", "1", "-e", "1",
                             "--exhaustive", "--samples", "0"])
    assert code == 0
    assert report["summary"]["fail"] == 0
    assert report["summary"]["millis"] == 0
    kext_rows = [it for it in report["items"] if it["key"].startswith("kext")]
    assert kext_rows and all(it["ok"] for it in kext_rows)


def test_items_record_inputs_for_replay():
    report, _ = run_json(["oracle", "-p", "3", "-f", "1", "--samples", "3",
                          "--seed", "4"])
    pair_rows = [it for it in report["items"] if "M" in it]
    assert pair_rows
    for it in pair_rows:
        assert set(it["M"]) == {"r", "a", "c"}
        assert all(isinstance(x, int) for x in it["M"]["r"])


def test_oracle_trunc_override_reaches_same_verdicts():
    base, code = run_json(["oracle", "-p", "3", "-f", "1", "--samples", "5",
                           "--seed", "3"])
    deep, code2 = run_json(["oracle", "-p", "3", "-f", "1", "--samples", "5",
                            "--seed", "3", "--trunc", "5"])
    assert code == code2 == 0
    pick = lambda rep: {it["key"]: (it.get("ext"), it.get("hom"))
                        for it in rep["items"] if "ext" in it}
    assert pick(base) == pick(deep)


def test_bm_report():
    report, code = run_json(["bm", "-p", "3", "-f", "1"])
    assert code == 0
    orth = [it for it in report["items"] if it["key"] == "orthogonality"]
    assert orth[0]["ok"] is True
    weight_rows = [it for it in report["items"] if it["key"].startswith("weight|")]
    assert len(weight_rows) == 4
    assert all(it["unit_cycle"] and it["unit_cycle_permuted"] for it in weight_rows)


def test_components_report():
    report, code = run_json(["components", "-p", "3", "-f", "1", "--type", "cusp:1"])
    assert code == 0
    counts = [it for it in report["items"] if it["key"].endswith("count")]
    assert counts[0]["components"] == 2


def test_csv_and_text_render():
    text, code = run(["types", "-p", "3", "-f", "1", "--format", "csv"])
    assert code == 0
    header = text.splitlines()[0].split(",")
    assert "key" in header and len(text.splitlines()) == 7
    text2, _ = run(["types", "-p", "3", "-f", "1", "--format", "text"])
    assert "pass=6 fail=0" in text2


def test_out_file_and_env_dir(tmp_path, monkeypatch):
    monkeypatch.setenv("BKTAME_OUTPUT_DIR", str(tmp_path))
    text, code = run(["types", "-p", "3", "-f", "1", "--out", "report.json"])
    assert code == 0
    on_disk = (tmp_path / "report.json").read_text(encoding="utf-8")
    assert on_disk == text
