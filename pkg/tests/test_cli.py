import json

import pytest
from click.testing import CliRunner

from cgraph.cli import main


@pytest.fixture
def runner():
    return CliRunner()


def invoke_json(runner, args):
    result = runner.invoke(main, args)
    assert result.exit_code == 0, result.output
    return json.loads(result.stdout)


def test_info_catalog_group(runner):
    payload = invoke_json(runner, ["info", "--name", "D", "--param", "8"])
    assert payload["order"] == 8
    assert payload["center_order"] == 2
    assert payload["is_ac"] is True
    assert payload["element_orders"] == {"1": 1, "2": 5, "4": 2}


def test_info_verbose_goes_to_stderr(runner):
    result = runner.invoke(main, ["info", "--name", "Q8", "--verbose"])
    assert result.exit_code == 0
    json.loads(result.stdout)  # stdout stays pure JSON
    assert "order 8" in result.stderr


def test_info_from_table_file(runner, tmp_path):
    from cgraph.catalog import build
    g = build("S", 3)
    lines = [f"order {g.order}", "table"]
    lines += [" ".join(str(v) for v in row) for row in g.table]
    path = tmp_path / "s3.group"
    path.write_text("\n".join(lines) + "\n")
    payload = invoke_json(runner, ["info", "--file", str(path)])
    assert payload["order"] == 6 and payload["name"] == "s3"


def test_info_from_perm_generator_file(runner, tmp_path):
    path = tmp_path / "s3.group"
    path.write_text("order 6\nperm-generators 3\n(1 2)\n(1 2 3)\n")
    payload = invoke_json(runner, ["info", "--file", str(path)])
    assert payload["order"] == 6 and payload["abelian"] is False


def test_usage_errors_exit_2(runner, tmp_path):
    assert runner.invoke(main, ["info"]).exit_code == 2
    assert runner.invoke(main, ["info", "--name", "NoSuch"]).exit_code == 2
    assert runner.invoke(
        main, ["info", "--file", str(tmp_path / "missing")]).exit_code == 2
    bad = tmp_path / "bad.group"
    bad.write_text("gibberish\n")
    assert runner.invoke(main, ["info", "--file", str(bad)]).exit_code == 2
    both = ["info", "--name", "Q8", "--file", str(bad)]
    assert runner.invoke(main, both).exit_code == 2
    assert runner.invoke(main, ["verify", "nonsense"]).exit_code == 2


def test_genus_report_d16(runner):
    payload = invoke_json(runner, ["genus", "--name", "D", "--param", "16"])
    assert payload["group"] == {"name": "D16", "order": 16,
                                "center_order": 2, "is_ac": True}
    assert payload["graph"]["vertices"] == 14
    assert payload["genus"] == {"kind": "exact", "value": 1,
                                "certificate": "BlockSum"}
    sizes = sorted(b["size"] for b in payload["blocks"])
    assert sizes == [2, 2, 2, 2, 6]
    assert payload["bounds"]["h"] == 7


def test_genus_rejects_abelian_group(runner):
    result = runner.invoke(main, ["genus", "--name", "Z", "--param", "6"])
    assert result.exit_code == 2


def test_genus_is_deterministic(runner):
    first = runner.invoke(main, ["genus", "--name", "GL2", "--param", "3"])
    second = runner.invoke(main, ["genus", "--name", "GL2", "--param", "3"])
    assert first.stdout == second.stdout


def test_export_dot(runner, tmp_path):
    out = tmp_path / "q8.dot"
    payload = invoke_json(
        runner, ["export-dot", "--name", "Q8", "--out", str(out)])
    assert payload == {"written": str(out), "vertices": 6, "edges": 3}
    text = out.read_text()
    assert text.startswith('graph "Q8" {')
    assert text.count("--") == 3


def test_export_catalog(runner, tmp_path):
    payload = invoke_json(runner, ["export-catalog"])
    assert any(e["name"] == "SD16" for e in payload)
    out = tmp_path / "catalog.json"
    invoke_json(runner, ["export-catalog", "--out", str(out)])
    assert json.loads(out.read_text()) == payload


@pytest.mark.parametrize("suite,count", [
    ("acyclic", 45), ("planar", 45), ("toroidal", 46)])
def test_verify_classification_suites(runner, suite, count):
    payload = invoke_json(runner, ["verify", suite])
    assert payload["ok"] is True
    assert payload[suite]["failed"] == 0
    assert payload[suite]["passed"] == count


def test_verify_formulas_suite(runner):
    payload = invoke_json(runner, ["verify", "formulas"])
    assert payload["ok"] is True
    checks = payload["formulas"]["checks"]
    assert all(c["formula"] == c["engine"] for c in checks)
    families = {c["family"] for c in checks}
    assert families == {"Dihedral", "Dicyclic", "Semidihedral", "PQ",
                        "PCubed", "PSL2", "GL2", "AbelianTimesAC"}


def test_verify_bounds_suite(runner):
    payload = invoke_json(runner, ["verify", "bounds"])
    assert payload["ok"] is True
    names = {c["check"] for c in payload["bounds"]["checks"]}
    assert names == {"max_commuting_set", "center_size",
                     "abelian_subgroups", "order_bound"}


def test_verify_all(runner):
    payload = invoke_json(runner, ["verify", "all"])
    assert payload["ok"] is True
    assert set(payload) == {"acyclic", "planar", "toroidal", "formulas",
                            "bounds", "ok"}


def test_verify_failure_exits_1(runner, monkeypatch):
    from cgraph import cli

    def broken_suite():
        return [{"group": "X", "ok": False}]

    monkeypatch.setitem(cli.SUITES, "acyclic", broken_suite)
    result = runner.invoke(main, ["verify", "acyclic"])
    assert result.exit_code == 1
    assert json.loads(result.stdout)["ok"] is False
