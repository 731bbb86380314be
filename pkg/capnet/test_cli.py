"""
Command line: golden outputs, repeatability, exit statuses and error reporting.
"""
import csv
import io
import json

import pytest

from capnet.main import load_config, run
from capnet.core.errors import ConfigError
from capnet.testing import BARBELL_ROUTING, SINGLE_HOT_LINK, TESTDATA, TRIANGLE_PENDANT, dot_statements

GOLDEN = TESTDATA / "golden"
BARBELL = str(BARBELL_ROUTING)
TRIANGLE = str(TRIANGLE_PENDANT)
HOT_LINK = str(SINGLE_HOT_LINK)
TWO_LINKS = str(TESTDATA / "two_links.edges")
SCENARIO = str(TESTDATA / "barbell_scenario.yaml")


def invoke(*argv):
    out, err = io.StringIO(), io.StringIO()
    status = run(list(argv), out=out, err=err)
    return status, out.getvalue(), err.getvalue()


def invoke_json(*argv):
    status, out, _ = invoke(*argv)
    return status, json.loads(out)


def golden(name):
    return json.loads((GOLDEN / name).read_text(encoding="utf-8"))


def rounded(doc):
    """Floats rounded to 9 places, so summed loads compare equal to their written values."""
    if isinstance(doc, float):
        return round(doc, 9)
    if isinstance(doc, list):
        return [rounded(item) for item in doc]
    if isinstance(doc, dict):
        return {key: rounded(value) for key, value in doc.items()}
    return doc


GOLDEN_CASES = [
    ("core_two_links.json", ["core", "--input", TWO_LINKS]),
    ("route_barbell_mindeg_3.json",
     ["route", "--input", BARBELL, "--measure", "mindeg", "--rho0", "3", "--from", "s", "--to", "t"]),
    ("cover_barbell_conn_3.json", ["cover", "--input", BARBELL, "--measure", "conn", "--rho0", "3"]),
    ("index_barbell_bridge.json", ["index", "--input", BARBELL, "--measure", "mindeg", "--path", "s,a1,b1,t"]),
    ("oracle_triangle_pendant.json", ["oracle-check", "--input", TRIANGLE, "--measure", "mindeg", "--rho0", "2"]),
    ("densest_barbell.json", ["densest", "--input", BARBELL]),
    ("kcore_barbell.json", ["kcore", "--input", BARBELL]),
    ("cover_barbell_whole_conn_2.json",
     ["cover", "--input", BARBELL, "--whole-graph", "--measure", "conn", "--rho0", "2"]),
    ("route_barbell_load_weights.json",
     ["route", "--input", BARBELL, "--measure", "mindeg", "--rho0", "5", "--from", "s", "--to", "t",
      "--weights", "load"]),
    ("cap_single_hot_link.json", ["cap", "--input", HOT_LINK, "--measure", "mindeg", "--from", "s", "--to", "t"]),
    ("simulate_barbell_detour.json",
     ["simulate", "--scenario", str(TESTDATA / "barbell_detour.yaml"), "--input", str(TESTDATA / "barbell_detour.edges")]),
    ("simulate_barbell_demo.json", ["simulate", "--scenario", str(TESTDATA / "barbell_demo.yaml")]),
]

REPEATED = [argv for _, argv in GOLDEN_CASES] + [
    ["cap", "--input", BARBELL, "--measure", "mindeg", "--from", "s", "--to", "t"],
    ["cover", "--input", BARBELL, "--measure", "mindeg", "--rho0", "3", "--output", "dot"],
    ["route", "--input", BARBELL, "--measure", "mindeg", "--rho0", "3", "--from", "s", "--to", "t",
     "--output", "dot"],
    ["simulate", "--scenario", SCENARIO],
    ["simulate", "--scenario", SCENARIO, "--output", "csv"],
    ["simulate", "--topology", "random_uniform", "--nodes", "14", "--edge-param", "0.35",
     "--load-model", "uniform", "--threshold", "0.3", "--measure", "max(mindeg,conn)", "--rho0", "2",
     "--queries", "8", "--seed", "4"],
]


@pytest.mark.parametrize("name,argv", GOLDEN_CASES)
def test_golden_outputs(name, argv):
    status, doc = invoke_json(*argv)
    assert status == 0
    assert rounded(doc) == rounded(golden(name))


@pytest.mark.parametrize("argv", REPEATED)
def test_repeated_invocations_are_byte_identical(argv):
    first = invoke(*argv)
    second = invoke(*argv)
    assert first[0] == second[0]
    assert first[1] == second[1]
    assert first[1]


def test_cap_picks_the_densest_value():
    status, doc = invoke_json("cap", "--input", BARBELL, "--measure", "mindeg", "--from", "s", "--to", "t")
    assert status == 0
    assert doc["path"] == ["s", "d1", "d2", "t"]
    assert doc["rho0_used"] == "3"
    assert doc["cover_size"] == 8

    status, doc = invoke_json("cap", "--input", HOT_LINK, "--measure", "mindeg", "--from", "s", "--to", "t")
    assert doc["path"] == ["s", "x", "y", "t"]
    assert doc["rho0_used"] == "1"


def test_cap_on_a_cool_network_has_no_density():
    status, doc = invoke_json("cap", "--input", TWO_LINKS, "--threshold", "0.9", "--from", "a", "--to", "c")
    assert status == 0
    assert doc["rho0_used"] is None
    assert doc["path"] == ["a", "b", "c"]


def test_route_above_every_density_takes_the_bridge():
    status, doc = invoke_json("route", "--input", BARBELL, "--measure", "mindeg", "--rho0", "5",
                              "--from", "s", "--to", "t")
    assert status == 0
    assert doc["path"] == ["s", "a1", "b1", "t"]
    assert doc["cover"] == []


def test_route_with_no_path_exits_one():
    status, doc = invoke_json("route", "--input", BARBELL, "--measure", "mindeg", "--rho0", "3",
                              "--from", "a2", "--to", "t")
    assert status == 1
    assert doc["status"] == "no_path"
    assert doc["reason"] == "endpoint_removed"


def test_kcore_reports_numbers_and_shells():
    status, doc = invoke_json("kcore", "--input", BARBELL)
    assert status == 0
    assert doc["degeneracy"] == 3
    assert set(doc["core_numbers"].values()) == {3}
    assert len(doc["shells"]) == 4

    status, doc = invoke_json("kcore", "--input", BARBELL, "--k", "4")
    assert status == 1
    assert doc["nodes"] == []

    status, doc = invoke_json("kcore", "--input", BARBELL, "--whole-graph", "--k", "3")
    assert doc["scope"] == "whole_graph"
    assert doc["nodes"] == ["a1", "a2", "a3", "a4", "b1", "b2", "b3", "b4"]


def test_empty_cover_exits_one():
    status, doc = invoke_json("cover", "--input", BARBELL, "--measure", "edge", "--rho0", "2")
    assert status == 1
    assert doc["cover"] == []


def test_threshold_flag_and_json_input():
    status, doc = invoke_json("core", "--input", TWO_LINKS, "--threshold", "0.5")
    assert doc["nodes"] == ["a", "b", "c"]
    status, doc = invoke_json("core", "--input", str(TESTDATA / "two_links.json"))
    assert doc["nodes"] == ["b", "c"]


def test_dot_output():
    status, out, _ = invoke("cover", "--input", BARBELL, "--measure", "mindeg", "--rho0", "3", "--output", "dot")
    assert status == 0
    header, nodes, _ = dot_statements(out)
    assert header == "graph dense_cover {"
    assert nodes["a1"] == {"style": "filled", "fillcolor": "gray70"}
    assert "s" not in nodes

    status, out, _ = invoke("route", "--input", BARBELL, "--measure", "mindeg", "--rho0", "3",
                            "--from", "s", "--to", "t", "--output", "dot")
    header, nodes, edges = dot_statements(out)
    assert header == "graph route {"
    assert edges[("s", "d1")] == {"load": "0.1", "style": "bold", "penwidth": "3"}
    assert edges[("a1", "b1")]["congested"] == "true"
    assert nodes["d2"] == {"penwidth": "2"}


def test_oracle_check_with_a_route():
    status, doc = invoke_json("oracle-check", "--input", TRIANGLE, "--measure", "mindeg", "--rho0", "2",
                              "--from", "s", "--to", "t")
    assert status == 0
    assert doc["route"]["fast_path"] == ["s", "w", "t"]
    assert doc["route"]["oracle_path"] == ["s", "w", "t"]
    assert doc["route"]["agree"] and doc["route"]["avoids_qualifying"]


def test_simulate_barbell_scenario(tmp_path):
    saved = tmp_path / "scenario.edges"
    status, doc = invoke_json("simulate", "--scenario", SCENARIO, "--save-graph", str(saved))
    assert status == 0
    assert doc["node_count"] == 10
    assert doc["core_size"] == 4 and doc["cover_size"] == 4
    assert doc["aggregates"]["queries"] == 12
    assert all(r["global_avoids_cover"] is not False for r in doc["records"])
    assert len(saved.read_text().splitlines()) == 15

    status, out, _ = invoke("simulate", "--scenario", SCENARIO, "--output", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 12
    assert rows[0]["index"] == "0"


def test_simulate_pairs_flag_and_json_save(tmp_path):
    saved = tmp_path / "detour.json"
    status, doc = invoke_json("simulate", "--input", str(TESTDATA / "barbell_detour.edges"), "--rho0", "3",
                              "--pairs", "s:t, d1:d2", "--save-graph", str(saved))
    assert status == 0
    assert [(r["source"], r["target"]) for r in doc["records"]] == [("s", "t"), ("d1", "d2")]
    assert doc["scenario"]["pairs"] == [["s", "t"], ["d1", "d2"]]
    assert doc["records"][0]["local_hits_cover"] and doc["records"][0]["global_avoids_cover"]
    again = json.loads(saved.read_text())
    assert len(again["nodes"]) == 12 and len(again["edges"]) == 18


@pytest.mark.parametrize("pairs,expected", [
    ("s-t", 2),
    ("s:", 2),
    ("s:s", 3),
    ("s:nowhere", 3),
])
def test_simulate_rejects_bad_pairs(pairs, expected):
    status, out, _ = invoke("simulate", "--input", BARBELL, "--pairs", pairs)
    assert status == expected
    assert out == ""


def test_run_log_path_is_announced(tmp_path):
    config = tmp_path / "capnet.yaml"
    config.write_text(f"logging:\n  log_dir: {tmp_path / 'logs'}\n  to_file: true\n", encoding="utf-8")
    status, _, err = invoke("core", "--input", TWO_LINKS, "--config", str(config))
    assert status == 0
    logs = list((tmp_path / "logs").glob("capnet_run_*.log"))
    assert len(logs) == 1
    assert f"Run log: {logs[0]}" in err


@pytest.mark.parametrize("argv,expected", [
    (["core", "--input", str(TESTDATA / "duplicate_edge.edges")], 3),
    (["core", "--input", str(TESTDATA / "negative_load.edges")], 3),
    (["core", "--input", str(TESTDATA / "missing.edges")], 3),
    (["route", "--input", BARBELL, "--rho0", "3", "--from", "s", "--to", "nowhere"], 3),
    (["cover", "--input", BARBELL, "--measure", "min(mindeg", "--rho0", "2"], 3),
    (["cover", "--input", BARBELL, "--measure", "kclique:3", "--rho0", "2"], 3),
    (["cover", "--input", BARBELL, "--measure", "kclique:7", "--rho0", "2"], 3),
    (["cover", "--input", BARBELL, "--rho0", "-1"], 3),
    (["index", "--input", BARBELL, "--path", "s,t"], 3),
    (["core", "--input", TWO_LINKS, "--config", str(TESTDATA / "absent.yaml")], 3),
    (["index", "--input", BARBELL, "--path", "s,a1", "--output", "dot"], 2),
    (["core", "--input", TWO_LINKS, "--output", "csv"], 2),
    (["cover", "--input", BARBELL], 2),
    (["oracle-check", "--input", TRIANGLE, "--rho0", "2", "--from", "s"], 2),
    (["teleport"], 2),
])
def test_exit_statuses(argv, expected):
    status, out, _ = invoke(*argv)
    assert status == expected
    assert out == ""


def test_errors_are_reported_on_stderr():
    status, out, err = invoke("core", "--input", str(TESTDATA / "duplicate_edge.edges"))
    assert status == 3
    assert "line 2" in err and "duplicate edge" in err


def test_default_configuration_loads():
    settings = load_config()
    assert settings.congestion.threshold == 0.7
    assert settings.simulation.topology == "barbell"
    with pytest.raises(ConfigError):
        load_config(str(TESTDATA / "absent.yaml"))
