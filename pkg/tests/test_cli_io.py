import json
import random

import numpy as np
import pytest

from cubestar.cli_io import (
    DocumentError,
    SubgraphDocument,
    export_dimacs,
    load_document,
    main,
    read_subgraph,
    write_subgraph,
)
from cubestar.construct import extremal_pair
from cubestar.hypercube import edge_count
from cubestar.solver import min_edge_dominating, verify_certificate
from cubestar.subgraph import CubeSubgraph


def doc(n, pairs, **extra):
    d = {"schema_version": "1", "n": n, "deleted_edges": pairs, "metadata": {}}
    d.update(extra)
    return json.dumps(d)


def test_round_trip_extremal_g3():
    g = extremal_pair(3).g
    text = write_subgraph(g)
    assert len(json.loads(text)["deleted_edges"]) == 3
    assert read_subgraph(text) == g
    assert write_subgraph(read_subgraph(text)) == text


def test_round_trip_random():
    rng = np.random.default_rng(0)
    for _ in range(1000):
        n = int(rng.integers(1, 9))
        g = CubeSubgraph(n, rng.random(edge_count(n)) < rng.random())
        text = write_subgraph(g, metadata={"k": "v"})
        assert read_subgraph(text) == g
        assert write_subgraph(read_subgraph(text), metadata={"k": "v"}) == text


def test_canonical_bytes_under_permutation():
    g = extremal_pair(5).g
    d = SubgraphDocument.from_subgraph(g)
    shuffled = list(d.deleted_edges)
    random.Random(1).shuffle(shuffled)
    assert SubgraphDocument(d.n, shuffled).to_json() == d.to_json()


@pytest.mark.parametrize(
    "text, where",
    [
        (doc(3, [[0, 3]]), "deleted_edges[0]"),
        (doc(3, [[0, 1], [0, 1]]), "deleted_edges[1]"),
        (doc(3, [[0, 8]]), "deleted_edges[0]"),
        (doc(3, [[1, 0]]), "deleted_edges[0]"),
        (doc(3, [[0, True]]), "deleted_edges[0]"),
        (doc(0, []), "n"),
        (doc(3, [], schema_version="2"), "schema_version"),
        (doc(3, [], extra=1), "extra"),
        (json.dumps({"n": 3, "deleted_edges": []}), "schema_version"),
        ('{"n": 3,\n "deleted_edges": [}', "line 2 column 20"),
    ],
)
def test_reader_diagnostics(text, where):
    with pytest.raises(DocumentError) as err:
        SubgraphDocument.from_json(text)
    assert err.value.where == where


def test_not_a_hypercube_edge_message():
    with pytest.raises(DocumentError, match="not a hypercube edge"):
        SubgraphDocument.from_json(doc(3, [[0, 3]]))


def test_dimacs():
    out = export_dimacs(CubeSubgraph.full(1)).splitlines()
    assert out == ["p edge 2 1", "e 1 2"]
    assert len(export_dimacs(CubeSubgraph.full(3)).splitlines()) == 1 + 12
    lines = export_dimacs(extremal_pair(4).g).splitlines()
    assert lines[0] == "p edge 16 26" and len(lines) == 27


def test_solver_certificate_document(tmp_path):
    res = min_edge_dominating(4)
    path = tmp_path / "c4.json"
    write_subgraph(res.witness, path, {"claimed_free": "true", "claimed_optimal": "true"})
    d = load_document(path)
    assert d.n == 4 and len(d.deleted_edges) == 6
    assert verify_certificate(d.to_certificate())


# -- CLI --------------------------------------------------------------------


def test_cli_formula(capsys):
    assert main(["formula", "--n", "6"]) == 0
    assert capsys.readouterr().out.strip() == "168"


def test_cli_construct_check_export(tmp_path, capsys):
    f = tmp_path / "g.json"
    assert main(["construct", "--n", "4", "--prime", "--out", str(f)]) == 0
    assert read_subgraph(f) == extremal_pair(4).g_prime
    assert main(["check", "--in", str(f)]) == 0
    assert "certificate: verified" in capsys.readouterr().out
    assert main(["check", "--in", str(f), "--repair"]) == 0
    assert "was_edge_maximal=True" in capsys.readouterr().out
    assert main(["export", "--in", str(f), "--format", "dimacs"]) == 0
    assert capsys.readouterr().out.startswith("p edge 16 26\n")


def test_cli_check_refuted(tmp_path, capsys):
    f = tmp_path / "full.json"
    write_subgraph(CubeSubgraph.full(3), f)
    assert main(["check", "--in", str(f)]) == 1
    assert "contains S_{2,2}" in capsys.readouterr().out
    assert main(["check", "--in", str(f), "--pattern", "3,3"]) == 0


def test_cli_check_repair(tmp_path, capsys):
    g = extremal_pair(3).g
    g.delete_edge(0)
    f = tmp_path / "g.json"
    write_subgraph(g, f)
    assert main(["check", "--in", str(f), "--repair"]) == 0
    out = capsys.readouterr().out
    assert "direct_add" in out and "min_degree=2" in out


def test_cli_false_optimality_claim(tmp_path, capsys):
    g = extremal_pair(3).g
    g.delete_edge(0)
    f = tmp_path / "g.json"
    write_subgraph(g, f, {"claimed_optimal": "true"})
    assert main(["check", "--in", str(f)]) == 1
    assert "REFUTED" in capsys.readouterr().out


def test_cli_malformed(tmp_path, capsys):
    f = tmp_path / "bad.json"
    f.write_text(doc(3, [[0, 3]]))
    assert main(["check", "--in", str(f)]) == 2
    assert "not a hypercube edge" in capsys.readouterr().err
    assert main(["check", "--in", str(tmp_path / "missing.json")]) == 2


@pytest.mark.parametrize("mode", ["exhaustive", "bnb"])
def test_cli_solve(tmp_path, capsys, mode):
    f = tmp_path / "cert.json"
    assert main(["solve", "--n", "3", "--mode", mode, "--cert", str(f)]) == 0
    assert "optimum_edges=9" in capsys.readouterr().out
    d = load_document(f)
    assert d.metadata["claimed_optimal"] == "true"
    assert verify_certificate(d.to_certificate())


def test_cli_solve_budget(capsys):
    assert main(["solve", "--n", "5", "--budget", "500"]) == 0
    assert "proof_complete=False" in capsys.readouterr().out
