import pytest

import nilgraph


def test_ring_basics():
    ring = nilgraph.Ring("Z12")
    assert ring.order == 12
    assert ring.text == "Z12"
    assert ring.add(3, 10) == 1
    assert ring.is_nilpotent(6)
    assert not ring.is_nilpotent(2)
    assert ring.nil() == [0, 6]


def test_product_ring_labels():
    ring = nilgraph.Ring("z4 x z9")
    assert ring.text == "Z4xZ9"
    assert ring.order == 36
    assert ring.label(ring.one) == "(1,1)"


def test_parse_errors_are_value_errors():
    with pytest.raises(ValueError):
        nilgraph.Ring("Z1")
    with pytest.raises(ValueError):
        nilgraph.Ring("bogus")


def test_graph_counts_match_the_figures():
    g = nilgraph.Graph(nilgraph.Ring("Z12"))
    assert g.vertex_count == 10
    assert g.edge_count == 9
    assert g.adjacent(3, 9)
    assert not g.adjacent(1, 2)
    assert g.girth() == 4
    assert g.clique_number() == 2
    gamma, witness = g.dominating_number()
    assert gamma == 5
    chi_prime, vizing = g.chromatic_index()
    assert (chi_prime, vizing) == (2, 1)
    assert g.chromatic_number() == 2


def test_infinite_girth_is_none():
    g = nilgraph.Graph(nilgraph.Ring("Z15"))
    assert g.girth() is None


def test_dot_is_deterministic():
    a = nilgraph.Graph(nilgraph.Ring("Z18")).to_dot()
    b = nilgraph.Graph(nilgraph.Ring("Z18")).to_dot()
    assert a == b
    assert a.startswith("graph")


def test_analyze_z18():
    report = nilgraph.analyze("Z18")
    assert report["invariants"]["girth"] == 3
    assert report["invariants"]["omega"] == 3
    assert report["invariants"]["chi_prime"] == 3
    assert len(report["decomposition"]["components"]) == 3
    assert report["spectra"]["A"]["verified"] is True


def test_verdicts_z9():
    rows = nilgraph.verify_instance("Z9")
    status = {row["theorem"]: row["status"] for row in rows}
    assert status["DominatingZn"] == "Mismatch"
    assert status["GirthZn"] == "Match"
    assert status["SpectraZn"] == "Match"
    assert status["BicliqueCount"] == "Match"


def test_witnesses():
    ring = nilgraph.Ring("Z12")
    assert nilgraph.even_order_witness(ring) == 3
    holds, counterexample = nilgraph.odd_halving_check(ring)
    assert not holds and counterexample == 3

    witness = nilgraph.bipartition_witness("Z12")
    assert witness["clique_part"] == [3, 9]
    assert len(witness["part_a"]) == 4


def test_sweep_zn():
    result = nilgraph.sweep_zn(30)
    girth_rows = [r for r in result["rows"] if r["theorem"] == "GirthZn"]
    assert len(girth_rows) == 29
    assert all(r["status"] != "Mismatch" for r in girth_rows)
