import t5census as t5


def test_round_trip():
    h = t5.TripleSystem(5, [(0, 1, 2), (0, 1, 3), (0, 1, 4), (2, 3, 4)])
    assert h.edge_count() == 4
    assert h.to_triples() == "n=5;triples=0-1-2,0-1-3,0-1-4,2-3-4"
    again = t5.TripleSystem.from_string(h.to_hex())
    assert again == h
    assert [tuple(e) for e in again.edges()] == [(0, 1, 2), (0, 1, 3), (0, 1, 4), (2, 3, 4)]


def test_detection_and_partitions():
    h = t5.TripleSystem(5, [(0, 1, 2), (0, 1, 3), (0, 1, 4), (2, 3, 4)])
    w = t5.contains_t5(h)
    assert w is not None
    u, v, edge = w
    assert not t5.has_independent_neighborhoods(h)
    assert t5.is_semibipartite(h) is None
    opt = t5.optimal_partitions(h)
    assert opt["d_h"] == 1
    assert opt["total_witnesses"] == 9
    assert opt["witnesses"][0].x_mask == 0b00011

    system, part = t5.build_b3(6)
    assert system.edge_count() == 12
    assert t5.contains_t5(system) is None
    assert t5.is_semibipartite(system) is not None
    assert part.x_size() == 4


def test_census_and_gap():
    c = t5.full_census(5)
    assert c["i_n"] == 653
    assert c["s_n"] == 476
    assert c["i_n"] == c["t5_free"]
    assert c["max_t5free_edges"] == 7

    gap = t5.counting_gap(4)
    assert gap["holds"]
    assert gap["margin"] == 65521


def test_constructions_and_bounds():
    assert t5.b3(9) == (45, 6)
    ns = t5.ns_sample(9, seed=7)
    assert t5.contains_t5(ns) is None
    assert t5.is_semibipartite(ns) is None

    assert abs(t5.binary_entropy(0.5) - 1.0) < 1e-15
    facts = t5.entropy_facts(64, 9, 20)
    assert facts["exact"] and facts["single_holds"] and facts["tail_holds"]


def test_acceptance_hook():
    r = t5.run_criterion(5)
    assert r["passed"]
    assert r["name"] == "b3-argmax"
