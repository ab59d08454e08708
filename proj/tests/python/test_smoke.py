import json

import pytest

import orderlab


def test_lap_uap_example():
    c3 = orderlab.chain(3)
    r1 = orderlab.validate_aux(c3, [(0, 0), (0, 1), (0, 2), (1, 2)])
    assert orderlab.lap(r1, [1, 2]) == [2]
    assert orderlab.uap(r1, [0]) == [0, 1]
    assert orderlab.classify(r1) == {"pre_approximating": True, "approximating": False, "int": False}


def test_json_round_trip():
    for p in orderlab.enumerate_posets(3):
        assert orderlab.poset_from_json(p.to_json()) == p
    assert len(orderlab.enumerate_posets(4)) == 219
    assert len(orderlab.enumerate_posets(4, up_to_iso=True)) == 16


def test_topologies():
    c3 = orderlab.chain(3)
    assert orderlab.mu_topology(orderlab.bottom_relation(c3)) == [[], [0, 1, 2]]
    assert orderlab.scott_topology(c3) == orderlab.mu_topology(orderlab.way_below(c3))
    assert orderlab.one_step(orderlab.diamond(), [1]) == [0, 1]


def test_errors_are_value_errors():
    with pytest.raises(ValueError):
        orderlab.validate_aux(orderlab.chain(2), [(1, 0)])
    with pytest.raises(ValueError):
        orderlab.lap(orderlab.order_relation(orderlab.chain(2)), [5])


def test_suite_run_and_search():
    rep = orderlab.run_suite(3, ["int-char", "partition"])
    assert rep["failures"] == []
    assert rep["status"] == "pass"
    w = orderlab.search_counterexample("cspace-implies-approximating", 3)
    assert w is not None
    assert orderlab.replay("cspace", w["fingerprint"])["pass"] is True
    assert orderlab.search_counterexample("int-equivalence-break", 3) is None


def test_cli_entry():
    code, out, err = orderlab.cli(["family", "ladder", "member", "--set", "Aprime", "top"])
    assert (code, out, err) == (0, "false\n", "")
    code, out, _ = orderlab.cli(["verify", "--max-n", "2"])
    assert code in (0, 3)
    assert json.loads(out)["schema"] == 1
