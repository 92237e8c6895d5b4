from collections import Counter

import pytest
from pydantic import ValidationError

from nets import net_to_json, verify_axioms
from search import BudgetExceeded, NetSearch, SearchTask, enumerate_nets, hunt_hyperoval_net, run_search
from theorems import check_n4


def test_no_order_three_net_on_the_arc_frame_over_gf3():
    nets, summary = run_search(SearchTask(p=3, n=3, frames=["arc"]))
    assert nets == []
    assert summary.nets == 0
    assert summary.complete
    assert summary.branches > 0


def test_three_collinear_components_over_gf3():
    nets, summary = run_search(SearchTask(p=3, n=4, require_collinear=["A", "B", "C"]))
    assert nets == []
    assert summary.complete
    assert summary.exceeded_branches == 0


def test_order_four_nets_over_gf5():
    nets, summary = run_search(SearchTask(p=5, n=4))
    assert nets
    assert summary.complete
    assert summary.nets == len(nets)
    assert sum(summary.by_regularity.values()) == len(nets)
    for net in nets:
        assert verify_axioms(net).passed
        assert net.provenance["family"] == "search"
        # over GF(5) every order-4 net has three collinear components
        assert check_n4(net).regular_lines


def test_order_four_case_split_over_gf7():
    nets, summary = run_search(SearchTask(p=7, n=4))
    assert summary.complete
    assert len(nets) == 468
    certs = [check_n4(net) for net in nets]
    assert all(cert.passed for cert in certs)
    assert Counter((cert.arc, cert.cyclic_case) for cert in certs) == {
        (True, True): 444,
        (False, True): 18,
        (False, False): 6,
    }
    for cert in certs:
        if cert.cyclic_case:
            assert cert.closed_form_on_b_and_c and cert.closed_form_on_fourth
        else:
            assert cert.forced_structure is True
            v = cert.labelling
            assert (v["e"] + v["a"]) % 7 == 0 and (v["h"] + v["b"]) % 7 == 0
            assert v["d"] == (v["a"] - v["b"] + v["c"]) % 7


@pytest.mark.slow
def test_budgeted_order_four_search_over_gf8():
    nets, summary = run_search(SearchTask(p=2, k=3, n=4, budget=20000))
    assert summary.nets == len(nets)
    for net in nets:
        cert = check_n4(net)
        assert cert.passed
        assert cert.nullity >= 1


def test_workers_give_the_same_stream():
    task = SearchTask(p=5, n=3, frames=["arc"])
    single = [net_to_json(net) for net in NetSearch(task)]
    pooled = [net_to_json(net) for net in NetSearch(task, jobs=2)]
    assert single == pooled
    assert [net_to_json(net) for net in enumerate_nets(task)] == single


def test_budget_is_reported():
    search = hunt_hyperoval_net(8, budget=1)
    with pytest.raises(BudgetExceeded) as info:
        list(search)
    assert info.value.summary.exceeded_branches > 0
    assert not info.value.summary.complete


def test_run_search_keeps_the_partial_result():
    _, summary = run_search(SearchTask(p=5, n=4, budget=1))
    assert summary.exceeded_branches > 0
    assert not summary.complete


def test_task_validation():
    with pytest.raises(ValidationError):
        SearchTask(p=2, k=3, n=4, hyperoval=True)
    with pytest.raises(ValidationError):
        SearchTask(p=2, k=3, n=5, hyperoval=True, require_collinear=["C"])
    with pytest.raises(ValidationError):
        SearchTask(p=3, n=3, frames=["non_arc"])
    with pytest.raises(ValidationError):
        SearchTask(p=3, n=1)
    assert SearchTask(p=2, k=3, n=5, hyperoval=True).frames == ["arc"]
    with pytest.raises(ValueError):
        hunt_hyperoval_net(6)
