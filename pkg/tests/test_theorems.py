import pytest

from starq.quotient import stable_quiver_of
from starq.theorems import (
    THEOREMS,
    counterexample_d9,
    eligible_instances,
    perturbed_probes,
    verify_instance,
)
from starq.tilting import keller_reiten_check


def test_unknown_theorem_rejected():
    with pytest.raises(ValueError):
        eligible_instances("Z9", 10)


def test_a1_grid_parameters():
    insts = eligible_instances("A1", 6, 3)
    assert all(i.u % 2 == 0 for i in insts)
    for i in insts:
        n = i.label.dynkin.rank
        assert i.label.circumference == (i.u // 2) * (n + 1) + 1


def test_a2_divisibility():
    insts = eligible_instances("A2", 21, 11)
    assert all(i.u % 2 == 1 for i in insts)
    for i in insts:
        p, s = i.label.params
        assert s * (2 * p + 1) == i.u * (p + 1) + 1
        assert (s + 1) % (p + 1) == 0  # p+1 divides s+1


def test_d_known_lists():
    d4 = [i.u for i in eligible_instances("D1", 20, 4)]
    assert d4 == [3, 8, 13, 18]
    d6 = sorted(
        i.u
        for t in ("D1", "D3")
        for i in eligible_instances(t, 10, 6)
        if i.label.dynkin.rank == 6
    )
    assert d6 == [1, 4, 7, 10]


def test_d2_type_rule():
    for i in eligible_instances("D2", 40, 9):
        assert i.label.flip == (i.u % 2 == 1)


def test_d3_exclusions():
    insts = eligible_instances("D3", 40, 9)
    for i in insts:
        (s,) = i.label.params
        assert s % 3 != 0
        m = i.label.dynkin.rank // 3
        assert not (m % 2 == 1 and i.u % 2 == 1)
    # D_9 / u=3 (m and u both odd) must be absent
    assert not any(i.label.dynkin.rank == 9 and i.u == 3 for i in insts)


def test_e_known_lists():
    assert [i.u for i in eligible_instances("E6", 25)] == [9, 20]
    assert [i.u for i in eligible_instances("E7", 15)] == [15]
    assert [i.u for i in eligible_instances("E8", 27)] == [27]
    for i in eligible_instances("E6", 25):
        assert i.label.flip == (i.u % 2 == 1)


def test_eligibility_matches_raw_equations():
    # brute-force re-derivation of the A2 grid from its defining equation
    raw = {
        (p, s, u)
        for p in range(1, 6)
        for u in range(1, 22, 2)
        for s in range(1, 50)
        if s * (2 * p + 1) == u * (p + 1) + 1
    }
    got = {(i.label.params[0], i.label.params[1], i.u) for i in eligible_instances("A2", 21, 11)}
    assert raw == got


def test_verify_instance_green():
    for t in THEOREMS:
        inst = eligible_instances(t, 27, 9)[0]
        rep = verify_instance(inst)
        assert rep.all_green, (t, str(inst.label), inst.u)
        assert rep.shape.ok and rep.kr.cy_ok


def test_counterexample_d9():
    cx = counterexample_d9()
    assert cx.stable_cy == 29 and cx.formula_cy == 29
    assert cx.expected_cluster_cy == 4
    assert cx.circumference == (25, 25)
    assert cx.flip == (False, True)
    assert cx.exceptional_orbits == (2, 1)
    assert not cx.kr.cy_ok
    assert cx.kr.tilting_ok and cx.kr.endo_ok and cx.kr.negext_ok


def test_perturbed_probes_all_red():
    probes = perturbed_probes(20)
    assert len(probes) == 20
    for lab, u in probes:
        rep = keller_reiten_check(stable_quiver_of(lab), u)
        assert not rep.all_green, (str(lab), u)
