"""Smoke tests for the python bindings."""

import pytest

import rpl


def test_counts_and_enumeration():
    assert rpl.partition_count(9) == 30
    assert rpl.partition_count(49) == 173525
    parts = rpl.partitions(4)
    assert parts == [[4], [3, 1], [2, 2], [2, 1, 1], [1, 1, 1, 1]]
    assert rpl.partitions(0) == [[]]


def test_statistics():
    assert rpl.weight([5, 1, 1, 1, 1]) == 9
    assert rpl.conjugate([3, 1]) == [2, 1, 1]
    assert rpl.srank([9]) == -8
    assert rpl.dyson_rank([4, 1]) == 2
    assert rpl.ag_crank([1]) == -1
    assert rpl.stcrank([9]) == -4
    assert rpl.freq_token([5, 1, 1, 1, 1]) == "1^4.5^1"


def test_bijections():
    pi1, pi2 = rpl.bijection1([4, 4, 4, 2, 2])
    assert pi1 == [2, 1] and pi2 == [4]
    assert rpl.bijection1_inverse(pi1, pi2) == [4, 4, 4, 2, 2]
    assert rpl.classify([2, 2]) == "A"
    assert rpl.bijection2([2, 2]) == [3, 1]
    assert rpl.bijection2_inverse([3, 1]) == [2, 2]


def test_residue_counts():
    counts = rpl.residue_counts(9, "stcrank", 5)
    assert all(counts[k] == 6 for k in range(5))
    refined = rpl.refined_counts(9, 5)
    assert all(refined[(0, k)] == 4 and refined[(2, k)] == 2 for k in range(5))
    with pytest.raises(ValueError):
        rpl.residue_counts(8, "c5core", 5)


def test_five_core_machinery():
    assert rpl.is_t_core([5, 1, 1, 1, 1], 5)
    assert rpl.five_core_crank([5, 1, 1, 1, 1]) == 0
    assert rpl.phi2([5, 1, 1, 1, 1], 5) == [-1, 0, 0, 0, 1]
    assert rpl.alpha_from_n([-1, 0, 0, 0, 1]) == [0, 1, 1, 0, -1]
    assert rpl.phi2_inverse([1, 1, 0, -1, -1]) == [2, 2]
    assert rpl.theta_map([]) == [2, 2]
    assert rpl.quadrupling_map([]) == [2, 1]
    core, quotient = rpl.littlewood_decompose([3, 3, 3], 5)
    assert core == [2, 2]
    assert rpl.littlewood_compose(core, quotient) == [3, 3, 3]
    assert rpl.core_count(9) == 5
    assert len(rpl.five_cores_of(9)) == 5


def test_orbits():
    rows = rpl.orbit_rows(9)
    assert len(rows) == 6
    flattened = {tuple(p) for row in rows for p in row}
    assert len(flattened) == 30
    step = rpl.orbit_op([5, 1, 1, 1, 1], "plain")
    assert rpl.five_core_crank(step) == 1


def test_checks():
    assert "stcrank-equidistribution" in rpl.check_names()
    report = rpl.run_check("theorem1", max_n=14)
    assert report["pass"] and report["check"] == "stcrank-equidistribution"
    report = rpl.run_check("rambest", order=12)
    assert report["pass"]
    with pytest.raises(ValueError):
        rpl.run_check("does-not-exist")
