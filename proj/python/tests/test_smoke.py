import math
from fractions import Fraction

import pytest

import lsqmc


def test_params_info():
    info = lsqmc.params_info((1, 1))
    assert info["gamma"] == pytest.approx((math.sqrt(5) - 1) / 2, rel=1e-15)
    assert info["squarefree_part"] == 5
    assert info["regime"] == "bounded"
    assert lsqmc.params_info((1, 2))["rational_gamma"]
    with pytest.raises(ValueError):
        lsqmc.params_info((0, 1))


def test_counts_are_python_ints():
    t = lsqmc.counts((1, 1), 120)
    u = lsqmc.counts((4, 1), 30)
    assert t[:4] == [1, 2, 3, 5]
    assert all(u[n] == t[3 * n] for n in range(31))
    assert t[120] > 2**64


def test_sequence_and_partition_agree():
    exact = lsqmc.sequence_exact((2, 1), 7)
    lefts = [iv[2] for iv in lsqmc.partition((2, 1), 2)]
    assert sorted(exact, key=lambda pq: float(pq[0]) + float(pq[1]) * lsqmc.params_info((2, 1))["gamma"]) == lefts
    assert lsqmc.phi((1, 1), 1) == (Fraction(0), Fraction(1))
    assert lsqmc.admissible_indices((1, 1), 6) == [0, 1, 2, 4, 5, 8]
    assert not lsqmc.is_admissible((1, 1), 3)
    with pytest.raises(ValueError):
        lsqmc.phi((1, 1), 3)


def test_discrepancy():
    quarter = lsqmc.disc1d_rational([(1, 4), (3, 4)], kind="extreme")
    assert quarter["value"] == pytest.approx(0.5)
    star = lsqmc.disc1d((1, 1), 300)
    brute = lsqmc.disc1d((1, 1), 300, brute_force=True)
    assert abs(star["value"] - brute["value"]) <= 1e-12
    assert brute["method"] == "brute_force"
    two = lsqmc.disc2d_rational([(1, 4), (3, 4)], [(1, 4), (3, 4)])
    assert two["value"] == pytest.approx(7 / 16)
    assert lsqmc.disc2d_vdc((1, 1), 1)["value"] == 1.0
    with pytest.raises(ValueError):
        lsqmc.disc1d_rational([])


def test_point_sets():
    pts = lsqmc.vdc((1, 1), 4)
    assert [x for x, _ in pts] == [0.0, 0.25, 0.5, 0.75]
    h = lsqmc.halton((1, 1), (4, 1), 50)
    assert len(h) == 50 and all(0 <= x < 1 and 0 <= y < 1 for x, y in h)


def test_resonance():
    r = lsqmc.resonance((1, 1), (4, 1))
    assert (r["related"], r["p"], r["q"], r["count_relation"]) == (True, 3, 1, 3)
    assert lsqmc.resonance((3, 1), (5, 1))["count_relation"] is None


def test_scan_and_limits():
    rows = lsqmc.scan("partition", (1, 2), [0, 3])
    assert [r["N"] for r in rows] == [1, 11]
    assert math.isnan(rows[0]["ND_logN"])
    assert len(lsqmc.scan("halton", (1, 1), [10, 20], second=(4, 1))) == 2
    with pytest.raises(lsqmc.ResourceLimitError):
        lsqmc.partition((1, 1), 40)
