from fractions import Fraction

import pytest

import triwise


def test_frontier_measure_and_family():
    f = triwise.frontier_family(1, 1, 4)
    assert f["n"] == 4
    assert triwise.p_measure(f, Fraction(1, 2)) == Fraction(5, 16)
    assert triwise.frontier_measure(1, 1, "1/2", 4) == Fraction(5, 16)


def test_intersecting_and_closure():
    f0 = triwise.frontier_family(0, 2, 5)
    assert triwise.is_intersecting(f0, 3, 2)
    assert not triwise.is_intersecting(f0, 3, 3)
    pair = triwise.family(4, [[1, 2], [3, 4]])
    check = triwise.intersecting_check(pair, 2, 1)
    assert not check["holds"]
    up = triwise.up_closure(triwise.family(3, [[1]]))
    assert len(up["members"]) == 4
    assert triwise.minimal_generators(up)["members"] == [[1]]


def test_shifting():
    f = triwise.family(4, [[2, 3], [3, 4]])
    assert not triwise.is_shifted(f)
    trace = triwise.shift_saturate(f)
    assert trace["shifted"]
    assert triwise.is_shifted(trace["family"])


def test_walks():
    assert triwise.classify_walk(4, [1, 3, 4], 1) == "DDOT"
    assert triwise.classify_walk(5, [1, 2, 4, 5], 1) == "TILDE"
    assert triwise.count_walks(1, 1) == 2


def test_thresholds():
    assert triwise.p0_exact(10) == Fraction(1, 3)
    assert triwise.p0_exact(15) is None
    assert triwise.compare_with_p0(Fraction(1, 4), 10) < 0
    enc = triwise.p0(10)
    assert float(enc["lower"]) <= 1 / 3 <= float(enc["upper"])
    a = triwise.alpha("1/2")
    golden = (5 ** 0.5 - 1) / 2
    assert abs(float(a["lower"]) - golden) < 1e-12
    assert float(a["lower"]) <= float(a["upper"])


def test_claims():
    assert "A1" in triwise.claim_ids()
    rep = triwise.verify_claim("A3", t_max=20, grid_points=8)
    assert rep["verdict"] == "holds"


def test_search():
    [rep] = triwise.search_max_measure(5, 1, [Fraction(1, 3)])
    assert Fraction(rep["max_measure"]) == Fraction(1, 3)
    assert rep["status"] == "known"


def test_audits_and_stability():
    assert triwise.audit_lemmas(triwise.frontier_family(0, 3, 8), 3)["passed"]
    k = triwise.stability_constants(18, "1/4")
    assert float(k["C"]["lower"]) > 2
    audit = triwise.stability_audit(triwise.frontier_family(1, 18, 21), 18, "1/4")
    assert audit["theorem2"] == "equality"


def test_errors():
    with pytest.raises(triwise.DomainError):
        triwise.frontier_family(1, 2, 4)
    with pytest.raises(triwise.ParseError):
        triwise.p_measure({"n": 3, "members": [[4]]}, "1/2")
    with pytest.raises(triwise.CapabilityError):
        triwise.search_max_measure(7, 1, ["1/3"])
    with pytest.raises(ValueError):
        triwise.alpha("3/2")
