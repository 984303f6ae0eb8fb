import pytest

import p3d


def test_parse_reports_pair():
    j = p3d.parse("u=s1; beta=1 1 1")
    assert j["schema"] == p3d.SCHEMA == 1
    assert j["n"] == 2
    assert j["u"] == [2, 1]
    assert j["beta"] == [1, 1, 1]
    assert j["admissible"]


def test_parse_error_cites_byte():
    with pytest.raises(p3d.ParseError, match="byte"):
        p3d.parse("u=s1; beta=1 x 1")


def test_not_admissible():
    with pytest.raises(p3d.NotAdmissible):
        p3d.seed("u=s1 s2 s1; beta=1 2")


def test_seed_hopf():
    j = p3d.seed("u=s1; beta=1 1 1")
    assert len(j["J"]) == 2
    assert len(j["frozen"]) + len(j["mutable"]) == len(j["J"])
    assert len(j["cluster_variables"]) == len(j["J"])


def test_count_walk_matches_brute():
    walk = p3d.count("u=s1 s2 s1; beta=1 2 1 2 1", q=3)
    brute = p3d.count("u=s1 s2 s1; beta=1 2 1 2 1", method="brute", q=3)
    assert walk["value"] == brute["value"]


def test_homfly_hopf():
    j = p3d.homfly("u=s1; beta=1 1 1")
    assert j["link"]["components"] == 2
    assert j["graph_components"] >= 1
    assert "z" in j["homfly"]


def test_verify_families():
    assert "halfarrow" in p3d.families()
    for fam in ["halfarrow", "cycles", "moves", "rank"]:
        j = p3d.verify("u=s2; beta=-2 1 2 1 -1", family=fam)
        assert j["report"]["ok"], j["report"]["failures"]


def test_verify_le():
    j = p3d.verify("le=++/.+", family="le")
    assert j["report"]["ok"]


def test_deterministic_output():
    assert p3d._p3d.seed("u=s2; beta=1 2 1 2", 0) == p3d._p3d.seed("u=s2; beta=1 2 1 2", 0)
