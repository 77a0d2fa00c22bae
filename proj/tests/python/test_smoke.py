import pytest

import lpgroup


def test_presets_and_abelianization():
    G = lpgroup.grigorchuk()
    assert G.rank == 4
    assert G.invariant
    ab = lpgroup.abelian_invariants(G)
    assert ab["torsion"] == [2, 2, 2]
    assert ab["free_rank"] == 0
    assert lpgroup.abelian_invariants(lpgroup.gamma(5))["text"] == "Z5 x Z5"


def test_parse_round_trip():
    G = lpgroup.gamma(3)
    assert lpgroup.parse(str(G)) == G
    with pytest.raises(ValueError):
        lpgroup.parse("gens a;")


def test_lower_central_sections():
    q = lpgroup.lower_central_sections(lpgroup.grigorchuk(), 6)
    ranks = [len(s["torsion"]) for s in q["sections"]]
    assert ranks == [3, 2, 2, 1, 2, 2]
    assert not q["partial"]


def test_maximal_quotient_and_dwyer():
    assert lpgroup.maximal_nilpotent_quotient(lpgroup.gamma(3), 4) is None
    sections = lpgroup.maximal_nilpotent_quotient(lpgroup.gamma(6), 8)
    assert [s["text"] for s in sections] == ["Z6 x Z6", "Z6", "Z3"]
    dw = lpgroup.dwyer_quotients(lpgroup.grigorchuk(), 4)
    assert [len(e["torsion"]) for e in dw] == [0, 1, 2, 3]


def test_index_and_low_index():
    G = lpgroup.grigorchuk()
    r = lpgroup.subgroup_index(G, ["b", "c", "d", "a*b*a", "a*c*a", "a*d*a"])
    assert r["certified"] and r["index"] == 2
    subs = lpgroup.low_index_subgroups(G, 4)
    assert sum(1 for s in subs if s["index"] == 2) == 7
    assert all(s["certified"] for s in subs)
    normal = lpgroup.low_index_subgroups(lpgroup.gamma(3), 3, normal_only=True)
    assert [s["index"] for s in normal].count(3) == 4


def test_derived_series():
    ds = lpgroup.derived_series(lpgroup.grigorchuk(), 2)
    assert [s["text"] for s in ds["sections"]] == ["Z2 x Z2 x Z2", "Z2 x Z2 x Z4"]
    assert ds["cumulative_index"] == [8, 128]
    assert ds["exact"]
