import json

import pytest

from ellsurf import clauses as cl
from ellsurf.conformance import theorem_coherence

GOLDEN_COUNTS = {"j0_w2": 13, "j0_w3": 76, "j1728_w2": 25, "j1728_w3": 2}

# Pairs of options that fire together somewhere in the residue domain.  All of
# them assign opposite values, so the first-match rule in ``lookup`` matters.
GOLDEN_OVERLAPS = {
    "j0_w2": set(),
    "j0_w3": {(f"first.2.c.{r}", f"second.2.c.{r}") for r in ("i", "ii", "iii", "iv", "v", "vi")}
    | {("first.2.d", "second.2.d")},
    "j1728_w2": {
        ("first.1.b.i", "second.1.b.i"),
        ("first.1.c.i", "second.1.c.i"),
        ("first.1.c.i", "second.1.c.ii"),
        ("first.1.c.ii", "second.1.c.iii"),
    },
    "j1728_w3": set(),
}


@pytest.mark.parametrize("lemma", sorted(GOLDEN_COUNTS))
def test_clause_counts_golden(lemma):
    assert len(cl.LEMMA_TABLES[lemma]) == GOLDEN_COUNTS[lemma] == cl.EXPECTED_COUNTS[lemma]


@pytest.mark.parametrize("lemma", sorted(GOLDEN_COUNTS))
def test_labels_unique(lemma):
    labels = [c.label for c in cl.LEMMA_TABLES[lemma]]
    assert len(labels) == len(set(labels))


@pytest.mark.parametrize("lemma", sorted(GOLDEN_OVERLAPS))
def test_overlaps_golden(lemma):
    found = cl.overlaps(lemma)
    assert {(o.first, o.second) for o in found} == GOLDEN_OVERLAPS[lemma]
    assert not any(o.same_value for o in found)


def test_value_rules_cover_tables():
    for table in cl.LEMMA_TABLES.values():
        for c in table:
            assert c.value in cl.VALUE_RULES
            assert all(g.residues and max(g.residues) < g.modulus for g in c.guards)


def test_json_roundtrip():
    for table in cl.LEMMA_TABLES.values():
        data = json.loads(json.dumps(cl.table_to_json(table)))
        assert cl.table_from_json(data) == table


def test_table_from_json_rejects_unknown_value():
    data = cl.table_to_json(cl.J1728_W3)
    data[0]["value"] = "+2"
    with pytest.raises(ValueError):
        cl.table_from_json(data)


def test_theorem_first_list_coherent_second_list_not():
    coh = theorem_coherence()
    assert coh["first_list"] == []
    assert len(coh["second_list"]) == 264
    # one source: the k = 1 vc3 options are listed verbatim in both lemma blocks
    assert any(r["k"] == 1 for r in coh["second_list"])


def test_feature_extraction():
    assert cl.features_j0_w2(3, 1, 39) == {"v2A": 0, "v2B": 0, "v2C": 0, "C2": 3}
    f = cl.features_j0_w3(1, 9, 13)
    assert f["k"] == 1 and f["Ap2"] == 1
    assert cl.normalize_j1728(3, 4) == (4, 3, True)
    assert cl.features_j1728_w3(3, 5, 9) == {"v3AB": 1, "v3C": 2}
    assert cl.features_j1728_w2(2, 1, 6)["k"] == 1


def test_lookup_first_match():
    hit = cl.lookup(cl.J1728_W3, {"v3AB": 0, "v3C": 2})
    assert hit.constant and hit.labels[0] == "even.v3C≡2"
    assert not cl.lookup(cl.J1728_W3, {"v3AB": 1, "v3C": 2}).constant
