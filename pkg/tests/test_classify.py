import pytest

from ellsurf.classify import (
    ConstancyVerdict,
    SurfaceJ0,
    SurfaceJ1728,
    classify,
    classify_j0,
    classify_j1728,
    classify_w2_j0,
    find_j0_representation,
)
from ellsurf.errors import NoCMRepresentation, NotCoprime, ZeroInput
from ellsurf.scanner import find_both_signs


def test_representation_orientations():
    assert find_j0_representation(27, 16) == (3, 4, 1, False)
    assert find_j0_representation(1053, 39) == (3, 1, 39, False)
    # both orientations work here and give different (A, B, C)
    assert find_j0_representation(39, 1053) == (1, 9, 13, False)
    assert find_j0_representation(1, 3) == (1, 1, 1, True)
    assert find_j0_representation(405, 15) is not None
    assert find_j0_representation(1, 1) is None
    assert find_j0_representation(3, -1) is None


def test_surface_validation():
    with pytest.raises(ZeroInput):
        SurfaceJ0(0, 1)
    with pytest.raises(NotCoprime):
        SurfaceJ1728(2, 4, 1)
    with pytest.raises(ZeroInput):
        SurfaceJ1728(1, 1, 0)
    with pytest.raises(NoCMRepresentation):
        classify_w2_j0(SurfaceJ0(1, 1))


def test_local_verdicts():
    assert classify_j0(27, 16).label == "Constant(+1)"
    assert classify_j0(1053, 39).label == "Varies"
    assert classify_j0(405, 15).label == "Varies"
    assert classify_j1728(1, 1, 1).label == "Constant(+1)"
    assert classify_j1728(1, 1, 9).label == "Constant(-1)"
    assert classify_j1728(3, 5, 7).label == "Varies"


def test_literal_method_reproduces_printed_examples():
    assert classify_j0(1053, 39, "literal").label == "Constant(+1)"
    assert classify_j0(405, 15, "literal").label == "Constant(-1)"


@pytest.mark.parametrize("a,b", [(1053, 39), (405, 15)])
def test_printed_examples_are_contradicted(a, b):
    found = find_both_signs(SurfaceJ0(a, b), 10)
    assert set(found) == {1, -1}


def test_varies_without_representation():
    v = classify_j0(1, 1)
    assert not v.constant and "no solution" in v.reason


def test_verdict_dict():
    d = classify_j0(27, 16).to_dict()
    assert d["verdict"] == "constant" and d["sign"] == 1 and d["method"] == "local" and d["trail"]
    d = classify_j1728(3, 5, 7).to_dict()
    assert d["verdict"] == "varies" and "p = " in d["reason"]
    with pytest.raises(ValueError):
        ConstancyVerdict(True, 1, ())


def test_unknown_method():
    with pytest.raises(ValueError):
        classify(SurfaceJ0(27, 16), "guess")


def test_table_override_changes_literal_verdict():
    # an empty w3 table means no clause can fire
    v = classify_j1728(1, 1, 1, "literal", tables={"j1728_w3": ()})
    assert not v.constant and v.reason == "no w3 clause fires"


def test_reading_option():
    assert classify_j0(27, 16, "literal", reading="v2").method == "literal"
