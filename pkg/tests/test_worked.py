import pytest

from tgrs.recipes import RECIPE_IDS
from tgrs.worked import analyze_case, load_example, run_examples


@pytest.mark.parametrize("rid", RECIPE_IDS)
def test_example(rid):
    for case in load_example(rid):
        res = analyze_case(case)
        assert res.passed, res.diffs
        assert res.seconds < 10


def test_line1_has_both_twists():
    labels = [c.label for c in load_example("line1")]
    assert labels == ["eta5=b^3", "eta5=b^7"]
    mds = [analyze_case(c).got["mds_class"] for c in load_example("line1")]
    assert mds == ["NMDS", "MDS"]


def test_block4_recorded_quantum_differs_from_derived():
    (case,) = load_example("block4")
    res = analyze_case(case)
    assert res.got["quantum"] == "[[12,2,6]]"
    assert case.expected["printed_quantum"] == "[[6,2,3]]"
    assert res.passed


def test_run_examples_filter():
    res = run_examples(["block2"])
    assert len(res) == 1 and res[0].passed
    assert res[0].got["code"] == [9, 4, 6] and res[0].got["quantum"] == "[[9,1,5]]"
