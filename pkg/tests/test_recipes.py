import numpy as np
import pytest

from tgrs.code import classify, min_distance
from tgrs.criteria import check_so, gram_is_zero
from tgrs.errors import (
    ClaimViolated,
    ParamConstraintViolation,
    PolynomialNotSquarefree,
    RootsNotDistinct,
    SplittingFieldTooLarge,
)
from tgrs.gf import Polynomial, embed
from tgrs.recipes import (
    RECIPE_IDS,
    Recipe,
    construct,
    construct_full,
    random_recipe,
    verify_construction,
    verify_recipe,
)
from tgrs.worked import example_recipe, load_example, recipe_agrees


@pytest.mark.parametrize("rid", RECIPE_IDS)
def test_example_parameters_verify(rid):
    rep = verify_recipe(example_recipe(rid))
    assert rep.self_orthogonal


@pytest.mark.parametrize("rid", RECIPE_IDS)
def test_recipe_matches_bundled_data(rid):
    assert recipe_agrees(rid) == []


@pytest.mark.parametrize("rid", RECIPE_IDS)
def test_random_parameters(rid):
    rng = np.random.default_rng(sum(map(ord, rid)))
    reps = 2 if rid == "block2" else 6
    for _ in range(reps):
        con = random_recipe(rid, rng)
        inst, claims = con.instance, con.claims
        rep = verify_construction(con)
        assert gram_is_zero(inst)
        assert (inst.n, inst.k) == (claims.n, claims.k)
        if claims.d_min is not None:
            assert rep.d >= claims.d_min
        if claims.self_dual:
            assert inst.n == 2 * inst.k and rep.hull_dim == inst.k
        # every root of g is an evaluation point, exactly once
        lift = embed(con.roots[0].field, inst.field)
        assert sorted(a.value for a in inst.eval.alpha) == sorted(lift(r).value for r in con.roots)
        if 2 * inst.k <= inst.n:
            assert check_so(inst).verdict


def test_provenance_round_trip():
    con = construct_full(example_recipe("block1"))
    obj = con.to_json()
    prov = obj["provenance"]
    assert prov["recipe"] == "block1"
    assert prov["g"]["text"] == "x^8 + x"
    assert len(obj["alpha"]) == 8
    assert Recipe.from_json(example_recipe("block1").to_json()) == example_recipe("block1")


def test_block2_zero_c_rejected():
    params = dict(example_recipe("block2").params, c=0)
    with pytest.raises(ParamConstraintViolation):
        construct(Recipe("block2", params))


def test_line3_needs_minus_two_square():
    # this g splits over GF(125), and 125 = 5 mod 8: -2 is not a square there
    with pytest.raises(ParamConstraintViolation, match="mod 8"):
        construct(Recipe("line3", {"p": 5, "s": 1, "r": 1, "a": [1, 2, 0], "c": 2}))


def test_unknown_recipe():
    with pytest.raises(ParamConstraintViolation):
        Recipe.from_json({"id": "block9", "params": {}})


def test_polynomial_failures():
    # block6 needs b != a^2 / 2; a = 1, b = 2 gives a^2/2 = 2 in GF(3)
    with pytest.raises(ParamConstraintViolation):
        construct(Recipe("block6", {"p": 3, "s": 1, "r": 1, "a": 1, "b": 2, "c": 2}))
    rng = np.random.default_rng(0)
    errors = set()
    for _ in range(300):
        a = [int(x) for x in rng.integers(0, 3, 6)]
        try:
            construct(Recipe("line4", {"p": 3, "s": 1, "r": 1, "a": a}))
        except (RootsNotDistinct, PolynomialNotSquarefree, SplittingFieldTooLarge, ParamConstraintViolation) as e:
            errors.add(type(e).__name__)
    assert "RootsNotDistinct" in errors


def test_search_mode_fills_missing_coefficient():
    params = dict(example_recipe("block5").params)
    params.pop("c")
    con = construct_full(Recipe("block5", dict(params, search=True)))
    verify_construction(con)
    assert "c" in con.coefficients


def test_claim_violation_detected():
    con = construct_full(example_recipe("block3"))
    con.claims.d_min = con.instance.n  # impossible promise
    with pytest.raises(ClaimViolated):
        verify_construction(con)


def test_line3_example_twist_outside_quadratic_subfield():
    """The example twist lies in GF(7^4) but not in GF(7^2); the code is still fine."""
    (case,) = load_example("line3")
    inst = case.instance
    eta = inst.twist.entries[-1]
    assert eta.to_json() == "b^492"
    assert eta**49 != eta  # not fixed by the Frobenius of GF(49)
    assert gram_is_zero(inst)
    rep = classify(inst.code())
    assert (rep.n, rep.k, rep.d, rep.dual_d) == (7, 3, 5, 4)
    # the recipe route uses eta = 1, inside GF(49), and gives the same parameters
    con = construct_full(example_recipe("line3"))
    assert gram_is_zero(con.instance) and min_distance(con.instance.code()) == 5


def test_block6_polynomial():
    con = construct_full(example_recipe("block6"))
    assert con.provenance()["g"]["text"] == "x^6 + x^5 + x^4 + 2"
    g = Polynomial(con.g.field, [c.value for c in con.g.coeffs])
    assert g.degree == 6
