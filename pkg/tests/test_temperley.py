from fractions import Fraction

import pytest

from hexpoly import columndp, temperley
from hexpoly.exactalg import UniRat, q, series, t, u, v
from reference_data import CC_GF, L1_GF, L2_GF, column

POINT = {"q": Fraction(1, 10), "t": Fraction(1, 3)}


def same(f, g, points=4):
    for k in range(points):
        p = {"q": Fraction(1, 7 + k), "t": Fraction(2, 5 + k), "u": Fraction(3, 11 + k), "v": Fraction(1, 4 + k)}
        if f.evaluate(p) != g.evaluate(p):
            return False
    return True


def unit(x):
    return UniRat.const(x)


def test_catalog_models():
    cat = temperley.catalog()
    assert tuple(cat) == temperley.MODELS
    assert [m for m, e in cat.items() if e.derivable] == ["CC", "L1", "L2"]
    assert cat["L2"].unknowns == ["E1", "F0", "F1", "G1", "H1", "I0", "J0"]


def test_cc_constant_term():
    eq = temperley.catalog()["CC"].equations["A"]
    assert same(eq.constant, q * t / (1 - q * t))
    assert [tm.label for tm in eq.terms] == ["S_alpha", "S_beta", "S_gamma"]


def test_l1_coefficient_of_d1():
    eq = temperley.catalog()["L1"].equations["C"]
    assert same(eq.coefficient("D1"), q * t / (1 - q * t) + q**2 * t**3 / (1 - q * t) ** 2)
    assert same(eq.coefficient("C1"), q * t / (1 - q * t) ** 2 - q**2 * t**3 / (1 - q * t) ** 2)


def test_l2_coefficient_of_f0():
    eq = temperley.catalog()["L2"].equations["G"]
    assert same(eq.coefficient("F0"), q**2 * t**4 * u * v / ((1 - q * t * u) * (1 - q * t * v)))
    assert {tm.label for tm in eq.terms} == {"V_alpha", "V_beta"}


def test_l2_first_equation_has_nine_terms():
    eq = temperley.catalog()["L2"].equations["E"]
    assert len(eq.terms) == 9
    assert sorted({tm.label for tm in eq.terms}) == [f"U_{x}" for x in ("alpha", "beta", "delta", "epsilon", "eta", "gamma", "zeta")]


def test_assemble_cc_first_row():
    sys_ = temperley.assemble("CC")
    assert sys_.unknowns == ("A1", "B1")
    a = UniRat((0, 1), (1, -1))
    assert sys_.matrix[0] == (1 - UniRat((0, 1), (1, -2, 1)), -a)
    assert sys_.rhs[0] == a


def test_assemble_l1_first_row():
    sys_ = temperley.assemble("L1")
    a = UniRat((0, 1), (1, -1))
    b = UniRat((0, 1), (1, -2, 1))
    h = UniRat((0, 0, 1), (1, -2, 1))
    assert sys_.matrix[0] == (1 - b + h, -a - h)
    assert sys_.rhs[0] == a


def test_assemble_l2_shape():
    sys_ = temperley.assemble("L2")
    assert len(sys_.matrix) == 7 and all(len(r) == 7 for r in sys_.matrix)
    assert sys_.unknowns == ("E1", "F0", "F1", "G1", "H1", "I0", "J0")


def test_assemble_stored_model_rejected():
    with pytest.raises(ValueError):
        temperley.assemble("L3")
    with pytest.raises(ValueError):
        temperley.assemble("L9")


@pytest.mark.parametrize("model,form", [("CC", CC_GF), ("L1", L1_GF), ("L2", L2_GF)])
def test_area_gf_closed_forms(model, form):
    f = temperley.area_gf(model)
    assert (f.num, f.den) == form


@pytest.mark.parametrize("model,name", [("CC", "cc"), ("L1", "cheesy:1"), ("L2", "cheesy:2"), ("L3", "cheesy:3")])
def test_gf_terms_match_table(model, name):
    assert temperley.gf_terms(model, 12) == column(name)


def test_level3_agrees_with_dp_to_25_terms():
    assert temperley.gf_terms("L3", 25) == columndp.count(3, 25)


def test_height_weighted_dominates():
    sol = temperley.solve("L1")
    c, d = series(sol["C1"], 20), series(sol["D1"], 20)
    assert all(y - x >= 0 for x, y in zip(c, d))
    b, a = series(temperley.solve("CC")["B1"], 20), series(temperley.solve("CC")["A1"], 20)
    assert all(y - x >= 0 for x, y in zip(a, b))


def test_by_products_are_height_sums():
    # B1 = sum of last-column heights, checked against the DP directly
    b = series(temperley.solve("CC")["B1"], 12)
    dp = columndp.last_column_series(0, 12, lambda s: s.height)
    assert b == [Fraction(x) for x in dp]


@pytest.mark.parametrize("model", ["CC", "L1", "L2"])
def test_transcription(model):
    names = temperley.catalog()[model].unknowns
    ks = {n: Fraction(i + 2, 2 * i + 3) for i, n in enumerate(names)}
    pt = {**POINT, "u": Fraction(1, 5), "v": Fraction(2, 7)}
    assert temperley.check_transcription(model, pt, ks)


def test_transcription_catches_a_typo():
    eq = temperley.catalog()["L2"].equations["E"]
    names = temperley.catalog()["L2"].unknowns
    ks = {n: Fraction(i + 2, 2 * i + 3) for i, n in enumerate(names)}
    bumped = {**ks, "G1": ks["G1"] + 1}
    assert eq.rhs_value(POINT, ks) != eq.combined(POINT, bumped)


@pytest.mark.parametrize("model,depth", [("CC", 15), ("L1", 15), ("L2", 12)])
def test_verify_master(model, depth):
    assert temperley.verify_master(model, depth)


def test_verify_master_other_seed():
    assert temperley.verify_master("L2", 10, points=2, seed=7)


def test_verify_master_limits():
    with pytest.raises(ValueError):
        temperley.verify_master("CC", 0)
    with pytest.raises(ValueError):
        temperley.verify_master("L3", 5)


def test_model_for_family():
    assert temperley.model_for_family("cheesy:2") == "L2"
    with pytest.raises(ValueError):
        temperley.model_for_family("all")


def test_solution_json():
    import json

    data = json.loads(temperley.solution_json("CC"))
    assert set(data) == {"A1", "B1"}
    assert data["A1"] == {"num": list(CC_GF[0]), "den": list(CC_GF[1])}
