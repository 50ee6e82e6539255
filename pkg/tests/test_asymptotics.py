from fractions import Fraction

import pytest

from hexpoly import asymptotics as asy
from hexpoly import columndp, temperley
from hexpoly.exactalg import UniRat, peval, series
from reference_data import ASYMPTOTICS, CC_GF, L1_GF, column

MODELS = ("CC", "L1", "L2", "L3")


@pytest.fixture(scope="module")
def profiles():
    return {m: asy.profile(temperley.area_gf(m)) for m in MODELS}


def test_root_of_cc_denominator():
    r = asy.dominant_root(CC_GF[1], Fraction(1, 10**12))
    assert r.width <= Fraction(1, 10**12)
    assert r.digits(4) == "0.2588"
    assert (1 / r.hi).__float__() == pytest.approx(3.8631, abs=1e-4)


def test_root_of_l1_denominator():
    r = asy.dominant_root(L1_GF[1])
    assert r.digits(4) == "0.2430"
    assert 1 / float(r.mid) == pytest.approx(4.1149, abs=1e-4)


def test_dyadic_root_is_exact():
    r = asy.dominant_root((1, -2))
    assert r.lo == r.hi == Fraction(1, 2)


def test_root_brackets_sign_change():
    for m in ("CC", "L1", "L2", "L3"):
        den = temperley.area_gf(m).den
        r = asy.dominant_root(den)
        assert peval(den, r.lo) * peval(den, r.hi) <= 0


@pytest.mark.parametrize(
    "den",
    [
        (0, 1),          # vanishes at 0
        (3,),            # no singularity
        (1, 0, 1),       # only complex roots of modulus 1
        (1, 2),          # only a negative root
        (1, -2, 1),      # double root
        (1, 1, 0, 0, 4), # complex pair closer than the positive root, if any
    ],
)
def test_unsupported(den):
    with pytest.raises(asy.UnsupportedSingularity):
        asy.dominant_root(den)


def test_geometric_amplitude():
    prof = asy.profile(UniRat((1,), (1, -2)))
    assert prof.growth.lo == prof.growth.hi == 2
    assert prof.amplitude.lo == prof.amplitude.hi == 1


@pytest.mark.parametrize("model", MODELS)
def test_published_constants(profiles, model):
    growth, amp = ASYMPTOTICS[model]
    prof = profiles[model]
    assert prof.growth.digits(6) == growth
    assert prof.amplitude.digits(6) == amp
    assert prof.max_width <= Fraction(1, 10**9)
    assert prof.multiplicity == 1


def test_partial_fraction_value(profiles):
    # residue of the CC generating function at its root
    prof = profiles["CC"]
    a = -prof.amplitude * prof.r1
    assert float(a) == pytest.approx(-0.0487, abs=1e-4)


def test_growth_ordering(profiles):
    g = [profiles[m].growth for m in MODELS]
    assert all(x.hi < y.lo for x, y in zip(g, g[1:]))


@pytest.mark.parametrize("model", MODELS)
@pytest.mark.parametrize("n,tol", [(40, 0.01), (60, 0.002)])
def test_coefficient_ratio(profiles, model, n, tol):
    prof = profiles[model]
    c = series(temperley.area_gf(model), n)[n]
    approx = float(prof.amplitude) * float(prof.growth) ** n
    assert abs(float(c) / approx - 1) < tol


def test_as_dict_truncates(profiles):
    d = profiles["L2"].as_dict()
    assert d["growth"] == "4.231836" and d["amplitude"] == "0.121042"


def test_interval_digits_truncate():
    assert asy.Interval(Fraction(19999999, 10**7), Fraction(2)).digits(6) == "1.999999"
    assert asy.Interval.point(Fraction(-1, 8)).digits(3) == "-0.125"


def test_interval_division_by_zero():
    with pytest.raises(asy.PrecisionError):
        asy.Interval(Fraction(-1), Fraction(1)).__rtruediv__(1)


def test_sturm_counts():
    p = (-6, 11, -6, 1)  # (x-1)(x-2)(x-3)
    seq = asy.sturm_sequence(p)
    assert asy.count_roots(seq, 0, 10) == 3
    assert asy.count_roots(seq, Fraction(3, 2), Fraction(5, 2)) == 1
    sf = asy.squarefree((1, -2, 1))
    assert len(sf) == 2 and peval(sf, 1) == 0


def test_graeffe_squares_roots():
    # roots 1 and 2 -> 1 and 4
    g = asy.graeffe((2, -3, 1))
    assert peval(g, 1) == 0 and peval(g, 4) == 0


def test_pellet():
    assert asy.certify_single_root_disk((1, -6, 10, -7, 1), Fraction(1, 2))
    assert not asy.certify_single_root_disk((1, 0, 1), Fraction(2))


def test_empirical_growth():
    assert asy.empirical_growth([1, 2, 4, 8]) == [2.0, 2.0, 2.0]
    assert asy.empirical_growth(column("cc"))[-1] == pytest.approx(3.863, abs=1e-3)
    ratios = asy.empirical_growth(columndp.count(1, 40))
    assert abs(ratios[-1] - 4.1149) < abs(ratios[10] - 4.1149)
    with pytest.raises(ValueError):
        asy.empirical_growth([1, 2])
    with pytest.raises(ValueError):
        asy.empirical_growth([1, 0, 2])


def test_extrapolate_published_inputs():
    assert asy.extrapolate([3.863, 4.115, 4.232, 4.289]) == pytest.approx(4.346, abs=5e-4)


def test_extrapolate_exact_geometric():
    assert asy.extrapolate([1, 1.5, 1.75]) == pytest.approx(2.0)
    limit, ratio = asy.extrapolate_fitted([1, 1.5, 1.75])
    assert limit == pytest.approx(2.0) and ratio == pytest.approx(0.5)


@pytest.mark.parametrize("bad", [[1, 2], [1, 2, 2], [3, 2, 1]])
def test_extrapolate_errors(bad):
    with pytest.raises(ValueError):
        asy.extrapolate(bad)


def test_extrapolate_from_dp_estimates():
    growths = [asy.empirical_growth(columndp.count(m, 40))[-1] for m in range(1, 6)]
    assert growths == sorted(growths)
    assert 4.289 < asy.extrapolate(growths) < 4.6
