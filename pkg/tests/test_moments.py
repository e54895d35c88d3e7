"""Exact distribution summaries, closed forms, and quotient presets."""

from fractions import Fraction

import pytest

from qcatalan.moments import (
    QuotientSpec,
    catalan_moments_closed,
    central_moment,
    dist_summary,
    general_moments_closed,
    preset,
)
from qcatalan.polyq import (
    IntPoly,
    q_catalan,
    q_catalan_general,
    q_catalan_second,
    quotient_poly,
)


def test_spec_validation():
    with pytest.raises(ValueError):
        QuotientSpec(a=(1, 2), b=(1,))
    with pytest.raises(ValueError):
        QuotientSpec(a=(0,), b=(1,))
    with pytest.raises(ValueError):
        QuotientSpec(a=(2,), b=(-3,))
    s = QuotientSpec(a=[4], b=[2], label="x")
    assert s.a == (4,) and s.b == (2,) and s.label == "x"


def test_dist_summary_examples():
    s = dist_summary(q_catalan(3))
    assert (s.mass, s.mean, s.variance, s.degree) == (5, 3, 4, 6)
    assert s.sigma == 2.0
    s = dist_summary(IntPoly([1]))
    assert (s.mass, s.mean, s.variance) == (1, 0, 0)
    s = dist_summary(IntPoly([1, 0, 1]))
    assert (s.mass, s.mean, s.variance) == (2, 1, 1)


def test_dist_summary_rejects():
    with pytest.raises(ValueError):
        dist_summary(IntPoly([]))
    with pytest.raises(ValueError):
        dist_summary(IntPoly([1, -1, 1]))


def test_mean_bounds_and_palindromic_mean():
    for n in range(2, 12):
        p = q_catalan(n)
        s = dist_summary(p)
        assert 0 <= s.mean <= s.degree
        assert s.mean == Fraction(s.degree, 2)


def test_catalan_closed():
    assert catalan_moments_closed(1) == (0, 0)
    assert catalan_moments_closed(2) == (1, 1)
    assert catalan_moments_closed(3) == (3, 4)
    with pytest.raises(ValueError):
        catalan_moments_closed(0)


def test_catalan_closed_matches_summary():
    for n in range(1, 21):
        s = dist_summary(q_catalan(n))
        assert (s.mean, s.variance) == catalan_moments_closed(n)


def test_general_closed():
    assert general_moments_closed(preset("catalan", 3)) == (3, 4)
    assert general_moments_closed(QuotientSpec(a=(5, 7), b=(5, 7))) == (0, 0)
    mean, var = general_moments_closed(preset("mcatalan", 2, 3))
    assert (mean, var) == (2, Fraction(8, 3))
    s = dist_summary(IntPoly([1, 0, 1, 0, 1]))
    assert (s.mean, s.variance) == (mean, var)


def test_central_moments():
    p = q_catalan(3)
    assert central_moment(p, 1) == 0
    assert central_moment(p, 2) == dist_summary(p).variance
    assert central_moment(p, 4) == Fraction(164, 5)
    for r in (3, 5, 7):
        assert central_moment(q_catalan(5), r) == 0
    with pytest.raises(ValueError):
        central_moment(p, 0)
    with pytest.raises(ValueError):
        central_moment(p, 9)
    with pytest.raises(ValueError):
        central_moment(IntPoly([]), 2)


def test_kurtosis_moves_toward_three():
    def kurt(n):
        p = q_catalan(n)
        s = dist_summary(p)
        return float(central_moment(p, 4) / s.variance ** 2)

    assert abs(kurt(20) - 3) < abs(kurt(10) - 3)


def test_preset_catalan():
    s = preset("catalan", 3)
    assert s.a == (5, 6) and s.b == (2, 3)
    assert s.label == "catalan(n=3)"
    for n in range(2, 11):
        assert quotient_poly(preset("catalan", n)) == q_catalan(n)


def test_preset_catalan2():
    assert preset("catalan2", 2).a == (2,)
    assert preset("catalan2", 2).b == (1,)
    assert preset("catalan2", 3).a == (5,)
    assert preset("catalan2", 3).b == (1,)
    assert preset("catalan2", 4).a == (6, 7)
    assert preset("catalan2", 4).b == (1, 3)
    # the preset must reproduce the polynomial definition exactly
    for n in range(2, 13):
        assert quotient_poly(preset("catalan2", n)) == q_catalan_second(n)


def test_preset_mcatalan():
    s = preset("mcatalan", 2, 3)
    assert s.a == (6,) and s.b == (2,)
    for n in range(2, 9):
        for m in (2, 3, 5):
            assert quotient_poly(preset("mcatalan", n, m)) == q_catalan_general(n, m)


def test_preset_rejects():
    with pytest.raises(ValueError):
        preset("nope", 5)
    with pytest.raises(ValueError):
        preset("catalan", 1)
    with pytest.raises(ValueError):
        preset("mcatalan", 5)
    with pytest.raises(ValueError):
        preset("mcatalan", 5, 1)
