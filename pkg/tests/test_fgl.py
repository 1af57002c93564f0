"""Formal group law data: sum series, inverses, kernels, kappa."""

import pytest

from schubfgl.fgl import (
    ADDITIVE,
    FglSpec,
    HYPERBOLIC,
    LORENTZ,
    MULTIPLICATIVE,
    diff_kernel,
    diff_kernel_series_check,
    fgl_sum_series,
    formal_inverse,
    inverse_series_check,
    kappa_of,
)
from schubfgl.polycore import Poly

ALL = (ADDITIVE, MULTIPLICATIVE, HYPERBOLIC, LORENTZ)


def test_sum_series_additive():
    assert fgl_sum_series(ADDITIVE, 5) == Poly.variable(2, 1) + Poly.variable(2, 2)


def test_sum_series_hyperbolic_low_order():
    f = fgl_sum_series(HYPERBOLIC, 4)
    assert f.coefficient((1, 0)) == 1
    assert f.coefficient((0, 1)) == 1
    assert f.coefficient((1, 1), (1, 0)) == -1
    # the degree-3 m2 terms are negative: the rational form
    # (x + y - m1 xy) / (1 + m2 xy) forces it, and so does the
    # degree-4 coefficient below (a positive quadratic term would
    # flip its sign)
    assert f.coefficient((2, 1), (0, 1)) == -1
    assert f.coefficient((1, 2), (0, 1)) == -1
    assert f.coefficient((2, 2), (1, 1)) == 1


def test_sum_series_matches_rational_form():
    for spec in ALL:
        for cap in (4, 8):
            f = fgl_sum_series(spec, cap)
            denom = Poly.one(2) + Poly.monomial(2, (1, 1), (0, 1))
            num = (
                Poly.variable(2, 1)
                + Poly.variable(2, 2)
                - Poly.monomial(2, (1, 1), (1, 0))
            )
            lhs = (spec.specialize(denom) * f).truncate(cap)
            assert lhs == spec.specialize(num).truncate(cap)


def test_sum_series_symmetric_and_unital():
    for spec in ALL:
        f = fgl_sum_series(spec, 7)
        assert f.sigma(1) == f
        x_only = Poly(2, {k: c for k, c in f.terms.items() if k[0][1] == 0})
        assert x_only == Poly.variable(2, 1)


def test_formal_inverse_pinned():
    assert formal_inverse(ADDITIVE, 6) == -Poly.variable(1, 1)
    assert formal_inverse(LORENTZ, 6) == -Poly.variable(1, 1)
    chi = formal_inverse(HYPERBOLIC, 3)
    expected = (
        -Poly.variable(1, 1)
        - Poly.monomial(1, (2,), (1, 0))
        - Poly.monomial(1, (3,), (2, 0))
    )
    assert chi == expected


def test_formal_inverse_satisfies_defining_identity():
    # x + chi - m1 x chi == 0 is F(x, chi(x)) = 0 with the unit
    # denominator cleared
    for spec in ALL:
        cap = 9
        chi = formal_inverse(spec, cap).inject_vars(1, (1,))
        x = Poly.variable(1, 1)
        lhs = (x + chi - spec.specialize((x * chi).mul_mu(1, 0))).truncate(cap)
        assert lhs.is_zero
        assert inverse_series_check(spec, 10)


def test_diff_kernel_closed_forms():
    x, y = Poly.variable(2, 1), Poly.variable(2, 2)
    assert diff_kernel(ADDITIVE) == Poly.one(2)
    assert diff_kernel(MULTIPLICATIVE) == Poly.one(2) - y.mul_mu(1, 0)
    assert diff_kernel(HYPERBOLIC) == Poly.one(2) - y.mul_mu(1, 0) - (x * y).mul_mu(0, 1)
    assert diff_kernel(LORENTZ) == Poly.one(2) - (x * y).mul_mu(0, 1)


def test_diff_kernel_series_selfcheck_cap10():
    for spec in ALL:
        assert diff_kernel_series_check(spec, 10)


def test_kappa_table():
    assert kappa_of(ADDITIVE).is_zero
    assert kappa_of(LORENTZ).is_zero
    mu1 = Poly.const(0, 1, (1, 0))
    assert kappa_of(MULTIPLICATIVE) == mu1
    assert kappa_of(HYPERBOLIC) == mu1


def test_degenerations_are_specializations():
    cap = 7
    hyper = fgl_sum_series(HYPERBOLIC, cap)
    assert hyper.specialize_mu(mu2=0) == fgl_sum_series(MULTIPLICATIVE, cap)
    assert hyper.specialize_mu(mu1=0) == fgl_sum_series(LORENTZ, cap)
    assert hyper.specialize_mu(mu1=0, mu2=0) == fgl_sum_series(ADDITIVE, cap)
    assert diff_kernel(HYPERBOLIC).specialize_mu(mu2=0) == diff_kernel(MULTIPLICATIVE)
    assert diff_kernel(HYPERBOLIC).specialize_mu(mu1=0) == diff_kernel(LORENTZ)


def test_integer_specializations():
    spec = FglSpec("hyperbolic", 2, 3)
    f = fgl_sum_series(spec, 5)
    sym = fgl_sum_series(HYPERBOLIC, 5).specialize_mu(mu1=2, mu2=3)
    assert f == sym
    assert diff_kernel_series_check(spec, 8)
    assert inverse_series_check(spec, 8)


def test_kind_constraints():
    with pytest.raises(ValueError):
        FglSpec("additive", mu1=1)
    with pytest.raises(ValueError):
        FglSpec("multiplicative", mu2=2)
    with pytest.raises(ValueError):
        FglSpec("lorentz", mu1=3)
    with pytest.raises(ValueError):
        FglSpec("elliptic")


def test_labels():
    assert HYPERBOLIC.label() == "hyperbolic"
    assert FglSpec("hyperbolic", 2, None).label() == "hyperbolic,mu1=2"
