import random
from fractions import Fraction

import pytest
from conftest import ADMISSIBLE, CORPUS, EXTRA, poly, report, surface

from freesurf.classify.theorems import free_hp, nearly_free_hp
from freesurf.groebner import GradedIdeal, saturate_max_ideal
from freesurf.hilbert import (
    brute_force_hf,
    hilbert_data,
    hilbert_function,
    hilbert_polynomial,
    hilbert_series_quotient,
    jacobian_ideal,
    sigma_dim_deg,
)
from freesurf.polyring import QQ, parse_polynomial, partials

P = parse_polynomial


def test_hilbert_function_examples():
    assert hilbert_function(jacobian_ideal(P("x*y*z*w")), 3) == 16
    assert hilbert_function(jacobian_ideal(poly("ex5.4")), 21) == 81 * 21 - 507 == 1194
    assert hilbert_function(GradedIdeal([P(v) for v in "xyzw"]), 1) == 0


def test_xyzw_hilbert_function_is_linear():
    j = jacobian_ideal(P("x*y*z*w"))
    assert all(hilbert_function(j, k) == 6 * k - 2 for k in range(1, 31))
    assert hilbert_polynomial(j) == (6, -2, 1)


def test_ex54_hilbert_polynomial():
    a, b, stab = hilbert_polynomial(jacobian_ideal(poly("ex5.4")))
    assert (a, b) == (81, -507) and stab <= 21


@pytest.mark.parametrize("f, want", [
    ("x^2+y^2+z^2+w^2", (-1, 0)),
    ("(x^2+y^2+z*w)^4+y^4*z^4", (1, 36)),
    ("x^12+x^11*y+y^11*z+w*(x^10*w+y^10*z)", (1, 81)),
])
def test_sigma_dim_deg(f, want):
    assert sigma_dim_deg(P(f)) == want


def test_sigma_dimension_zero():
    # a cubic surface with isolated singularities has a zero-dimensional singular scheme
    dim, deg = sigma_dim_deg(P("x*y*z + y*z*w + x*z*w + x*y*w"))
    assert dim == 0 and deg == 4


@pytest.mark.parametrize("name", ADMISSIBLE + ["smooth-quadric"])
def test_hilbert_function_agrees_with_brute_force(name):
    f = poly(name)
    gens = [g for g in partials(f) if g]
    hd = surface(name).hilbert
    for k in range(0, f.degree() + 1):
        assert hd.hilbert_function(k) == brute_force_hf(gens, k, QQ)


@pytest.mark.parametrize("name", ADMISSIBLE)
def test_hilbert_polynomial_holds_past_stab_index(name):
    hd = surface(name).hilbert
    for k in range(hd.stab_index, hd.stab_index + 4):
        assert hd.hilbert_function(k) == hd.hp_value(k)
    if hd.stab_index > 0:
        assert hd.hilbert_function(hd.stab_index - 1) != hd.hp_value(hd.stab_index - 1)


@pytest.mark.parametrize("name", ["ex2.8i", "ex2.8ii", "xyzw"])
def test_numerator_invariant_under_shuffle(name):
    gens = [g for g in partials(poly(name)) if g]
    base = hilbert_series_quotient(GradedIdeal(gens))
    random.Random(3).shuffle(gens)
    assert hilbert_series_quotient(GradedIdeal(gens)) == base


@pytest.mark.parametrize("name", ["ex2.8i", "ex5.4"])
def test_numerator_invariant_under_colon_method(name):
    j = surface(name).jacobian
    a = hilbert_series_quotient(saturate_max_ideal(j, "grevlex"))
    b = hilbert_series_quotient(saturate_max_ideal(j, "elim"))
    assert a == b


@pytest.mark.parametrize("name", list(EXTRA) + ["xyzw"])
def test_free_and_nearly_free_coefficient_formulas(name):
    rep = report(name)
    cls = rep.classification
    d = rep.input["degree"]
    if cls["status"] == "Free":
        want = free_hp(cls["exponents"])
    else:
        assert cls["status"] == "NearlyFree"
        want = nearly_free_hp(cls["exponents"], d)
    # compare against brute-force ranks at two large degrees
    gens = [g for g in partials(poly(name)) if g]
    k0 = rep.hilbert["stab_index"] + 1
    v0, v1 = brute_force_hf(gens, k0, QQ), brute_force_hf(gens, k0 + 1, QQ)
    assert (Fraction(v1 - v0), Fraction(v0 - (v1 - v0) * k0)) == want


def test_free_formula_on_xyzw_value():
    assert free_hp((1, 1, 1)) == (6, -2)


def test_hilbert_data_of_corpus_entries_are_consistent():
    for name in CORPUS:
        hd = hilbert_data(surface(name).jacobian)
        if hd.proj_dim_sigma == 1:
            assert hd.deg_sigma == hd.a
