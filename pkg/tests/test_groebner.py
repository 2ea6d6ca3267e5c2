import random

import pytest
import sympy
from conftest import ADMISSIBLE, ar, poly, surface

from freesurf.groebner import (
    GradedIdeal,
    GradedSubmodule,
    SyzVector,
    colon_var_elim,
    colon_var_grevlex,
    groebner,
    ideals_equal,
    minimal_generators,
    module_membership,
    saturate_max_ideal,
    saturate_wrt_variable,
    syzygy_generators,
)
from freesurf.polyring import QQ, Poly, binom3, parse_polynomial, partials

P = parse_polynomial
X, Y, Z, W = sympy.symbols("x y z w")


def as_set(gb):
    return {str(g) for g in gb}


def test_principal_and_reduced_examples():
    assert as_set(groebner([P("x^3")])) == {"x^3"}
    assert as_set(groebner([P("x"), P("y")])) == {"x", "y"}
    assert groebner([]) == []


@pytest.mark.parametrize("gens", [
    ["x^2+y*z", "x*y-w^2"],
    ["x^3-y*z*w", "y^3-x*z^2", "x*y*z-w^3"],
    ["x*w+y^2", "y*z^2-x^3", "z^3-w^3"],
])
def test_groebner_agrees_with_sympy(gens):
    ours = groebner([P(g) for g in gens])
    theirs = sympy.groebner([sympy.sympify(g.replace("^", "**")) for g in gens], X, Y, Z, W,
                            order="grevlex")
    theirs = {sympy.Poly(g, X, Y, Z, W) for g in theirs.exprs}
    theirs = {(g * (1 / g.LC(order="grevlex"))).as_expr() for g in theirs}
    ours = {sympy.expand(sympy.sympify(str(g).replace("^", "**"))) for g in ours}
    assert ours == {sympy.expand(t) for t in theirs}


@pytest.mark.parametrize("name", ADMISSIBLE)
def test_gb_unique_under_shuffle(name):
    gens = [g for g in partials(poly(name)) if g]
    base = as_set(groebner(gens))
    rng = random.Random(1)
    for _ in range(3):
        rng.shuffle(gens)
        assert as_set(groebner(gens)) == base


def test_koszul_syzygy():
    (g,) = syzygy_generators([P("x"), P("y")]).generators
    assert g == SyzVector([P("-y"), P("x")]) or g == SyzVector([P("y"), P("-x")])


@pytest.mark.parametrize("name", ADMISSIBLE)
def test_syzygies_of_partials_vanish(name):
    parts = partials(poly(name))
    for g in syzygy_generators(list(parts)).generators:
        assert g.dot(parts).is_zero()


def test_minimal_generators_drop_redundant():
    gens, degs = minimal_generators(GradedIdeal([P("x"), P("x^2")]))
    assert degs == [1] and gens[0][0] == P("x")


@pytest.mark.parametrize("name", ["ex2.8i", "ex2.8ii", "xyzw"])
def test_minimal_degrees_stable_under_generating_set(name):
    a = ar(name)
    from_gb, degs = minimal_generators(a.module, candidates=a.module.gb)
    assert degs == a.degrees
    extra = list(a.min_gens) + [a.min_gens[0] * P("x+y"), a.min_gens[-1] * P("z")]
    _, degs2 = minimal_generators(a.module, candidates=sorted(extra, key=lambda v: v.degree))
    assert degs2 == a.degrees


def test_membership_examples():
    m = GradedSubmodule([SyzVector([P("x"), P("y")]), SyzVector([P("z"), P("w")])], 2)
    for g in m.generators:
        ok, coeffs = module_membership(g, m)
        assert ok
    ok, coeffs = module_membership(SyzVector([Poly.zero(), Poly.zero()]), m)
    assert ok and all(c.is_zero() for c in coeffs)
    v = SyzVector([P("x*y+z^2"), P("y^2+z*w")])
    ok, coeffs = module_membership(v, m)
    assert ok
    total = SyzVector.zero(2)
    for c, g in zip(coeffs, m.generators):
        total = total + g * c
    assert total == v
    assert not module_membership(SyzVector([P("x"), Poly.zero()]), m)[0]


def two_var(*monos):
    return GradedIdeal([Poly({e: 1}, QQ, 2) for e in monos], QQ, nvars=2)


@pytest.mark.parametrize("method", ["grevlex", "elim"])
def test_saturation_in_the_plane(method):
    # (x^2, xy) in k[x, y] saturates to (x)
    sat = saturate_max_ideal(two_var((2, 0), (1, 1)), method)
    assert ideals_equal(sat, two_var((1, 0)))


@pytest.mark.parametrize("method", ["grevlex", "elim"])
def test_saturation_in_p3(method):
    # in four variables (x^2, xy) = (x) ∩ (x^2, y) has no m-primary component
    i = GradedIdeal([P("x^2"), P("x*y")])
    assert ideals_equal(saturate_max_ideal(i, method), i)
    j = GradedIdeal([P("x^2"), P("x*y"), P("x*z"), P("x*w"), P("y^3")])
    assert ideals_equal(saturate_max_ideal(j, method), GradedIdeal([P("x"), P("y^3")]))


@pytest.mark.parametrize("var", range(4))
def test_colon_methods_agree(var):
    i = GradedIdeal([P("x^2*w"), P("x*y*z"), P("y^3-z*w^2"), P("x*w^2")])
    assert ideals_equal(colon_var_grevlex(i, var), colon_var_elim(i, var))
    assert ideals_equal(saturate_wrt_variable(i, var, "grevlex"), saturate_wrt_variable(i, var, "elim"))


@pytest.mark.parametrize("name", ["ex2.8i", "ex5.4", "xyzw"])
def test_saturation_contains_and_idempotent(name):
    j = surface(name).jacobian
    sat = saturate_max_ideal(j)
    assert all(sat.contains(g) for g in j.gens)
    assert ideals_equal(saturate_max_ideal(sat), sat)


@pytest.mark.parametrize("name", ADMISSIBLE)
def test_jacobian_dims_match_syzygy_count(name):
    # dim (J_f)_k from the leading terms equals 4 C(k-d+4, 3) - ar(f)_{k-d+1}
    from freesurf.jacobian import ar_dim_oracle

    f, s = poly(name), surface(name)
    d = s.d
    for k in range(0, d + 1):
        lhs = binom3(k + 3) - s.hilbert.hilbert_function(k)
        assert lhs == 4 * binom3(k - d + 4) - ar_dim_oracle(f, k - d + 1)
