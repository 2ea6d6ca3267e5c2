"""Property suites over random inputs."""

import random

import pytest
import sympy
from conftest import CORPUS, ar, poly
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from freesurf.classify import bourbaki_h, dependence_relation, kernel_vs_image
from freesurf.classify.report import classify_surface
from freesurf.classify.tameness import minors_gcd_test
from freesurf.groebner import GradedSubmodule, SyzVector
from freesurf.jacobian import (
    InadmissibleSurface,
    ar_dim_oracle,
    ar_module,
    bridge_residual,
    build_surface,
    select_pairs,
)
from freesurf.polyring import (
    QQ,
    ExactMatrix,
    FieldSpec,
    Poly,
    det,
    det_bareiss,
    grevlex_key,
    monomial_basis,
    parse_polynomial,
    partials,
    poly_gcd,
)

GF = FieldSpec.prime(101)
FIELDS = st.sampled_from([QQ, GF])
PROP = settings(deadline=None, derandomize=True, suppress_health_check=[HealthCheck.too_slow])


@st.composite
def homogeneous(draw, field=QQ, degree=None, max_terms=6):
    d = draw(st.integers(0, 6)) if degree is None else degree
    basis = monomial_basis(d)
    mons = draw(st.lists(st.sampled_from(basis), min_size=1, max_size=max_terms, unique=True))
    coeffs = draw(st.lists(st.integers(-20, 20).filter(bool), min_size=len(mons), max_size=len(mons)))
    return Poly({m: field(c) for m, c in zip(mons, coeffs)}, field)


@settings(PROP, max_examples=100)
@given(st.data())
def test_euler_identity(data):
    field = data.draw(FIELDS)
    f = data.draw(homogeneous(field))
    d = f.degree()
    total = Poly.zero(field)
    for i, p in enumerate(partials(f)):
        total = total + Poly.var(i, field) * p
    assert total == f.scale(field(d))


@settings(PROP, max_examples=60)
@given(st.data())
def test_det_alternating_and_matches_bareiss(data):
    n = data.draw(st.integers(2, 4))
    rows = [[data.draw(homogeneous(QQ, degree=1, max_terms=3)) for _ in range(n)] for _ in range(n)]
    i, j = data.draw(st.sampled_from([(a, b) for a in range(n) for b in range(a + 1, n)]))
    swapped = list(rows)
    swapped[i], swapped[j] = swapped[j], swapped[i]
    d = det(rows)
    assert det(swapped) == -d
    assert det_bareiss(rows) == d
    c = data.draw(homogeneous(QQ, degree=1, max_terms=2))
    scaled = [list(r) for r in rows]
    scaled[0] = [e * c for e in scaled[0]]
    assert det(scaled) == d * c


@settings(PROP, max_examples=60)
@given(st.data())
def test_gcd_properties(data):
    field = data.draw(FIELDS)
    g = data.draw(homogeneous(field, degree=data.draw(st.integers(0, 2)), max_terms=3))
    a = data.draw(homogeneous(field, degree=data.draw(st.integers(0, 3)), max_terms=3)) * g
    b = data.draw(homogeneous(field, degree=data.draw(st.integers(0, 3)), max_terms=3)) * g
    h = poly_gcd(a, b)
    qa, qb = a.exact_div(h), b.exact_div(h)
    assert qa * h == a and qb * h == b
    assert poly_gcd(qa, qb).is_constant()
    assert a.exact_div(g) * g == a and h.exact_div(g.monic()) is not None


@settings(PROP, max_examples=80)
@given(st.data())
def test_parse_print_identity(data):
    field = data.draw(FIELDS)
    f = data.draw(homogeneous(field))
    assert parse_polynomial(str(f), field) == f


@settings(PROP, max_examples=200)
@given(st.data())
def test_rank_nullity(data):
    field = data.draw(FIELDS)
    r, c = data.draw(st.integers(0, 6)), data.draw(st.integers(1, 7))
    rows = [[field(data.draw(st.integers(-3, 3))) for _ in range(c)] for _ in range(r)]
    m = ExactMatrix(rows, field, c)
    ker = m.kernel_basis()
    assert m.rank() + len(ker) == c
    assert all(all(x == 0 for x in m.apply(v)) for v in ker)
    assert ExactMatrix(ker, field, c).rank() == len(ker) if ker else True


@settings(PROP, max_examples=100)
@given(st.data())
def test_grevlex_is_multiplicative(data):
    k = data.draw(st.integers(0, 4))
    u, v = data.draw(st.sampled_from(monomial_basis(k))), data.draw(st.sampled_from(monomial_basis(k)))
    w = data.draw(st.sampled_from(monomial_basis(data.draw(st.integers(0, 3)))))
    uw = tuple(a + b for a, b in zip(u, w))
    vw = tuple(a + b for a, b in zip(v, w))
    if grevlex_key(u) < grevlex_key(v):
        assert grevlex_key(uw) < grevlex_key(vw)
    assert grevlex_key((0, 0, 0, 0)) <= grevlex_key(u)


def random_element(a, rng):
    """A random homogeneous element of AR(f) built from its minimal generators."""
    d = rng.choice(a.degrees) + rng.randint(0, 1)
    out = SyzVector.zero(4, a.surface.field)
    for g, dg in zip(a.min_gens, a.degrees):
        if dg <= d and rng.random() < 0.6:
            basis = monomial_basis(d - dg)
            mons = rng.sample(basis, min(2, len(basis)))
            out = out + g * Poly({m: rng.choice([-3, -2, -1, 1, 2, 3]) for m in mons})
    return out


def exact(q):
    return sympy.Rational(int(q.numerator), int(q.denominator))


@pytest.mark.parametrize("name", list(CORPUS))
def test_saito_divisibility(name):
    a, f = ar(name), poly(name)
    rng = random.Random(2024)
    for _ in range(50):
        triple = [random_element(a, rng) for _ in range(3)]
        h = bourbaki_h(f, *triple)
        # oracle: exact determinant of the evaluated matrix at random integer points
        for _ in range(2):
            pt = [rng.randint(-5, 5) for _ in range(4)]
            rows = [pt] + [[exact(c.evaluate(pt)) for c in r] for r in triple]
            assert sympy.Matrix(rows).det() == exact(h.evaluate(pt)) * exact(f.evaluate(pt))


@pytest.mark.parametrize("name", ["ex2.8i", "ex2.8ii", "nearly-free-quartic"])
def test_random_pair_certificates_sound(name):
    a, f = ar(name), poly(name)
    for seed in range(6):
        for pair in select_pairs(a, seed=seed, budget=2):
            if minors_gcd_test(pair.rho1, pair.rho2):
                continue
            chk = kernel_vs_image(f, pair.rho1, pair.rho2, a)
            if chk.exact:
                continue
            w = chk.witness
            assert w.holds(pair.rho1, pair.rho2) and w.c.degree() > 0
            assert not GradedSubmodule([pair.rho1, pair.rho2], 4).contains(w.rho)
            assert dependence_relation(pair.rho1, pair.rho2, w.rho) is not None


@st.composite
def sparse_quartic(draw):
    basis = monomial_basis(draw(st.sampled_from([3, 4])))
    mons = draw(st.lists(st.sampled_from(basis), min_size=2, max_size=5, unique=True))
    return Poly({m: QQ(draw(st.sampled_from([-2, -1, 1, 2, 3]))) for m in mons})


@settings(PROP, max_examples=40)
@given(sparse_quartic())
def test_random_surfaces_consistent(f):
    try:
        s = build_surface(f)
    except InadmissibleSurface:
        return
    a = ar_module(s)
    d = s.d
    for k in range(0, a.e3 + 3):
        assert a.dim(k) == ar_dim_oracle(f, k)
    assert all(bridge_residual(a, k) == 0 for k in range(d - 4, 2 * d + 1))
    rep = classify_surface(f)
    assert [c["name"] for c in rep.checks if c["applicable"] and not c["pass"]] == []
    again = type(rep).from_json(rep.to_json())
    assert again == rep
