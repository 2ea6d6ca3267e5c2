"""Colon ideals by a variable, intersections and saturation by m = (x, y, z, w)."""

from __future__ import annotations

from ..polyring import Poly
from .engine import GBEngine
from .modules import GradedIdeal, pack_poly, unpack
from .orders import TermOrder


def _strip_power(p: Poly, var: int) -> Poly:
    k = min(e[var] for e in p.terms)
    if not k:
        return p
    out = {}
    for e, c in p.terms.items():
        e2 = list(e)
        e2[var] -= k
        out[tuple(e2)] = c
    return Poly(out, p.field, p.nvars, _clean=True)


def _embed(p: Poly, nvars: int) -> Poly:
    return Poly({e + (0,) * (nvars - p.nvars): c for e, c in p.terms.items()},
                p.field, nvars, _clean=True)


def _drop_last(p: Poly) -> Poly:
    return Poly({e[:-1]: c for e, c in p.terms.items()}, p.field, p.nvars - 1, _clean=True)


def colon_var_grevlex(ideal: GradedIdeal, var: int) -> GradedIdeal:
    """I : v^inf from a grevlex basis with ``var`` last, dividing out powers of ``var``."""
    n = ideal.nvars
    perm = [i for i in range(n) if i != var] + [var]
    moved = GradedIdeal(ideal.gens, ideal.field, n, perm=perm)
    return GradedIdeal([_strip_power(g, var) for g in moved.gb], ideal.field, n)


def colon_var_elim(ideal: GradedIdeal, var: int) -> GradedIdeal:
    """I : v^inf = (I + (1 - t v)) intersected with S, with t eliminated."""
    n = ideal.nvars
    field = ideal.field
    order = TermOrder(n + 1, "elim", elim_vars=(n,))
    t = Poly.var(n, field, n + 1)
    v = Poly.var(var, field, n + 1)
    gens = [_embed(g, n + 1) for g in ideal.gens] + [Poly.constant(1, field, n + 1) - t * v]
    eng = GBEngine(order, field, homogeneous=False)
    basis = eng.run([pack_poly(g, order) for g in gens])
    keep = []
    for d in basis:
        (p,) = unpack(d, order, field, nvars=n + 1)
        if all(e[n] == 0 for e in p.terms):
            keep.append(_drop_last(p))
    return GradedIdeal(keep, field, n)


def intersect(a: GradedIdeal, b: GradedIdeal) -> GradedIdeal:
    """I cap J = (t I + (1 - t) J) cap S, with t of weight 0 so everything stays graded."""
    n = a.nvars
    field = a.field
    order = TermOrder(n + 1, "elim", weights=(1,) * n + (0,), elim_vars=(n,))
    t = Poly.var(n, field, n + 1)
    one_minus_t = Poly.constant(1, field, n + 1) - t
    gens = [t * _embed(g, n + 1) for g in a.gens] + [one_minus_t * _embed(g, n + 1) for g in b.gens]
    eng = GBEngine(order, field, homogeneous=True)
    basis = eng.run([pack_poly(g, order) for g in gens if g])
    keep = []
    for d in basis:
        (p,) = unpack(d, order, field, nvars=n + 1)
        if all(e[n] == 0 for e in p.terms):
            keep.append(_drop_last(p))
    return GradedIdeal(keep, field, n)


def saturate_wrt_variable(ideal: GradedIdeal, var: int, method="grevlex") -> GradedIdeal:
    if method == "grevlex":
        return colon_var_grevlex(ideal, var)
    if method == "elim":
        return colon_var_elim(ideal, var)
    raise ValueError(f"unknown colon method {method!r}")


def saturate_max_ideal(ideal: GradedIdeal, method="grevlex") -> GradedIdeal:
    """I : m^inf as the intersection of the saturations by each variable."""
    result = None
    for v in range(ideal.nvars):
        col = saturate_wrt_variable(ideal, v, method)
        result = col if result is None else intersect(result, col)
    return result


def ideals_equal(a: GradedIdeal, b: GradedIdeal) -> bool:
    return all(b.contains(g) for g in a.gens) and all(a.contains(g) for g in b.gens)
