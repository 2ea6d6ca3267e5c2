"""The map v'(rho) = det M(E, rho1, rho2, rho) / f and its image B(f)."""

from __future__ import annotations

from dataclasses import dataclass

from ..groebner import GradedIdeal, SyzVector
from ..groebner.minimal import minimal_generators
from ..polyring import ExactMatrix, NotDivisible, Poly, det, monomial_basis


class BourbakiNotDivisible(NotDivisible):
    """f does not divide det M(E, rho1, rho2, rho): some row is not a syzygy."""


def euler_vector(field, nvars=4) -> SyzVector:
    return SyzVector([Poly.var(i, field, nvars) for i in range(nvars)])


def saito_matrix(*rows: SyzVector):
    """Rows (E, rows...) as a square matrix of polynomials."""
    field = rows[0].field
    return [list(euler_vector(field))] + [list(r) for r in rows]


def bourbaki_h(f: Poly, rho1: SyzVector, rho2: SyzVector, rho: SyzVector) -> Poly:
    """The h with det M(E, rho1, rho2, rho) = h * f."""
    big = det(saito_matrix(rho1, rho2, rho))
    try:
        return big.exact_div(f)
    except NotDivisible:
        raise BourbakiNotDivisible(
            "f does not divide det M(E, rho1, rho2, rho); an argument is not a syzygy of f"
        ) from None


@dataclass
class BourbakiData:
    ideal: GradedIdeal
    h_values: list
    dim_B1: int
    is_unit_ideal: bool
    min_gens: list
    min_gen_degrees: list


def degree_one_dim(gens, field) -> int:
    """dim_k of the degree-1 part of the ideal generated by homogeneous ``gens``."""
    basis = monomial_basis(1)
    cols = {e: i for i, e in enumerate(basis)}
    rows = []
    for g in gens:
        dg = g.degree()
        if dg == 0:
            return len(basis)
        if dg == 1:
            r = [field.zero] * len(cols)
            for e, c in g.terms.items():
                r[cols[e]] = c
            rows.append(r)
    return ExactMatrix(rows, field, len(cols)).rank() if rows else 0


def bourbaki_ideal(f: Poly, rho1: SyzVector, rho2: SyzVector, ar) -> BourbakiData:
    hs = [bourbaki_h(f, rho1, rho2, g) for g in ar.min_gens]
    nonzero = [h for h in hs if h]
    ideal = GradedIdeal(nonzero, f.field)
    one = Poly.constant(1, f.field)
    gens, degs = minimal_generators(ideal) if nonzero else ([], [])
    return BourbakiData(
        ideal=ideal,
        h_values=hs,
        dim_B1=degree_one_dim(nonzero, f.field),
        is_unit_ideal=bool(nonzero) and ideal.contains(one),
        min_gens=[g[0] for g in gens],
        min_gen_degrees=degs,
    )
