"""Free and nearly free recognition from the minimal generators of AR(f)."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..groebner import GradedSubmodule, syzygy_generators
from ..groebner.minimal import minimal_generators
from ..polyring import ExactMatrix, Poly, det, monomial_basis
from .bourbaki import saito_matrix

FREE = "Free"
NEARLY_FREE = "NearlyFree"
NEITHER = "Neither"


class InternalInconsistency(AssertionError):
    """Two independent routes disagree; this indicates a bug."""


def symmetric_functions(exps):
    a, b, c = exps
    return a + b + c, a * b + a * c + b * c, a * b * c


@dataclass
class Classification:
    status: str
    exponents: tuple | None = None
    details: dict = field(default_factory=dict)

    @property
    def s(self):
        return symmetric_functions(self.exponents) if self.exponents else (None, None, None)


def saito_constant(f: Poly, gens):
    """c with det M(E, g1, g2, g3) = c f, or None when the quotient is not a constant."""
    big = det(saito_matrix(*gens))
    if not big:
        return None
    from ..polyring import NotDivisible

    try:
        q = big.exact_div(f)
    except NotDivisible:
        return None
    return q.coeff((0, 0, 0, 0)) if q.is_constant() else None


def is_free(f: Poly, ar) -> Classification | None:
    if len(ar.min_gens) != 3:
        return None
    degs = tuple(ar.degrees)
    if sum(degs) != ar.d - 1:
        raise InternalInconsistency(f"three generators of degrees {degs} do not sum to d - 1")
    c = saito_constant(f, ar.min_gens)
    if c is None or not c:
        raise InternalInconsistency("det M(E, g1, g2, g3) is not a nonzero constant multiple of f")
    return Classification(FREE, degs, {"saito_constant": f.field.format(c)})


def _linear_independent(a: Poly, b: Poly) -> bool:
    basis = monomial_basis(1)
    rows = [[p.coeff(e) for e in basis] for p in (a, b)]
    return ExactMatrix(rows, a.field, 4).rank() == 2


@dataclass
class SecondSyzygy:
    count: int
    degree: int | None
    coefficients: list
    coefficient_degrees: list
    linear_forms_independent: bool | None


def second_syzygies(ar) -> SecondSyzygy:
    """Minimal syzygies among the minimal generators of AR(f)."""
    syz = syzygy_generators(ar.min_gens, ar.surface.field)
    mod = GradedSubmodule(syz.generators, len(ar.min_gens), ar.surface.field, shifts=ar.degrees)
    gens, degs = minimal_generators(mod)
    if len(gens) != 1:
        return SecondSyzygy(len(gens), None, [], [], None)
    (rel,) = gens
    coeff_degs = [degs[0] - dg for dg in ar.degrees]
    indep = None
    if len(ar.min_gens) == 4:
        indep = _linear_independent(rel[2], rel[3]) if all(coeff_degs[i] == 1 for i in (2, 3)) else None
    return SecondSyzygy(1, degs[0], list(rel), coeff_degs, indep)


def is_nearly_free(f: Poly, ar, tameness=None, bourbaki=None) -> Classification | None:
    """Nearly free via generator count, degrees and the single second syzygy.

    When the surface is certified tame and e3 >= e2, the answer must agree with
    the dim B(f)_1 = 2 criterion; disagreement raises InternalInconsistency.
    """
    degs = ar.degrees
    shape = False
    sos = None
    if len(degs) == 4:
        d1, d2, d3, d4 = degs
        if d3 == d4 and d3 == ar.d - d1 - d2:
            sos = second_syzygies(ar)
            want = [d3 - d1 + 1, d3 - d2 + 1, 1, 1]
            shape = sos.count == 1 and sos.coefficient_degrees == want
    details = {}
    if sos is not None:
        details["second_syzygies"] = sos.count
        details["second_syzygy_degrees"] = sos.coefficient_degrees
        details["a3_a4_independent"] = sos.linear_forms_independent
    tame = tameness is not None and tameness.is_tame
    if tame and ar.e3 >= ar.e2 and bourbaki is not None:
        via_b = bourbaki.dim_B1 == 2
        details["dim_B1_route"] = via_b
        if via_b != shape:
            raise InternalInconsistency(
                f"nearly free by generators: {shape}, by dim B(f)_1 = 2: {via_b}")
    if shape and sos.linear_forms_independent is not None and tameness is not None:
        # tame exactly when a3, a4 are independent
        if tameness.is_tame and not sos.linear_forms_independent:
            raise InternalInconsistency("tame nearly free surface with dependent a3, a4")
        if tameness.is_not_tame and sos.linear_forms_independent:
            raise InternalInconsistency("non-tame nearly free surface with independent a3, a4")
    if not shape:
        return None
    return Classification(NEARLY_FREE, (degs[0], degs[1], degs[2]), details)


def classify(f: Poly, ar, tameness=None, bourbaki=None) -> Classification:
    free = is_free(f, ar)
    if free is not None:
        if tameness is not None and not tameness.is_tame:
            raise InternalInconsistency("free surface not certified tame")
        return free
    nf = is_nearly_free(f, ar, tameness, bourbaki)
    if nf is not None:
        return nf
    return Classification(NEITHER)
