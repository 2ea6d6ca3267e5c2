"""Tameness of a surface with respect to a pair (rho1, rho2), with certificates.

The pair is exact when the kernel of v' equals S rho1 + S rho2. Failures come
with a relation c * rho = c1 * rho1 + c2 * rho2, deg c > 0, rho outside the span.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from ..groebner import GradedSubmodule, SyzVector, syzygy_generators
from ..jacobian import ARData, Pair, fraction_field_rank, select_pairs
from ..polyring import Poly, gcd_list
from .bourbaki import bourbaki_h

MINORS_GCD_UNIT = "MinorsGcdUnit"
KERNEL_EQUALS_IMAGE = "KernelEqualsImage"

TAME = "Tame"
NOT_TAME = "NotTame"
NOT_TAME_TESTED = "NotTameForTestedPairs"
UNDETERMINED = "Undetermined"


def minors(r1: SyzVector, r2: SyzVector):
    return [r1[i] * r2[j] - r1[j] * r2[i] for i, j in combinations(range(len(r1)), 2)]


def minors_gcd_test(r1: SyzVector, r2: SyzVector) -> bool:
    """True when the 2x2 minors have no common factor (sufficient for exactness)."""
    g = gcd_list(minors(r1, r2))
    return bool(g) and g.is_constant()


@dataclass
class Relation:
    """c * rho = c1 * rho1 + c2 * rho2 with gcd(c, c1, c2) = 1 and c monic."""

    rho: SyzVector
    c: Poly
    c1: Poly
    c2: Poly

    def holds(self, rho1, rho2) -> bool:
        return (self.rho * self.c - rho1 * self.c1 - rho2 * self.c2).is_zero()


def dependence_relation(r1: SyzVector, r2: SyzVector, rho: SyzVector) -> Relation | None:
    """Primitive relation c rho = c1 r1 + c2 r2 by Cramer's rule, or None if rank 3."""
    n = len(r1)
    for j, k in combinations(range(n), 2):
        m = r1[j] * r2[k] - r1[k] * r2[j]
        if not m:
            continue
        c1 = rho[j] * r2[k] - rho[k] * r2[j]
        c2 = r1[j] * rho[k] - r1[k] * rho[j]
        g = gcd_list([m, c1, c2])
        c, c1, c2 = m.exact_div(g), c1.exact_div(g), c2.exact_div(g)
        lead = c.leading_term()[1]
        inv = c.field.inv(lead)
        rel = Relation(rho, c.scale(inv), c1.scale(inv), c2.scale(inv))
        return rel if rel.holds(r1, r2) else None
    raise ValueError("rho1 and rho2 are proportional")


@dataclass
class KernelCheck:
    exact: bool
    witness: Relation | None = None


def kernel_vs_image(f: Poly, r1: SyzVector, r2: SyzVector, ar: ARData, h_values=None) -> KernelCheck:
    """Compare ker v' with S r1 + S r2; on failure return an explicit witness."""
    hs = h_values if h_values is not None else [bourbaki_h(f, r1, r2, g) for g in ar.min_gens]
    field_ = f.field
    m = len(hs)
    if any(hs):
        syz = syzygy_generators(hs, field_).generators
    else:
        one, zero = Poly.constant(1, field_), Poly.zero(field_)
        syz = [SyzVector([one if i == j else zero for j in range(m)]) for i in range(m)]
    span = GradedSubmodule([r1, r2], 4, field_)
    bad = []
    for s in syz:
        rho = SyzVector.zero(4, field_)
        for c, g in zip(s, ar.min_gens):
            if c:
                rho = rho + g * c
        if rho.is_zero() or span.contains(rho):
            continue
        bad.append(span.normal_form(rho))
    if not bad:
        return KernelCheck(True)
    rho = min(bad, key=lambda v: v.degree).primitive()
    rel = dependence_relation(r1, r2, rho)
    if rel is None or rel.c.degree() <= 0:
        raise AssertionError("kernel element outside the span without a valid relation")
    return KernelCheck(False, rel)


@dataclass
class StructuralCertificate:
    """Three minimal generators of degree <= e2 spanning a rank-2 space."""

    generators: list
    relation: Relation
    rank: int = 2


@dataclass
class TamenessVerdict:
    status: str
    pair: Pair | None = None
    certificate_kind: str | None = None
    structural: StructuralCertificate | None = None
    witnesses: list = field(default_factory=list)  # (Pair, Relation)
    seed: int = 0
    tested: int = 0

    @property
    def is_tame(self) -> bool:
        return self.status == TAME

    @property
    def is_not_tame(self) -> bool:
        return self.status == NOT_TAME


def structural_certificate(ar: ARData) -> StructuralCertificate | None:
    """Rank-2 span of at least three minimal generators of degree <= e2."""
    low = [g.primitive() for g, dg in zip(ar.min_gens, ar.degrees) if dg <= ar.e2]
    if len(low) < 3 or fraction_field_rank(low) != 2:
        return None
    g1 = low[0]
    g2 = next(g for g in low[1:] if fraction_field_rank([g1, g]) == 2)
    g3 = next(g for g in low[1:] if g is not g2)
    rel = dependence_relation(g1, g2, g3)
    if rel is None:
        raise AssertionError("rank-2 span without a dependence relation")
    return StructuralCertificate([g1, g2, g3], rel)


def evaluate_pair(f: Poly, pair: Pair, ar: ARData):
    """(certificate kind or None, witness or None) for one pair."""
    if minors_gcd_test(pair.rho1, pair.rho2):
        return MINORS_GCD_UNIT, None
    check = kernel_vs_image(f, pair.rho1, pair.rho2, ar)
    if check.exact:
        return KERNEL_EQUALS_IMAGE, None
    return None, check.witness


def tameness(f: Poly, ar: ARData, seed=0, budget=8, pairs=None) -> TamenessVerdict:
    cert = structural_certificate(ar)
    if cert is not None:
        return TamenessVerdict(NOT_TAME, structural=cert, seed=seed)
    pairs = select_pairs(ar, seed, budget) if pairs is None else pairs
    witnesses = []
    for pair in pairs:
        kind, witness = evaluate_pair(f, pair, ar)
        if kind is not None:
            return TamenessVerdict(TAME, pair, kind, seed=seed, witnesses=witnesses,
                                   tested=len(witnesses) + 1)
        witnesses.append((pair, witness))
    if not witnesses:
        return TamenessVerdict(UNDETERMINED, seed=seed)
    return TamenessVerdict(NOT_TAME_TESTED, witnesses=witnesses, seed=seed, tested=len(witnesses))
