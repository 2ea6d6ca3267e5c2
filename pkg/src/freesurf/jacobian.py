"""Data attached to one surface f = 0: Jacobian ideal, the syzygy module AR(f),
graded dimensions (with a brute-force oracle), H^0_m of the Milnor algebra and
candidate pairs (rho1, rho2)."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import cached_property

from .groebner import GradedIdeal, GradedSubmodule, SyzVector, syzygy_generators
from .groebner.minimal import minimal_generators
from .groebner.saturation import saturate_max_ideal
from .hilbert import HilbertData, hf_from_numerator, hilbert_data
from .polyring import ExactMatrix, Poly, binom3, dim_s, is_squarefree, monomial_basis, partials

ORACLE_CAP = 20000


class InadmissibleSurface(ValueError):
    """The surface violates one of the standing hypotheses."""

    hypothesis = "admissible"


class NotHomogeneous(InadmissibleSurface):
    hypothesis = "homogeneous"


class NotReduced(InadmissibleSurface):
    hypothesis = "reduced"


class IsCone(InadmissibleSurface):
    hypothesis = "not a cone"


class WrongSigmaDimension(InadmissibleSurface):
    hypothesis = "dim Sigma = 1"


class OracleSkipped(RuntimeError):
    """The brute-force oracle matrix would exceed the size cap."""


@dataclass
class SurfaceInput:
    f: Poly
    d: int
    partials: tuple
    homogeneous: bool
    squarefree: bool | None = None
    not_a_cone: bool | None = None
    dim_sigma: int | None = None
    hilbert: HilbertData | None = None
    jacobian: GradedIdeal | None = None

    @property
    def field(self):
        return self.f.field

    def violation(self) -> InadmissibleSurface | None:
        """The first violated standing hypothesis, or None."""
        if not self.homogeneous:
            return NotHomogeneous("f is not homogeneous")
        if not self.squarefree:
            return NotReduced("f has a repeated factor (surface not reduced)")
        if not self.not_a_cone:
            return IsCone("the partial derivatives are linearly dependent (D is a cone)")
        if self.dim_sigma != 1:
            return WrongSigmaDimension(
                f"the singular subscheme has dimension {self.dim_sigma}, expected 1")
        return None

    @property
    def admissible(self) -> bool:
        return self.violation() is None


def _partials_independent(parts, field) -> bool:
    if any(not p for p in parts):
        return False
    k = parts[0].degree()
    cols = {e: i for i, e in enumerate(monomial_basis(k))}
    rows = []
    for p in parts:
        r = [field.zero] * len(cols)
        for e, c in p.terms.items():
            r[cols[e]] = c
        rows.append(r)
    return ExactMatrix(rows, field, len(cols)).rank() == 4


def build_surface(f: Poly, check=True) -> SurfaceInput:
    """Validate the standing hypotheses; raise the first violation when ``check``."""
    if not f:
        raise ValueError("f must be nonzero")
    parts = partials(f)
    s = SurfaceInput(f, f.degree(), parts, f.is_homogeneous())
    if s.homogeneous:
        s.squarefree = is_squarefree(f)
        s.not_a_cone = _partials_independent(parts, f.field)
        if s.squarefree and s.not_a_cone:
            s.jacobian = GradedIdeal(parts, f.field)
            s.hilbert = hilbert_data(s.jacobian)
            s.dim_sigma = s.hilbert.proj_dim_sigma
    if check and (err := s.violation()) is not None:
        raise err
    return s


def _surface(f_or_s) -> SurfaceInput:
    return f_or_s if isinstance(f_or_s, SurfaceInput) else build_surface(f_or_s)


# AR(f) ------------------------------------------------------------------


@dataclass
class ARData:
    surface: SurfaceInput
    module: GradedSubmodule
    min_gens: list
    degrees: list
    e1: int
    e2: int
    dims: dict = field(default_factory=dict)

    @property
    def d(self) -> int:
        return self.surface.d

    @property
    def e3(self) -> int:
        return self.d - 1 - self.e1 - self.e2

    @property
    def mdr(self) -> int:
        return self.e1

    def dim(self, k) -> int:
        if k < 0:
            return 0
        if k not in self.dims:
            self.dims[k] = self.module.dim(k)
        return self.dims[k]

    def gens_of_degree(self, k):
        return [g for g, dg in zip(self.min_gens, self.degrees) if dg == k]

    @cached_property
    def generic_rank(self) -> int:
        return fraction_field_rank(self.min_gens)


def is_syzygy(v: SyzVector, f_or_parts) -> bool:
    parts = partials(f_or_parts) if isinstance(f_or_parts, Poly) else f_or_parts
    return not v.dot(parts)


def ar_module(f_or_s) -> ARData:
    s = _surface(f_or_s)
    syz = syzygy_generators(s.partials, s.field)
    module = GradedSubmodule(syz.generators, 4, s.field)
    gens, degrees = minimal_generators(module)
    for g in gens:
        if not is_syzygy(g, s.partials):
            raise AssertionError(f"minimal generator {g} is not a syzygy")
    ar = ARData(s, module, gens, degrees, degrees[0], degrees[0])
    e1 = degrees[0]
    # e2: first degree where AR(f) is larger than S * rho1
    e2 = e1
    while ar.dim(e2) <= binom3(e2 - e1 + 3):
        e2 += 1
        if e2 > degrees[-1]:
            raise AssertionError("AR(f) has rank 1")
    ar.e2 = e2
    return ar


def mdr(f_or_s) -> int:
    return ar_module(f_or_s).e1


def ar_dim(ar: ARData, k: int) -> int:
    return ar.dim(k)


def ar_dim_oracle(f: Poly, k: int) -> int:
    """dim of the kernel of S_k^4 -> S_{k+d-1}, (a) -> sum a_j f_j, by exact rank."""
    if k < 0:
        return 0
    if dim_s(k) > ORACLE_CAP:
        raise OracleSkipped(f"C({k}+3,3) = {dim_s(k)} exceeds the oracle cap {ORACLE_CAP}")
    parts = partials(f)
    d = f.degree()
    cols = {e: i for i, e in enumerate(monomial_basis(k + d - 1))}
    rows = []
    field = f.field
    for p in parts:
        for u in monomial_basis(k):
            r = {}
            for e, c in p.terms.items():
                r[cols[tuple(a + b for a, b in zip(e, u))]] = c
            rows.append([r.get(i, field.zero) for i in range(len(cols))])
    rank = ExactMatrix(rows, field, len(cols)).rank()
    return 4 * dim_s(k) - rank


def milnor_dim(s: SurfaceInput, k: int) -> int:
    """m(f)_k from the Groebner basis of J_f."""
    return s.hilbert.hilbert_function(k)


def milnor_dim_bridge(ar: ARData, k: int) -> int:
    """m(f)_k = C(k+3,3) - 4 C(k-d+4,3) + ar(f)_{k-d+1}, valid for k >= d-4."""
    d = ar.d
    return binom3(k + 3) - 4 * binom3(k - d + 4) + ar.dim(k - d + 1)


def bridge_residual(ar: ARData, k: int) -> int:
    return milnor_dim(ar.surface, k) - milnor_dim_bridge(ar, k)


def fraction_field_rank(vectors) -> int:
    """Rank over the fraction field, from exact (evaluation-free) minors."""
    from itertools import combinations

    from .polyring import det

    vectors = [v for v in vectors if not v.is_zero()]
    if not vectors:
        return 0
    n = len(vectors[0])
    best = 1
    for r in range(2, min(len(vectors), n) + 1):
        found = False
        for rows in combinations(vectors, r):
            for cols in combinations(range(n), r):
                if det([[v[c] for c in cols] for v in rows]):
                    found = True
                    break
            if found:
                break
        if not found:
            return best
        best = r
    return best


# H^0_m(M(f)) --------------------------------------------------------------


@dataclass
class H0mData:
    dims: dict
    is_zero: bool
    saturation: GradedIdeal


def h0m_dims(s: SurfaceInput, top=None) -> H0mData:
    """dim (J_f^sat / J_f)_k for 0 <= k <= max(2d, stabilization indices)."""
    sat = saturate_max_ideal(s.jacobian)
    hs = hilbert_data(sat)
    top = max(2 * s.d, s.hilbert.stab_index, hs.stab_index) if top is None else top
    dims = {}
    for k in range(top + 1):
        dims[k] = hf_from_numerator(s.hilbert.numerator, k) - hf_from_numerator(hs.numerator, k)
    return H0mData(dims, all(v == 0 for v in dims.values()), sat)


# pairs (rho1, rho2) ------------------------------------------------------


@dataclass(frozen=True)
class Pair:
    rho1: SyzVector
    rho2: SyzVector
    label: str


def _combination(gens, rng, field):
    while True:
        coeffs = [rng.randint(-9, 9) for _ in gens]
        if any(coeffs):
            break
    out = gens[0] * Poly.constant(coeffs[0], field)
    for c, g in zip(coeffs[1:], gens[1:]):
        if c:
            out = out + g * Poly.constant(c, field)
    return out


def _admissible_second(r1: SyzVector, r2: SyzVector, field) -> bool:
    if r2.is_zero():
        return False
    return not GradedSubmodule([r1], 4, field).contains(r2)


def select_pairs(ar: ARData, seed=0, budget=8) -> list[Pair]:
    """Generator pairs in the (e1, e2) degree slots, then ``budget`` seeded random ones."""
    field = ar.surface.field
    idx1 = [i for i, dg in enumerate(ar.degrees) if dg == ar.e1]
    idx2 = [i for i, dg in enumerate(ar.degrees) if dg == ar.e2]
    g = ar.min_gens
    pairs = []
    for i in idx1:
        for j in idx2:
            if j == i or (ar.e1 == ar.e2 and j < i):
                continue
            if _admissible_second(g[i], g[j], field):
                pairs.append(Pair(g[i], g[j], f"g{i + 1},g{j + 1}"))
    rng = random.Random(seed)
    slot1 = [g[i] for i in idx1]
    slot2 = [g[i] for i in idx2]
    made = 0
    tries = 0
    while made < budget and tries < 20 * (budget + 1):
        tries += 1
        r1 = _combination(slot1, rng, field)
        r2 = _combination(slot2, rng, field)
        if _admissible_second(r1, r2, field):
            made += 1
            pairs.append(Pair(r1, r2, f"random{made}"))
    return pairs
