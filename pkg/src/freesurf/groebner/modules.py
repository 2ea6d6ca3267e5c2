"""Graded ideals of S and graded submodules of S^r with cached Groebner bases."""

from __future__ import annotations

from fractions import Fraction
from functools import cached_property

from ..polyring import QQ, FieldSpec, Poly
from .engine import GBEngine
from .orders import TermOrder


class SyzVector:
    """An element of S^r given by its components (homogeneous of one degree)."""

    __slots__ = ("comps",)

    def __init__(self, comps):
        self.comps = tuple(comps)

    @classmethod
    def zero(cls, rank, field=QQ, nvars=4):
        return cls([Poly.zero(field, nvars)] * rank)

    @property
    def rank(self):
        return len(self.comps)

    @property
    def field(self):
        return self.comps[0].field

    @property
    def degree(self) -> int:
        """Common degree of the components; -1 for the zero vector."""
        return max(c.degree() for c in self.comps)

    def is_zero(self):
        return all(not c for c in self.comps)

    def is_homogeneous(self):
        degs = {sum(e) for c in self.comps for e in c.terms}
        return len(degs) <= 1

    def dot(self, polys) -> Poly:
        total = Poly.zero(self.field, self.comps[0].nvars)
        for a, b in zip(self.comps, polys):
            if a and b:
                total = total + a * b
        return total

    def __add__(self, other):
        return SyzVector([a + b for a, b in zip(self.comps, other.comps)])

    def __sub__(self, other):
        return SyzVector([a - b for a, b in zip(self.comps, other.comps)])

    def __neg__(self):
        return SyzVector([-a for a in self.comps])

    def __mul__(self, c):
        return SyzVector([a * c for a in self.comps])

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, SyzVector) and self.comps == other.comps

    def __hash__(self):
        return hash(self.comps)

    def __getitem__(self, i):
        return self.comps[i]

    def __iter__(self):
        return iter(self.comps)

    def __len__(self):
        return len(self.comps)

    def monic(self):
        """Scale so the leading coefficient (term-over-position grevlex) is 1."""
        if self.is_zero():
            return self
        return self * self.field.inv(_lead_coeff(self))

    def primitive(self):
        """Rational case: scale to coprime integer coefficients, leading one positive."""
        if self.is_zero() or self.field.p is not None:
            return self.monic()
        from math import gcd, lcm

        coeffs = [c for p in self.comps for c in p.terms.values()]
        den = lcm(*(int(c.denominator) for c in coeffs))
        num = gcd(*(int(c * den) for c in coeffs))
        v = self * self.field(Fraction(den, num))
        return v if _lead_coeff(v) > 0 else -v

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.comps) + ")"

    __repr__ = __str__


def _lead_coeff(v):
    order = TermOrder(v.comps[0].nvars, rank=v.rank)
    lead = max(order.key(e, i) for i, c in enumerate(v.comps) for e in c.terms)
    e, i = order.decode(lead)
    return v.comps[i].terms[e]


# packing helpers ------------------------------------------------------


def pack_poly(p: Poly, order: TermOrder, pos=0, out=None):
    out = {} if out is None else out
    key = order.key
    for e, c in p.terms.items():
        out[key(e, pos)] = c
    return out


def pack_vector(v, order: TermOrder, offset=0, out=None):
    out = {} if out is None else out
    for i, c in enumerate(v):
        pack_poly(c, order, offset + i, out)
    return out


def unpack(d, order: TermOrder, field, rank=None, lo=0, nvars=4):
    """Split a packed dict into ``rank`` component polynomials starting at ``lo``."""
    rank = order.rank - lo if rank is None else rank
    comps = [dict() for _ in range(rank)]
    for k, c in d.items():
        e, pos = order.decode(k)
        if lo <= pos < lo + rank:
            comps[pos - lo][e] = c
    return [Poly(t, field, nvars, _clean=True) for t in comps]


# ----------------------------------------------------------------------


class GradedSubmodule:
    """Submodule of the graded free module S^rank (component i in degree -shifts[i]).

    The Groebner basis uses term-over-position grevlex, ties broken by the
    smaller component index, with the shifts added to the degree.
    """

    is_ideal = False

    def __init__(self, generators, rank, field: FieldSpec = QQ, shifts=None, nvars=4, perm=None):
        self.rank = rank
        self.field = field
        self.nvars = nvars
        self.shifts = tuple([0] * rank) if shifts is None else tuple(shifts)
        self.perm = perm
        self.generators = [g for g in (self._as_vector(g) for g in generators) if not g.is_zero()]
        for g in self.generators:
            if len({sum(e) + self.shifts[i] for i, c in enumerate(g) for e in c.terms}) > 1:
                raise ValueError(f"generator {g} is not homogeneous")
        self.order = TermOrder(nvars, "grevlex", perm, rank=rank, shifts=self.shifts)
        self._engine = None

    def _as_vector(self, g):
        if isinstance(g, SyzVector):
            return g
        if isinstance(g, Poly):
            return SyzVector([g])
        return SyzVector(g)

    def gen_degree(self, g) -> int:
        """Degree of a generator in the shifted grading."""
        for i, c in enumerate(g):
            if c:
                return c.degree() + self.shifts[i]
        return -1

    # Groebner basis ---------------------------------------------------

    def engine(self, max_degree=None) -> GBEngine:
        """The (possibly truncated) Groebner basis engine, extended on demand."""
        if self._engine is None:
            self._engine = GBEngine(self.order, self.field)
            self._engine.add_generators(pack_vector(g, self.order) for g in self.generators)
        eng = self._engine
        if eng.pending or eng.pairs:
            eng.run(max_degree=max_degree)
        return eng

    def gb_packed(self, max_degree=None):
        return self.engine(max_degree).basis()

    @cached_property
    def gb(self):
        """Reduced Groebner basis as vectors (or polynomials for ideals)."""
        return [self._out(d) for d in self.gb_packed()]

    def _out(self, d):
        comps = unpack(d, self.order, self.field, nvars=self.nvars)
        return comps[0] if self.is_ideal else SyzVector(comps)

    def leading_terms(self, max_degree=None):
        """(exponents, position) of every basis leading term."""
        return [self.order.decode(max(d)) for d in self.gb_packed(max_degree)]

    def normal_form(self, v):
        """Fully reduced remainder of ``v`` modulo the submodule."""
        v = self._as_vector(v)
        deg = self.gen_degree(v)
        eng = self.engine(deg if deg >= 0 else None)
        red = eng.reduce(pack_vector(v, self.order))
        return self._out(red)

    def contains(self, v) -> bool:
        v = self._as_vector(v)
        if v.is_zero():
            return True
        deg = self.gen_degree(v)
        return not self.engine(deg).reduce(pack_vector(v, self.order))

    def dim(self, k) -> int:
        """dim over the field of the degree-k part, from the leading terms."""
        from ..hilbert import monomial_ideal_count

        lts = self.leading_terms(k)
        total = 0
        for pos in range(self.rank):
            gens = [e for e, p in lts if p == pos]
            total += monomial_ideal_count(gens, k - self.shifts[pos], self.nvars)
        return total

    # lifting ----------------------------------------------------------

    @cached_property
    def _lift(self):
        return _Lift(self.generators, self.rank, self.field, self.shifts, self.nvars,
                     [self.gen_degree(g) for g in self.generators])

    def syzygies(self, max_degree=None) -> GradedSubmodule:
        """Syzygy module of the generators, in S^m graded by the generator degrees."""
        return self._lift.syzygy_module(max_degree)

    def express(self, v):
        """Coefficients a with v = sum a_i * generators[i], or None if v is not a member."""
        v = self._as_vector(v)
        m = len(self.generators)
        if v.is_zero():
            return [Poly.zero(self.field, self.nvars)] * m
        return self._lift.express(v, self.gen_degree(v))

    def __repr__(self):
        kind = "ideal" if self.is_ideal else f"submodule of S^{self.rank}"
        return f"<{kind} with {len(self.generators)} generators>"


class GradedIdeal(GradedSubmodule):
    is_ideal = True

    def __init__(self, generators, field: FieldSpec = QQ, nvars=4, perm=None):
        super().__init__(list(generators), 1, field, nvars=nvars, perm=perm)

    @property
    def gens(self):
        return [g[0] for g in self.generators]


class _Lift:
    """Groebner basis of {(v_i, e_i)} in S^(r+m) with the first r components eliminated."""

    def __init__(self, gens, rank, field, shifts, nvars, degrees):
        self.rank, self.m = rank, len(gens)
        self.field, self.nvars = field, nvars
        self.degrees = degrees
        self.order = TermOrder(nvars, "grevlex", rank=rank + self.m,
                               shifts=tuple(shifts) + tuple(degrees),
                               blocks=(0,) * rank + (1,) * self.m)
        self.engine = GBEngine(self.order, field)
        one = Poly.constant(1, field, nvars)
        packed = []
        for i, g in enumerate(gens):
            d = pack_vector(g, self.order)
            pack_poly(one, self.order, rank + i, d)
            packed.append(d)
        self.engine.add_generators(packed)
        self._block = self.order.block_off

    def _run(self, max_degree):
        eng = self.engine
        if eng.pending or eng.pairs:
            eng.run(max_degree=max_degree)
        return eng

    def syzygy_module(self, max_degree=None):
        eng = self._run(max_degree)
        block0 = 1 << self._block
        syz = []
        for d in eng.basis():
            if max(d) < block0:  # leading term in the tracking block => pure syzygy
                comps = unpack(d, self.order, self.field, self.m, self.rank, self.nvars)
                syz.append(SyzVector(comps))
        mod = GradedSubmodule(syz, self.m, self.field, shifts=self.degrees, nvars=self.nvars)
        mod.complete = not eng.truncated
        return mod

    def express(self, v, deg):
        eng = self._run(deg)
        d = pack_vector(v, self.order)
        red = eng.reduce(d)
        block0 = 1 << self._block
        if any(k >= block0 for k in red):
            return None
        q = unpack(red, self.order, self.field, self.m, self.rank, self.nvars)
        return [-c for c in q]


def groebner(gens, field: FieldSpec = QQ, rank=None):
    """Reduced Groebner basis (grevlex, term over position) of an ideal or submodule."""
    gens = list(gens)
    if rank is None:
        first = gens[0] if gens else None
        if first is None or isinstance(first, Poly):
            return GradedIdeal(gens, field).gb
        rank = len(first)
    return GradedSubmodule(gens, rank, field).gb


def normal_form(v, module: GradedSubmodule):
    return module.normal_form(v)


def module_membership(v, module: GradedSubmodule):
    """(True, coefficients) if v lies in the module, else (False, None)."""
    coeffs = module.express(v)
    return (coeffs is not None), coeffs


def syzygy_generators(entries, field: FieldSpec | None = None) -> GradedSubmodule:
    """Generators of {c : sum c_i v_i = 0} for polynomials or vectors ``entries``."""
    entries = list(entries)
    first = entries[0]
    field = field or (first.field if isinstance(first, Poly) else first[0].field)
    if isinstance(first, Poly):
        mod = GradedIdeal(entries, field)
        keep = [i for i, e in enumerate(entries) if e]
    else:
        mod = GradedSubmodule(entries, len(first), field)
        keep = [i for i, e in enumerate(entries) if not SyzVector(e).is_zero()]
    syz = mod.syzygies()
    if len(keep) == len(entries):
        return syz
    # zero entries contribute unit-vector syzygies
    m = len(entries)
    zero = Poly.zero(field)
    one = Poly.constant(1, field)
    gens = []
    for s in syz.generators:
        comps = [zero] * m
        for j, i in enumerate(keep):
            comps[i] = s[j]
        gens.append(SyzVector(comps))
    for i in range(m):
        if i not in keep:
            comps = [zero] * m
            comps[i] = one
            gens.append(SyzVector(comps))
    shifts = [0] * m
    for j, i in enumerate(keep):
        shifts[i] = syz.shifts[j]
    return GradedSubmodule(gens, m, field, shifts=shifts)
