"""Hilbert series, function and polynomial of graded quotients S/I.

The series numerator comes from the leading-term ideal by the pivot recursion
N(I) = N(I + (p)) + t^deg(p) N(I : p), memoized on the generator set.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .polyring import Poly, dim_s, partials

# monomial ideals ------------------------------------------------------


def _minimalize(gens):
    gens = sorted(set(gens), key=sum)
    out = []
    for g in gens:
        if not any(all(a <= b for a, b in zip(h, g)) for h in out):
            out.append(g)
    return tuple(sorted(out))


def _polymul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _polyadd(a, b):
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]


def _trim(a):
    while len(a) > 1 and a[-1] == 0:
        a = a[:-1]
    return a


@lru_cache(maxsize=200_000)
def _numerator(gens: tuple) -> tuple:
    if not gens:
        return (1,)
    # coprime generators: product formula
    support = [tuple(i for i, a in enumerate(g) if a) for g in gens]
    seen = set()
    coprime = True
    for s in support:
        if seen.intersection(s):
            coprime = False
            break
        seen.update(s)
    if coprime:
        out = [1]
        for g in gens:
            d = sum(g)
            out = _polymul(out, [1] + [0] * (d - 1) + [-1])
        return tuple(out)
    # pivot on the variable occurring in the most generators, with power 1
    n = len(gens[0])
    counts = [sum(1 for g in gens if g[i]) for i in range(n)]
    var = max(range(n), key=lambda i: counts[i])
    piv = tuple(1 if i == var else 0 for i in range(n))
    left = _minimalize(gens + (piv,))
    right = _minimalize(tuple(tuple(max(a - b, 0) for a, b in zip(g, piv)) for g in gens))
    nl = list(_numerator(left))
    nr = [0] + list(_numerator(right))
    return tuple(_trim(_polyadd(nl, nr)))


def hilbert_numerator_monomial(gens, nvars=4) -> list[int]:
    """Integer N(t) with HS(S/(gens)) = N(t) / (1 - t)^nvars."""
    gens = [tuple(g) for g in gens]
    if any(not any(g) for g in gens):
        return [0]
    return list(_numerator(_minimalize(gens))) if gens else [1]


def hf_from_numerator(num, k, nvars=4) -> int:
    return sum(c * dim_s(k - j, nvars) for j, c in enumerate(num))


def monomial_ideal_count(gens, k, nvars=4) -> int:
    """Number of degree-k monomials in the monomial ideal generated by ``gens``."""
    if k < 0:
        return 0
    if not gens:
        return 0
    return dim_s(k, nvars) - hf_from_numerator(hilbert_numerator_monomial(gens, nvars), k, nvars)


# quotients S/I ----------------------------------------------------------


@dataclass
class HilbertData:
    """Hilbert data of a graded quotient S/I (here S = k[x, y, z, w])."""

    numerator: list[int]
    hp: list[Fraction]  # coefficients of HP, constant term first
    stab_index: int
    hf: dict[int, int] = field(default_factory=dict)

    @property
    def hp_degree(self) -> int:
        return max((i for i, c in enumerate(self.hp) if c), default=-1)

    @property
    def proj_dim_sigma(self) -> int:
        """Dimension of Proj(S/I); -1 when empty."""
        return self.hp_degree

    @property
    def a(self) -> Fraction:
        return self.hp[1] if len(self.hp) > 1 else Fraction(0)

    @property
    def b(self) -> Fraction:
        return self.hp[0] if self.hp else Fraction(0)

    @property
    def deg_sigma(self) -> int:
        """m! times the leading coefficient, m = dim; 0 when empty."""
        m = self.hp_degree
        if m < 0:
            return 0
        return int(factorial(m) * self.hp[m])

    def hilbert_function(self, k) -> int:
        if k in self.hf:
            return self.hf[k]
        v = hf_from_numerator(self.numerator, k)
        self.hf[k] = v
        return v

    def hp_value(self, k) -> Fraction:
        return sum((c * k**i for i, c in enumerate(self.hp)), Fraction(0))


def _binom_poly(shift: int, n: int):
    """Coefficients in k of C(k + shift, n) as a polynomial (constant term first)."""
    coeffs = [Fraction(1)]
    for i in range(n):
        # multiply by (k + shift - i)
        c0 = shift - i
        nxt = [Fraction(0)] * (len(coeffs) + 1)
        for j, c in enumerate(coeffs):
            nxt[j] += c * c0
            nxt[j + 1] += c
        coeffs = nxt
    return [c / factorial(n) for c in coeffs]


def hilbert_polynomial_from_numerator(num, nvars=4):
    """HP coefficients and stabilization index for HS = num / (1-t)^nvars."""
    hp = [Fraction(0)] * nvars
    for j, c in enumerate(num):
        if c:
            for i, v in enumerate(_binom_poly(nvars - 1 - j, nvars - 1)):
                hp[i] += c * v
    while len(hp) > 1 and hp[-1] == 0:
        hp.pop()
    # hf = hp is certain from k >= deg N - nvars + 1; walk down from there
    k = max(len(num) - nvars, 0)

    def hpv(k):
        return sum((c * k**i for i, c in enumerate(hp)), Fraction(0))

    while k > 0 and hf_from_numerator(num, k - 1, nvars) == hpv(k - 1):
        k -= 1
    return hp, k


def hilbert_series_quotient(ideal) -> list[int]:
    """Numerator N(t) of the Hilbert series of S/I, from the leading-term ideal."""
    lts = [e for e, _ in ideal.leading_terms()]
    return hilbert_numerator_monomial(lts, ideal.nvars)


def hilbert_data(ideal) -> HilbertData:
    num = hilbert_series_quotient(ideal)
    hp, stab = hilbert_polynomial_from_numerator(num, ideal.nvars)
    return HilbertData(num, hp, stab)


def hilbert_function(ideal, k) -> int:
    return hf_from_numerator(hilbert_series_quotient(ideal), k, ideal.nvars)


def hilbert_polynomial(ideal):
    """(a, b, stab_index) with HP(k) = a k + b; higher terms are dropped only if zero."""
    hd = hilbert_data(ideal)
    if hd.hp_degree > 1:
        raise ValueError(f"Hilbert polynomial has degree {hd.hp_degree}: {hd.hp}")
    return hd.a, hd.b, hd.stab_index


def jacobian_ideal(f: Poly):
    from .groebner import GradedIdeal

    return GradedIdeal([g for g in partials(f) if g], f.field)


def sigma_dim_deg(f: Poly):
    """(dim, deg) of the singular subscheme; empty is (-1, 0)."""
    hd = hilbert_data(jacobian_ideal(f))
    return hd.proj_dim_sigma, hd.deg_sigma


def brute_force_hf(gens, k, field) -> int:
    """dim (S/I)_k as C(k+3,3) minus the rank of the degree-k multiplication matrix."""
    from .polyring import ExactMatrix, monomial_basis

    cols = {e: i for i, e in enumerate(monomial_basis(k))}
    rows = []
    for g in gens:
        dg = g.degree()
        for u in monomial_basis(k - dg):
            r = [field.zero] * len(cols)
            for e, c in g.terms.items():
                r[cols[tuple(a + b for a, b in zip(e, u))]] = c
            rows.append(r)
    rank = ExactMatrix(rows, field, len(cols)).rank() if rows else 0
    return comb(k + 3, 3) - rank
