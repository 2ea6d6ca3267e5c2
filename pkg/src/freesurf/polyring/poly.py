"""Sparse exact polynomials in k[x, y, z, w] (other variable counts allowed internally)."""

from __future__ import annotations

from itertools import combinations_with_replacement
from math import comb

import flint

from .field import QQ, FieldSpec, mpq

VARS = ("x", "y", "z", "w")


class NotDivisible(ArithmeticError):
    """Raised by exact division when the divisor does not divide."""


def grevlex_key(e):
    """Sort key for grevlex with x0 > x1 > ... (larger key = larger monomial)."""
    return (sum(e),) + tuple(-a for a in reversed(e))


def binom3(n: int) -> int:
    """C(n, 3), taken to be 0 for every n < 3 (negative n included)."""
    return comb(n, 3) if n >= 3 else 0


class Poly:
    """Immutable sparse polynomial: a map exponent-tuple -> nonzero coefficient."""

    __slots__ = ("terms", "field", "nvars", "_hash")

    def __init__(self, terms=None, field: FieldSpec = QQ, nvars: int = 4, *, _clean=False):
        self.field = field
        self.nvars = nvars
        self._hash = None
        if terms is None:
            self.terms = {}
        elif _clean:
            self.terms = terms
        else:
            out = {}
            for e, c in terms.items():
                c = field(c)
                if c:
                    out[tuple(e)] = c
            self.terms = out

    # constructors -----------------------------------------------------

    @classmethod
    def zero(cls, field=QQ, nvars=4):
        return cls({}, field, nvars, _clean=True)

    @classmethod
    def constant(cls, c, field=QQ, nvars=4):
        return cls({(0,) * nvars: c}, field, nvars)

    @classmethod
    def var(cls, i, field=QQ, nvars=4):
        e = [0] * nvars
        e[i] = 1
        return cls({tuple(e): 1}, field, nvars)

    @classmethod
    def monomial(cls, e, c=1, field=QQ):
        return cls({tuple(e): c}, field, len(e))

    def _new(self, terms):
        return Poly(terms, self.field, self.nvars, _clean=True)

    # basic queries ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def monomials(self):
        return sorted(self.terms, key=grevlex_key, reverse=True)

    def leading_term(self):
        """(exponents, coefficient) of the grevlex-largest term."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=grevlex_key)
        return e, self.terms[e]

    def coeff(self, e):
        return self.terms.get(tuple(e), self.field.zero)

    def homogeneous_part(self, k):
        return self._new({e: c for e, c in self.terms.items() if sum(e) == k})

    # arithmetic -------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Poly):
            return other
        return Poly.constant(other, self.field, self.nvars)

    def __add__(self, other):
        other = self._coerce(other)
        p = self.field.p
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e)
            if v is None:
                out[e] = c
            else:
                v = v + c
                if p is not None:
                    v %= p
                if v:
                    out[e] = v
                else:
                    del out[e]
        return self._new(out)

    __radd__ = __add__

    def __neg__(self):
        f = self.field
        return self._new({e: f.neg(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, c):
        c = self.field(c)
        if not c:
            return self._new({})
        p = self.field.p
        if p is None:
            return self._new({e: a * c for e, a in self.terms.items()})
        return self._new({e: a * c % p for e, a in self.terms.items()})

    def mul_monomial(self, u, c=None):
        terms = {tuple(a + b for a, b in zip(e, u)): v for e, v in self.terms.items()}
        out = self._new(terms)
        return out if c is None else out.scale(c)

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return self.scale(other)
        if len(other.terms) == 1:
            (u, c), = other.terms.items()
            return self.mul_monomial(u, c)
        if len(self.terms) == 1:
            (u, c), = self.terms.items()
            return other.mul_monomial(u, c)
        p = self.field.p
        out = {}
        get = out.get
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = get(e, 0) + c1 * c2
        if p is None:
            return self._new({e: c for e, c in out.items() if c})
        return self._new({e: c % p for e, c in out.items() if c % p})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = Poly.constant(1, self.field, self.nvars)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.terms == other.terms
        if not self.terms:
            return other == 0
        return self.is_constant() and self.terms.get((0,) * self.nvars) == other

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def diff(self, i: int) -> Poly:
        """Formal partial derivative with respect to variable ``i``."""
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                e2 = list(e)
                e2[i] -= 1
                out[tuple(e2)] = c * e[i]
        return Poly(out, self.field, self.nvars)

    def monic(self) -> Poly:
        if not self.terms:
            return self
        _, c = self.leading_term()
        return self.scale(self.field.inv(c))

    def exact_div(self, q: Poly) -> Poly:
        """Quotient ``self / q``; raises NotDivisible unless q divides exactly."""
        if not q.terms:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self.terms:
            return self
        quot, rem = divmod(self.to_flint(), q.to_flint())
        if rem != 0:
            raise NotDivisible(f"{q} does not divide {self}")
        return Poly.from_flint(quot, self.field, self.nvars)

    def evaluate(self, point):
        total = self.field.zero
        for e, c in self.terms.items():
            t = c
            for a, v in zip(e, point):
                if a:
                    t = t * v**a
            total = total + t
        if self.field.p is not None:
            total %= self.field.p
        return total

    def to_field(self, field: FieldSpec) -> Poly:
        """Map coefficients into ``field`` (e.g. reduce a rational polynomial mod p)."""
        src = self.field
        return Poly({e: field(src.to_fraction(c)) for e, c in self.terms.items()}, field, self.nvars)

    # flint bridge -----------------------------------------------------

    def _flint_ctx(self):
        names = VARS if self.nvars == 4 else tuple(f"x{i}" for i in range(self.nvars))
        if self.field.p is None:
            return flint.fmpq_mpoly_ctx.get(names)
        return flint.nmod_mpoly_ctx.get(names, modulus=self.field.p)

    def to_flint(self):
        ctx = self._flint_ctx()
        if self.field.p is None:
            return ctx.from_dict({e: flint.fmpq(int(c.numerator), int(c.denominator))
                                  for e, c in self.terms.items()})
        return ctx.from_dict({e: int(c) for e, c in self.terms.items()})

    @classmethod
    def from_flint(cls, g, field, nvars=4):
        out = {}
        for e, c in g.to_dict().items():
            e = tuple(int(a) for a in e)
            out[e] = mpq(int(c.p), int(c.q)) if field.p is None else int(c)
        return cls(out, field, nvars)

    # printing ---------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        names = VARS if self.nvars == 4 else tuple(f"x{i}" for i in range(self.nvars))
        parts = []
        for e in self.monomials():
            c = self.terms[e]
            if self.field.p is None:
                neg = c < 0
                mag = -c if neg else c
            else:
                neg, mag = False, c
            mono = "*".join(n if a == 1 else f"{n}^{a}" for n, a in zip(names, e) if a)
            cs = self.field.format(mag)
            if not mono:
                body = cs
            elif cs == "1":
                body = mono
            else:
                body = f"{cs}*{mono}"
            parts.append(("-" if neg else "+", body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"Poly({self})"


def partials(f: Poly):
    """The formal partial derivatives of ``f`` with respect to every variable."""
    return tuple(f.diff(i) for i in range(f.nvars))


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Greatest common divisor, monic under grevlex; gcd(0, 0) = 0."""
    if not p.terms:
        return q.monic()
    if not q.terms:
        return p.monic()
    g = p.to_flint().gcd(q.to_flint())
    return Poly.from_flint(g, p.field, p.nvars).monic()


def gcd_list(polys) -> Poly:
    polys = list(polys)
    g = Poly.zero(polys[0].field, polys[0].nvars) if polys else Poly.zero()
    for p in polys:
        g = poly_gcd(g, p)
        if g.terms and g.is_constant():
            break
    return g


def is_squarefree(f: Poly) -> bool:
    """True iff f has no repeated factor, tested as gcd(f, df/dx_i) = 1."""
    if not f.terms:
        raise ValueError("zero polynomial")
    return gcd_list([f, *partials(f)]).is_constant()


def monomial_basis(k: int, nvars: int = 4):
    """All degree-k exponent tuples, in decreasing grevlex order."""
    if k < 0:
        return []
    out = []
    for combo in combinations_with_replacement(range(nvars), k):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    out.sort(key=grevlex_key, reverse=True)
    return out


def det(m) -> Poly:
    """Determinant of a small square matrix of polynomials by cofactor expansion.

    The expansion runs on flint multivariate polynomials for speed.
    """
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("matrix must be square")
    if n == 0:
        return Poly.constant(1)
    ref = m[0][0]
    fm = [[e.to_flint() for e in row] for row in m]
    cache = {}

    def minor(rows_left: tuple, col: int):
        # rows_left: remaining row indices; expand along column ``col``.
        key = (rows_left, col)
        if key in cache:
            return cache[key]
        if len(rows_left) == 1:
            val = fm[rows_left[0]][col]
        else:
            val = 0 * fm[rows_left[0]][col]
            for pos, r in enumerate(rows_left):
                entry = fm[r][col]
                if entry == 0:
                    continue
                term = entry * minor(rows_left[:pos] + rows_left[pos + 1:], col + 1)
                val = val - term if pos % 2 else val + term
        cache[key] = val
        return val

    return Poly.from_flint(minor(tuple(range(n)), 0), ref.field, ref.nvars)


def det_bareiss(m) -> Poly:
    """Fraction-free (Bareiss) determinant with exact polynomial divisions."""
    n = len(m)
    a = [list(row) for row in m]
    sign = 1
    prev = None
    for k in range(n - 1):
        if not a[k][k]:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0 * a[0][0]
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * a[k][k] - a[i][k] * a[k][j]
                a[i][j] = num if prev is None else num.exact_div(prev)
        prev = a[k][k]
    d = a[n - 1][n - 1]
    return d if sign == 1 else -d


def dim_s(k: int, nvars: int = 4) -> int:
    """dim S_k = C(k+n-1, n-1)."""
    return comb(k + nvars - 1, nvars - 1) if k >= 0 else 0
