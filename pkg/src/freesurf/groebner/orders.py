"""Monomial and module term orders, encoded as additive packed integers.

A term ``u * e_pos`` is packed into one Python int whose integer order is the
term order. Packing is additive in the monomial, so multiplying a term by a
monomial is integer addition. The low fields hold the raw exponents, which
gives a constant-time divisibility test with guard bits.
"""

from __future__ import annotations

FB = 16
FMASK = (1 << FB) - 1
GUARD_BIT = 1 << (FB - 1)


class TermOrder:
    """Weight-matrix term order on S^rank.

    kind:
      ``grevlex``  weighted degree, then reverse lex along ``perm``
      ``lex``      lex along ``perm``
      ``elim``     variables ``elim_vars`` first (by exponent sum), then grevlex on the rest
    module:
      ``top``  term over position; the component shift is added to the degree row
      ``pot``  position over term
    ``blocks[pos]`` groups components; a smaller block number is always larger
    (used to eliminate components when lifting).
    """

    def __init__(self, nvars=4, kind="grevlex", perm=None, weights=None, *, rank=1,
                 shifts=None, module="top", blocks=None, elim_vars=()):
        self.nvars = n = nvars
        self.kind = kind
        self.perm = tuple(range(n)) if perm is None else tuple(perm)
        self.weights = tuple([1] * n) if weights is None else tuple(weights)
        self.rank = rank
        self.shifts = tuple([0] * rank) if shifts is None else tuple(shifts)
        self.module = module
        self.blocks = tuple([0] * rank) if blocks is None else tuple(blocks)
        self.elim_vars = tuple(elim_vars)
        self.rows = self._rows()

        # field offsets, least significant first
        self.raw_bits = FB * n
        self.tie_off = self.raw_bits
        off = self.tie_off + FB
        self.row_offs = []
        for _ in self.rows:
            self.row_offs.append(off)
            off += FB
        self.row_offs.reverse()  # row 0 is the most significant row
        self.pot_off = off
        off += FB
        self.block_off = off
        self.raw_mask = (1 << self.raw_bits) - 1
        self.guards = sum(GUARD_BIT << (FB * i) for i in range(n))
        self.tie_mask = FMASK << self.tie_off
        nblocks = max(self.blocks) + 1
        self._pos_key = []
        for pos in range(rank):
            k = (rank - 1 - pos) << self.tie_off
            k += self.shifts[pos] << self.row_offs[0]
            if module == "pot":
                k += (rank - 1 - pos) << self.pot_off
            k += (nblocks - 1 - self.blocks[pos]) << self.block_off
            self._pos_key.append(k)

    def _rows(self):
        n, w = self.nvars, self.weights
        if self.kind == "grevlex":
            rows = [list(w)]
            for j in range(1, n):
                keep = set(self.perm[: n - j])
                rows.append([1 if i in keep else 0 for i in range(n)])
            return rows
        if self.kind == "lex":
            return [[1 if i == v else 0 for i in range(n)] for v in self.perm]
        if self.kind == "elim":
            elim = set(self.elim_vars)
            rest = [v for v in self.perm if v not in elim]
            rows = [[1 if i in elim else 0 for i in range(n)]]
            rows.append([w[i] if i in rest else 0 for i in range(n)])
            for j in range(1, len(rest)):
                keep = set(rest[: len(rest) - j])
                rows.append([1 if i in keep else 0 for i in range(n)])
            ev = [v for v in self.perm if v in elim]
            for j in range(1, len(ev)):
                keep = set(ev[: len(ev) - j])
                rows.append([1 if i in keep else 0 for i in range(n)])
            return rows
        raise ValueError(f"unknown order kind {self.kind!r}")

    # encoding ---------------------------------------------------------

    def mono_key(self, e) -> int:
        k = 0
        for row, off in zip(self.rows, self.row_offs):
            k += sum(r * a for r, a in zip(row, e)) << off
        for i, a in enumerate(e):
            k += a << (FB * i)
        return k

    def key(self, e, pos=0) -> int:
        return self.mono_key(e) + self._pos_key[pos]

    def exps(self, key):
        raw = key & self.raw_mask
        return tuple((raw >> (FB * i)) & FMASK for i in range(self.nvars))

    def pos(self, key) -> int:
        return self.rank - 1 - ((key >> self.tie_off) & FMASK)

    def decode(self, key):
        return self.exps(key), self.pos(key)

    def degree(self, key) -> int:
        """Weighted degree of a term, component shift included."""
        e, pos = self.decode(key)
        return sum(a * b for a, b in zip(e, self.weights)) + self.shifts[pos]

    def divides(self, a, b) -> bool:
        """Does term ``a`` divide term ``b`` (same component)?"""
        if (a ^ b) & self.tie_mask:
            return False
        m = self.raw_mask
        g = self.guards
        return (((b & m) | g) - (a & m)) & g == g

    def lcm(self, a, b) -> int:
        ea, pa = self.decode(a)
        eb = self.exps(b)
        return self.key(tuple(max(x, y) for x, y in zip(ea, eb)), pa)

    def coprime(self, a, b) -> bool:
        ea, eb = self.exps(a), self.exps(b)
        return all(not (x and y) for x, y in zip(ea, eb))


def grevlex(nvars=4, perm=None, **kw) -> TermOrder:
    return TermOrder(nvars, "grevlex", perm, **kw)
