"""Buchberger's algorithm on packed sparse term maps.

Polynomials (and module elements) are dicts ``packed term key -> coefficient``;
see :mod:`orders`. Pairs are processed by increasing sugar degree (normal
strategy) with the Gebauer-Moeller criteria. For homogeneous input with
positive weights, every degree is finished before the next one starts, so the
basis built is already reduced: a new leading term can never divide a term of
an older, lower-degree element.
"""

from __future__ import annotations

import heapq
from collections import defaultdict


class _Elt:
    __slots__ = ("poly", "lm", "deg", "ntail", "active")

    def __init__(self, poly, lm, deg, p):
        self.poly = poly
        self.lm = lm
        self.deg = deg
        self.active = True
        if p is None:
            self.ntail = [(k, -c) for k, c in poly.items() if k != lm]
        else:
            self.ntail = [(k, p - c) for k, c in poly.items() if k != lm]


class GBEngine:
    """One Groebner basis computation for a fixed order and field."""

    def __init__(self, order, field, *, homogeneous=True, product_criterion=True, max_degree=None):
        self.order = order
        self.field = field
        self.p = field.p
        self.homogeneous = homogeneous
        self.product_criterion = product_criterion and order.rank == 1
        self.max_degree = max_degree
        self.elts: list[_Elt] = []
        self.by_pos = defaultdict(list)
        self.pairs = {}  # (i, j) -> (sugar, lcm)
        self._cache = {}
        self._miss = set()
        self.pending = defaultdict(list)
        self.truncated = False
        # zero weights break the degree argument that keeps the basis reduced
        self.needs_interreduce = not homogeneous or min(order.weights) == 0

    # ------------------------------------------------------------------

    def _monic(self, poly):
        lm = max(poly)
        c = poly[lm]
        if self.p is None:
            if c != 1:
                inv = 1 / c
                poly = {k: v * inv for k, v in poly.items()}
        elif c != 1:
            inv = pow(c, -1, self.p)
            p = self.p
            poly = {k: v * inv % p for k, v in poly.items()}
        return poly, lm

    def _find_reducer(self, key):
        hit = self._cache.get(key)
        if hit is not None and hit[0].active:
            return hit
        if key in self._miss:
            return None
        div = self.order.divides
        for idx in self.by_pos[key & self.order.tie_mask]:
            e = self.elts[idx]
            if e.active and div(e.lm, key):
                hit = (e, key - e.lm)
                self._cache[key] = hit
                return hit
        self._miss.add(key)
        return None

    def reduce(self, poly, full=True):
        """Normal form of ``poly`` (a dict, consumed) against the current basis."""
        if not poly:
            return poly
        p = self.p
        heap = [-k for k in poly]
        heapq.heapify(heap)
        out = {}
        pop, push = heapq.heappop, heapq.heappush
        find = self._find_reducer
        while heap:
            k = -pop(heap)
            c = poly.pop(k, None)
            if c is None:
                continue
            hit = find(k)
            if hit is None:
                out[k] = c
                if not full:
                    out.update(poly)
                    return out
                continue
            e, du = hit
            get = poly.get
            if p is None:
                for k2, nc in e.ntail:
                    kk = k2 + du
                    v = get(kk)
                    if v is None:
                        poly[kk] = c * nc
                        push(heap, -kk)
                    else:
                        v += c * nc
                        if v:
                            poly[kk] = v
                        else:
                            del poly[kk]
            else:
                for k2, nc in e.ntail:
                    kk = k2 + du
                    v = get(kk)
                    if v is None:
                        poly[kk] = c * nc % p
                        push(heap, -kk)
                    else:
                        v = (v + c * nc) % p
                        if v:
                            poly[kk] = v
                        else:
                            del poly[kk]
        return out

    # ------------------------------------------------------------------

    def _spoly(self, i, j, lcm):
        a, b = self.elts[i], self.elts[j]
        du, dv = lcm - a.lm, lcm - b.lm
        p = self.p
        out = {k + du: (-c if p is None else p - c) for k, c in a.ntail}
        get = out.get
        for k, c in b.ntail:
            kk = k + dv
            v = get(kk)
            if v is None:
                out[kk] = c
            else:
                v = v + c if p is None else (v + c) % p
                if v:
                    out[kk] = v
                else:
                    del out[kk]
        return out

    def _add(self, poly, sugar):
        poly, lm = self._monic(poly)
        idx = len(self.elts)
        elt = _Elt(poly, lm, sugar, self.p)
        self._update(elt, idx)
        self.elts.append(elt)
        self.by_pos[lm & self.order.tie_mask].append(idx)
        self._miss.clear()
        return idx

    def _update(self, h, hidx):
        """Gebauer-Moeller installation of the new element ``h``."""
        order = self.order
        div, lcmf = order.divides, order.lcm
        tie = h.lm & order.tie_mask
        cands = []
        for idx in self.by_pos[tie]:
            g = self.elts[idx]
            if g.active:
                cands.append((idx, lcmf(h.lm, g.lm)))
        prod_ok = self.product_criterion
        kept = []
        for n, (idx, l1) in enumerate(cands):
            coprime = prod_ok and order.coprime(h.lm, self.elts[idx].lm)
            if coprime:
                kept.append((idx, l1, True))
                continue
            redundant = False
            for m, (_, l2) in enumerate(cands):
                if m == n:
                    continue
                if div(l2, l1) and (l2 != l1 or m < n):
                    redundant = True
                    break
            if not redundant:
                kept.append((idx, l1, False))
        # old pairs made redundant by h (chain criterion)
        hl = h.lm
        drop = []
        for (i, j), (_, l12) in self.pairs.items():
            if div(hl, l12) and lcmf(self.elts[i].lm, hl) != l12 and lcmf(self.elts[j].lm, hl) != l12:
                drop.append((i, j))
        for key in drop:
            del self.pairs[key]
        for idx, l1, coprime in kept:
            if coprime:
                continue
            g = self.elts[idx]
            s = max(h.deg + order.degree(l1) - order.degree(h.lm),
                    g.deg + order.degree(l1) - order.degree(g.lm))
            self.pairs[(idx, hidx)] = (s, l1)
        for idx in self.by_pos[tie]:
            g = self.elts[idx]
            if g.active and div(hl, g.lm):
                g.active = False

    # ------------------------------------------------------------------

    def add_generators(self, gens):
        for g in gens:
            g = {k: c for k, c in g.items() if c}
            if g:
                self.pending[self._sugar(g)].append(g)

    def run(self, gens=(), max_degree=None):
        """Extend the basis by ``gens`` and process every pair up to ``max_degree``."""
        self.add_generators(gens)
        if max_degree is None:
            max_degree = self.max_degree
        pending = self.pending
        self.truncated = False
        while pending or self.pairs:
            deg = min([*pending, *(s for s, _ in self.pairs.values())])
            if max_degree is not None and deg > max_degree:
                self.truncated = True
                break
            batch = [(None, g) for g in pending.pop(deg, [])]
            todo = sorted((l, ij) for ij, (s, l) in self.pairs.items() if s == deg)
            for _, ij in todo:
                del self.pairs[ij]
            batch.extend((ij, None) for _, ij in todo)
            new = []
            for ij, g in batch:
                if g is None:
                    i, j = ij
                    lcm = self.order.lcm(self.elts[i].lm, self.elts[j].lm)
                    g = self._spoly(i, j, lcm)
                h = self.reduce(g)
                if h:
                    new.append(self._add(h, deg))
            if len(new) > 1 and not self.needs_interreduce:
                self._back_substitute(new)
        return self.basis()

    def _sugar(self, g):
        if self.homogeneous:
            return self.order.degree(next(iter(g)))
        return max(self.order.degree(k) for k in g)

    def _back_substitute(self, idxs):
        """Clear leading terms of same-degree elements out of earlier tails."""
        p = self.p
        for pos in range(len(idxs) - 2, -1, -1):
            e = self.elts[idxs[pos]]
            poly = e.poly
            changed = False
            for later in idxs[pos + 1:]:
                g = self.elts[later]
                c = poly.get(g.lm)
                if c is None:
                    continue
                changed = True
                del poly[g.lm]
                for k, nc in g.ntail:
                    v = poly.get(k)
                    add = c * nc if p is None else c * nc % p
                    v = add if v is None else (v + add if p is None else (v + add) % p)
                    if v:
                        poly[k] = v
                    else:
                        poly.pop(k, None)
            if changed:
                e.ntail = _Elt(poly, e.lm, e.deg, p).ntail

    def basis(self):
        """The active elements, inter-reduced if needed, sorted by leading term."""
        act = [e for e in self.elts if e.active]
        if self.needs_interreduce:
            act = self._interreduce(act)
        act.sort(key=lambda e: e.lm)
        return [e.poly for e in act]

    def _interreduce(self, act):
        div = self.order.divides
        act = [e for e in act if not any(o is not e and div(o.lm, e.lm) for o in act)]
        out = []
        for e in act:
            others = [o for o in act if o is not e]
            sub = GBEngine(self.order, self.field, homogeneous=False)
            for o in others:
                sub.elts.append(o)
                sub.by_pos[o.lm & self.order.tie_mask].append(len(sub.elts) - 1)
            tail = dict(e.poly)
            c = tail.pop(e.lm)
            red = sub.reduce(tail)
            red[e.lm] = c
            poly, lm = self._monic(red)
            out.append(_Elt(poly, lm, e.deg, self.p))
        return out


def groebner_packed(gens, order, field, *, homogeneous=None, max_degree=None):
    """Reduced Groebner basis (list of packed dicts) of ``gens``."""
    if homogeneous is None:
        homogeneous = all(len({order.degree(k) for k in g}) <= 1 for g in gens)
    eng = GBEngine(order, field, homogeneous=homogeneous, max_degree=max_degree)
    return eng.run(gens), eng
