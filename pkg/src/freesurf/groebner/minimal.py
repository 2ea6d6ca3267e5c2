"""Minimal homogeneous generating sets, degree by degree."""

from __future__ import annotations

from itertools import groupby

from .engine import GBEngine
from .modules import GradedSubmodule, pack_vector


def _independent(vectors, field):
    """Indices of a maximal linearly independent subset, scanning in order.

    Vectors are packed dicts; elimination is on their largest keys.
    """
    p = field.p
    pivots = {}  # lead key -> monic row
    keep = []
    for idx, v in enumerate(vectors):
        v = dict(v)
        while v:
            lead = max(v)
            row = pivots.get(lead)
            if row is None:
                break
            c = v[lead]
            for k, a in row.items():
                nv = v.get(k, 0) - c * a
                if p is not None:
                    nv %= p
                if nv:
                    v[k] = nv
                else:
                    v.pop(k, None)
        if v:
            lead = max(v)
            inv = field.inv(v[lead])
            pivots[lead] = {k: (a * inv if p is None else a * inv % p) for k, a in v.items()}
            keep.append(idx)
    return keep


def minimal_generators(module: GradedSubmodule, candidates=None):
    """(generators, degrees) of a minimal homogeneous generating set.

    A candidate of degree k is kept when its normal form modulo the span of the
    kept lower-degree generators (and of earlier kept ones in degree k) is
    nonzero. Candidates default to the reduced Groebner basis, which generates.
    """
    cands = list(module.gb if candidates is None else candidates)
    cands = [module._as_vector(c) for c in cands]
    cands = [c for c in cands if not c.is_zero()]
    cands.sort(key=module.gen_degree)
    order = module.order
    eng = GBEngine(order, module.field)
    kept = []
    for deg, group in groupby(cands, key=module.gen_degree):
        group = list(group)
        eng.run(max_degree=deg)
        nfs = [eng.reduce(pack_vector(g, order)) for g in group]
        idx = [i for i in _independent(nfs, module.field) if nfs[i]]
        chosen = [group[i] for i in idx]
        kept.extend(chosen)
        eng.add_generators(pack_vector(g, order) for g in chosen)
    return kept, [module.gen_degree(g) for g in kept]
