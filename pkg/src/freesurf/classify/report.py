"""The full analysis pipeline and its serializable report."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .. import __version__
from ..groebner import GradedSubmodule, SyzVector
from ..jacobian import ar_module, build_surface, h0m_dims, is_syzygy, select_pairs
from ..polyring import QQ, FieldSpec, Poly, gcd_list, rational_reconstruction
from .bourbaki import bourbaki_ideal
from .freeness import FREE, classify, saito_constant, symmetric_functions
from .tameness import (
    MINORS_GCD_UNIT,
    NOT_TAME,
    NOT_TAME_TESTED,
    TAME,
    dependence_relation,
    minors,
    tameness,
)
from .theorems import TheoremInputs, first_new_generator_degree, verify_theorems


@dataclass(frozen=True)
class AnalysisConfig:
    field: FieldSpec = QQ
    seed: int = 0
    budget: int = 8
    max_ar_degree: int | None = None


def _num(x):
    """JSON-friendly exact number: int when integral, else the string p/q."""
    if x is None:
        return None
    x = Fraction(x)
    return int(x) if x.denominator == 1 else str(x)


def _vec(v: SyzVector):
    return [str(c) for c in v.primitive()]


@dataclass
class SurfaceReport:
    input: dict
    hypotheses: dict
    ar: dict | None = None
    hilbert: dict | None = None
    h0m_zero: bool | None = None
    tameness: dict | None = None
    bourbaki: dict | None = None
    classification: dict | None = None
    checks: list = field(default_factory=list)
    meta: dict = field(default_factory=dict)
    error: dict | None = None
    context: dict | None = field(default=None, compare=False, repr=False)

    KEYS = ("input", "hypotheses", "ar", "hilbert", "h0m_zero", "tameness", "bourbaki",
            "classification", "checks", "meta", "error")

    @property
    def admissible(self) -> bool:
        return self.error is None

    def to_dict(self) -> dict:
        out = {k: getattr(self, k) for k in self.KEYS}
        if out["error"] is None:
            del out["error"]
        return out

    @classmethod
    def from_dict(cls, data: dict) -> SurfaceReport:
        unknown = set(data) - set(cls.KEYS)
        if unknown:
            raise ValueError(f"unknown report keys: {sorted(unknown)}")
        return cls(**{k: data[k] for k in cls.KEYS if k in data})

    def to_json(self, indent=2) -> str:
        return json.dumps(self.to_dict(), indent=indent, sort_keys=False)

    @classmethod
    def from_json(cls, text: str) -> SurfaceReport:
        return cls.from_dict(json.loads(text))

    def check(self, name):
        return next((c for c in self.checks if c["name"] == name), None)


# re-certification over Q of certificates found modulo p ----------------------


def _lift_poly(p: Poly) -> Poly | None:
    out = {}
    for e, c in p.terms.items():
        q = rational_reconstruction(int(c), p.field.p)
        if q is None:
            return None
        out[e] = q
    return Poly(out, QQ, p.nvars)


def _lift_vec(v: SyzVector) -> SyzVector | None:
    """Rational lift of a vector known up to scalar; tries each coefficient as the unit."""
    fld = v.field
    scales = dict.fromkeys(c for comp in v for c in comp.terms.values())
    for lead in scales:
        comps = [_lift_poly(c.scale(fld.inv(lead))) for c in v]
        if all(c is not None for c in comps):
            return SyzVector(comps).primitive()
    return None


def recertify(f_q: Poly, verdict, classification) -> dict:
    """Re-verify prime-field certificates over Q; returns a tag per certificate."""
    tags = {"dimensions": "mod p"}
    if verdict.status == TAME:
        tag = "mod p"
        r1, r2 = _lift_vec(verdict.pair.rho1), _lift_vec(verdict.pair.rho2)
        if (verdict.certificate_kind == MINORS_GCD_UNIT and r1 and r2
                and is_syzygy(r1, f_q) and is_syzygy(r2, f_q)):
            g = gcd_list(minors(r1, r2))
            if g and g.is_constant():
                tag = "exact"
        tags["tameness"] = tag
    elif verdict.status == NOT_TAME:
        gens = [_lift_vec(g) for g in verdict.structural.generators]
        tag = "mod p"
        if all(gens) and all(is_syzygy(g, f_q) for g in gens):
            rel = dependence_relation(gens[0], gens[1], gens[2])
            if rel is not None and rel.c.degree() > 0:
                tag = "relation exact, minimality mod p"
        tags["tameness"] = tag
    elif verdict.status == NOT_TAME_TESTED:
        ok = True
        for pair, w in verdict.witnesses:
            r1, r2, rho = _lift_vec(pair.rho1), _lift_vec(pair.rho2), _lift_vec(w.rho)
            if not (r1 and r2 and rho and all(is_syzygy(v, f_q) for v in (r1, r2, rho))):
                ok = False
                break
            rel = dependence_relation(r1, r2, rho)
            if rel is None or rel.c.degree() <= 0 or GradedSubmodule([r1, r2], 4, QQ).contains(rho):
                ok = False
                break
        tags["tameness"] = "exact witnesses" if ok else "mod p"
    if classification.status == FREE:
        gens = classification.details.get("_gens")
        lifted = [_lift_vec(g) for g in gens] if gens else []
        c = saito_constant(f_q, lifted) if lifted and all(lifted) else None
        tags["classification"] = "exact (Saito determinant)" if c else "mod p"
    else:
        tags["classification"] = "mod p"
    return tags


# pipeline --------------------------------------------------------------------


def _tameness_dict(v) -> dict:
    out = {"status": v.status, "pair": None, "certificate": None}
    if v.status == TAME:
        out["pair"] = [_vec(v.pair.rho1), _vec(v.pair.rho2)]
        out["certificate"] = {"kind": v.certificate_kind, "pair_label": v.pair.label,
                              "pairs_tested": v.tested}
    elif v.status == NOT_TAME:
        st = v.structural
        r = st.relation
        out["certificate"] = {
            "kind": "Structural",
            "generators": [_vec(g) for g in st.generators],
            "rank": st.rank,
            "relation": {"c": str(r.c), "c1": str(r.c1), "c2": str(r.c2),
                         "reads": "c*g3 = c1*g1 + c2*g2"},
        }
    elif v.status == NOT_TAME_TESTED:
        out["certificate"] = {
            "kind": "Witnesses",
            "seed": v.seed,
            "witnesses": [
                {"pair_label": p.label, "pair": [_vec(p.rho1), _vec(p.rho2)], "rho": _vec(w.rho),
                 "c": str(w.c), "c1": str(w.c1), "c2": str(w.c2)}
                for p, w in v.witnesses
            ],
        }
    return out


def classify_surface(f: Poly, config: AnalysisConfig = AnalysisConfig()) -> SurfaceReport:
    """build surface -> AR(f) -> Hilbert data -> tameness -> B(f) -> classification -> checks."""
    f_q = f
    fld = config.field
    work = f.to_field(fld) if fld != f.field else f
    s = build_surface(work, check=False)
    rep = SurfaceReport(
        input={"f": str(f_q), "degree": f.degree(), "field": fld.name},
        hypotheses={"homogeneous": s.homogeneous, "reduced": s.squarefree,
                    "cone": None if s.not_a_cone is None else not s.not_a_cone,
                    "dim_sigma": s.dim_sigma},
        meta={"seed": config.seed, "budget": config.budget, "version": __version__},
    )
    err = s.violation()
    if err is not None:
        rep.error = {"hypothesis": err.hypothesis, "kind": type(err).__name__, "message": str(err)}
        if s.hilbert is not None:
            rep.hilbert = _hilbert_dict(s)
        return rep

    ar = ar_module(s)
    top = config.max_ar_degree if config.max_ar_degree is not None else ar.e3 + 4
    rep.ar = {"min_gen_degrees": list(ar.degrees), "e1": ar.e1, "e2": ar.e2, "e3": ar.e3,
              "mdr": ar.mdr, "p": first_new_generator_degree(ar),
              "dims": {str(k): ar.dim(k) for k in range(0, top + 1)},
              "min_gens": [_vec(g) for g in ar.min_gens]}
    rep.hilbert = _hilbert_dict(s)
    h0m = h0m_dims(s)
    rep.h0m_zero = h0m.is_zero
    rep.ar["h0m_dims"] = {str(k): v for k, v in h0m.dims.items() if v}

    verdict = tameness(work, ar, config.seed, config.budget)
    pair = verdict.pair
    if pair is None:
        pairs = select_pairs(ar, config.seed, 0)
        pair = pairs[0] if pairs else None
    bourbaki = bourbaki_ideal(work, pair.rho1, pair.rho2, ar) if pair else None
    cls = classify(work, ar, verdict, bourbaki if verdict.is_tame else None)
    rep.tameness = _tameness_dict(verdict)
    if bourbaki is not None:
        rep.bourbaki = {"dim_B1": bourbaki.dim_B1, "unit_ideal": bourbaki.is_unit_ideal,
                        "min_gens": [str(g) for g in bourbaki.min_gens],
                        "min_gen_degrees": bourbaki.min_gen_degrees,
                        "pair_label": pair.label, "pair_is_tame": verdict.is_tame}
    s1, s2, s3 = cls.s
    rep.classification = {"status": cls.status,
                          "exponents": list(cls.exponents) if cls.exponents else None,
                          "s1": s1, "s2": s2, "s3": s3,
                          "details": {k: v for k, v in cls.details.items() if not k.startswith("_")}}
    checks = verify_theorems(TheoremInputs(s, ar, verdict, bourbaki if verdict.is_tame else None,
                                           cls, h0m.is_zero))
    rep.checks = [c.as_dict() for c in checks]
    if fld.is_prime:
        if cls.status == FREE:
            cls.details["_gens"] = ar.min_gens
        rep.meta["certification"] = recertify(f_q, verdict, cls)
    rep.context = {"surface": s, "ar": ar, "tameness": verdict, "bourbaki": bourbaki,
                   "classification": cls, "h0m": h0m, "checks": checks}
    return rep


def _hilbert_dict(s) -> dict:
    hd = s.hilbert
    return {"hp_a": _num(hd.a), "hp_b": _num(hd.b), "stab_index": hd.stab_index,
            "dim_sigma": hd.proj_dim_sigma, "deg_sigma": hd.deg_sigma,
            "hp": [_num(c) for c in hd.hp]}


__all__ = ["AnalysisConfig", "SurfaceReport", "classify_surface", "recertify",
           "symmetric_functions"]
