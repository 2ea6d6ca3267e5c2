"""Command-line front end: analyze, corpus, oracle-check.

Exit codes: 0 completed, 2 inadmissible or unparseable input, 1 internal error
or a failing corpus entry.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from importlib import resources

from .classify.report import AnalysisConfig, SurfaceReport, classify_surface
from .jacobian import (
    InadmissibleSurface,
    OracleSkipped,
    ar_dim,
    ar_dim_oracle,
    ar_module,
    bridge_residual,
    build_surface,
)
from .polyring import FieldSpec, PolySyntaxError, parse_polynomial

EXIT_OK, EXIT_INTERNAL, EXIT_INPUT = 0, 1, 2

# keys an expectation may name, per report section; None marks a scalar section
EXPECT_KEYS = {
    "input": {"f", "degree", "field"},
    "hypotheses": {"homogeneous", "reduced", "cone", "dim_sigma"},
    "ar": {"min_gen_degrees", "e1", "e2", "e3", "mdr", "p", "dims", "h0m_dims"},
    "hilbert": {"hp_a", "hp_b", "stab_index", "dim_sigma", "deg_sigma", "hp"},
    "h0m_zero": None,
    "tameness": {"status"},
    "bourbaki": {"dim_B1", "unit_ideal", "min_gen_degrees"},
    "classification": {"status", "exponents", "s1", "s2", "s3"},
    "error": {"hypothesis", "kind"},
}


class ManifestError(ValueError):
    """A corpus manifest that does not match the CorpusEntry shape."""


@dataclass
class CorpusEntry:
    name: str
    f: str
    expect: dict = field(default_factory=dict)

    @classmethod
    def from_dict(cls, data) -> CorpusEntry:
        if not isinstance(data, dict):
            raise ManifestError(f"corpus entry must be an object, got {type(data).__name__}")
        extra = set(data) - {"name", "f", "expect"}
        if extra:
            raise ManifestError(f"unknown entry keys {sorted(extra)}")
        if "name" not in data or "f" not in data:
            raise ManifestError("corpus entry needs 'name' and 'f'")
        expect = data.get("expect", {}) or {}
        for sec, val in expect.items():
            if sec not in EXPECT_KEYS:
                raise ManifestError(f"{data['name']}: unknown expectation section {sec!r}")
            allowed = EXPECT_KEYS[sec]
            if allowed is None:
                continue
            if not isinstance(val, dict):
                raise ManifestError(f"{data['name']}: section {sec!r} must be an object")
            bad = set(val) - allowed
            if bad:
                raise ManifestError(f"{data['name']}: unknown keys in {sec!r}: {sorted(bad)}")
        return cls(data["name"], data["f"], expect)


def load_manifest(path=None) -> list[CorpusEntry]:
    if path is None:
        text = resources.files("freesurf").joinpath("data/corpus.json").read_text()
    else:
        with open(path) as fh:
            text = fh.read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ManifestError(f"manifest is not valid JSON: {exc}") from None
    if not isinstance(data, list):
        raise ManifestError("manifest must be a JSON array")
    return [CorpusEntry.from_dict(e) for e in data]


def compare(expect: dict, report: dict) -> list[str]:
    """Mismatches between a partial expectation and a report dict."""
    out = []
    for sec, want in expect.items():
        got = report.get(sec)
        if isinstance(want, dict):
            got = got or {}
            for k, v in want.items():
                if got.get(k) != v:
                    out.append(f"{sec}.{k}: expected {v!r}, computed {got.get(k)!r}")
        elif got != want:
            out.append(f"{sec}: expected {want!r}, computed {got!r}")
    return out


# text rendering ------------------------------------------------------------------


def render_text(rep: SurfaceReport) -> str:
    lines = [f"f = {rep.input['f']}  (degree {rep.input['degree']}, field {rep.input['field']})"]
    h = rep.hypotheses
    lines.append(f"hypotheses: reduced={h['reduced']} cone={h['cone']} dim_sigma={h['dim_sigma']}")
    if rep.error:
        lines.append(f"inadmissible: {rep.error['kind']} ({rep.error['hypothesis']}): {rep.error['message']}")
        return "\n".join(lines)
    a, hb = rep.ar, rep.hilbert
    lines.append(f"AR(f): generator degrees {a['min_gen_degrees']}, "
                 f"(e1,e2,e3) = ({a['e1']},{a['e2']},{a['e3']}), mdr = {a['mdr']}, p = {a['p']}")
    b0 = str(hb["hp_b"])
    b0 = f"- {b0[1:]}" if b0.startswith("-") else f"+ {b0}"
    lines.append(f"HP(M(f)) = {hb['hp_a']}k {b0} for k >= {hb['stab_index']}, "
                 f"deg Sigma = {hb['deg_sigma']}")
    lines.append(f"H^0_m(M(f)) = 0: {rep.h0m_zero}")
    t = rep.tameness
    cert = t["certificate"] or {}
    extra = f" via {cert['kind']}" if cert.get("kind") else ""
    if cert.get("pair_label"):
        extra += f" on pair {cert['pair_label']}"
    lines.append(f"tameness: {t['status']}{extra}")
    if cert.get("kind") == "Structural":
        r = cert["relation"]
        lines.append(f"  ({r['c']})*g3 = ({r['c1']})*g1 + ({r['c2']})*g2")
    if rep.bourbaki:
        b = rep.bourbaki
        lines.append(f"B(f): dim B_1 = {b['dim_B1']}, unit ideal = {b['unit_ideal']}, "
                     f"generator degrees {b['min_gen_degrees']}")
    c = rep.classification
    exps = f" {tuple(c['exponents'])}" if c["exponents"] else ""
    lines.append(f"classification: {c['status']}{exps}")
    for chk in rep.checks:
        if not chk["applicable"]:
            mark = "n/a "
        else:
            mark = "PASS" if chk["pass"] else "FAIL"
        lines.append(f"  [{mark}] {chk['name']}")
    cert_meta = rep.meta.get("certification")
    if cert_meta:
        lines.append("certification: " + ", ".join(f"{k}={v}" for k, v in cert_meta.items()))
    return "\n".join(lines)


# commands ------------------------------------------------------------------------


def _config(args) -> AnalysisConfig:
    return AnalysisConfig(field=args.field, seed=args.seed, budget=args.budget,
                          max_ar_degree=args.max_ar_degree)


def _read_expr(args) -> str:
    if args.file:
        with open(args.file) as fh:
            return fh.read().strip()
    if args.expr is None:
        raise PolySyntaxError("no polynomial given; pass an expression or --file")
    return args.expr


def _emit(text, args):
    if not args.quiet:
        print(text)


def cmd_analyze(args) -> int:
    try:
        f = parse_polynomial(_read_expr(args))
    except (PolySyntaxError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    rep = classify_surface(f, _config(args))
    _emit(rep.to_json() if args.json else render_text(rep), args)
    if rep.error:
        print(f"inadmissible input: {rep.error['kind']}: {rep.error['message']}", file=sys.stderr)
        return EXIT_INPUT
    return EXIT_OK


def _run_entry(entry: CorpusEntry, config: AnalysisConfig):
    try:
        rep = classify_surface(parse_polynomial(entry.f), config)
    except Exception as exc:  # reported per entry
        return entry.name, [f"internal error: {type(exc).__name__}: {exc}"]
    return entry.name, compare(entry.expect, rep.to_dict())


def cmd_corpus(args) -> int:
    try:
        entries = load_manifest(args.manifest)
    except (ManifestError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    config = _config(args)
    if args.jobs > 1 and len(entries) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_run_entry, entries, [config] * len(entries)))
    else:
        results = [_run_entry(e, config) for e in entries]
    failed = 0
    rows = []
    for name, problems in results:
        rows.append({"name": name, "pass": not problems, "mismatches": problems})
        failed += bool(problems)
    if args.json:
        _emit(json.dumps({"entries": rows, "passed": len(rows) - failed, "failed": failed}, indent=2),
              args)
    else:
        out = [f"{'PASS' if r['pass'] else 'FAIL'}  {r['name']}" +
               "".join(f"\n      {m}" for m in r["mismatches"]) for r in rows]
        out.append(f"{len(rows) - failed}/{len(rows)} entries pass")
        _emit("\n".join(out), args)
    return EXIT_OK if failed == 0 else EXIT_INTERNAL


def cmd_oracle_check(args) -> int:
    try:
        f = parse_polynomial(_read_expr(args)).to_field(args.field)
    except (PolySyntaxError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    s = build_surface(f, check=False)
    err = s.violation()
    if err is not None:
        print(f"inadmissible input: {type(err).__name__}: {err}", file=sys.stderr)
        return EXIT_INPUT
    ar = ar_module(s)
    top = args.max_k if args.max_k is not None else ar.e3 + 2
    rows, ok = [], True
    for k in range(top + 1):
        got = ar_dim(ar, k)
        try:
            want = ar_dim_oracle(f, k)
        except OracleSkipped:
            want = None
        res = bridge_residual(ar, k + s.d - 1)
        ok &= (want is None or want == got) and res == 0
        rows.append({"k": k, "ar_dim": got, "oracle": want, "bridge_residual": res})
    if args.json:
        _emit(json.dumps({"rows": rows, "pass": ok}, indent=2), args)
    else:
        out = ["   k  ar_dim  oracle  residual"]
        for r in rows:
            o = "skipped" if r["oracle"] is None else r["oracle"]
            out.append(f"{r['k']:>4}  {r['ar_dim']:>6}  {o:>6}  {r['bridge_residual']:>8}")
        out.append("all agree" if ok else "MISMATCH")
        _emit("\n".join(out), args)
    return EXIT_OK if ok else EXIT_INTERNAL


# argument parsing ----------------------------------------------------------------


def _field(text):
    try:
        return FieldSpec.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _nonneg(text):
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", type=_field, default=FieldSpec.rationals(),
                        help="rational (default) or prime:<p>")
    common.add_argument("--seed", type=_nonneg, default=0, help="seed for the random pair search")
    common.add_argument("--budget", type=_nonneg, default=8, help="number of random pairs to try")
    common.add_argument("--max-ar-degree", type=_nonneg, default=None,
                        help="top degree of the reported dim AR(f)_k table (default e3+4)")
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("--quiet", action="store_true", help="suppress the report; exit code only")

    p = argparse.ArgumentParser(prog="freesurf", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", parents=[common], help="analyze one surface")
    a.add_argument("expr", nargs="?", help="homogeneous polynomial in x, y, z, w")
    a.add_argument("--file", help="read the polynomial from a file")
    a.set_defaults(run=cmd_analyze)

    c = sub.add_parser("corpus", parents=[common], help="run a regression manifest")
    c.add_argument("manifest", nargs="?", default=None,
                   help="JSON array of {name, f, expect}; defaults to the shipped corpus")
    c.add_argument("--jobs", type=int, default=1, help="entries analyzed concurrently")
    c.set_defaults(run=cmd_corpus)

    o = sub.add_parser("oracle-check", parents=[common],
                       help="compare dim AR(f)_k with a dense rank computation")
    o.add_argument("expr", nargs="?")
    o.add_argument("--file")
    o.add_argument("--max-k", type=_nonneg, default=None, help="top degree (default e3+2)")
    o.set_defaults(run=cmd_oracle_check)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.run(args)
    except InadmissibleSurface as exc:
        print(f"inadmissible input: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except Exception as exc:
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
