import json
import subprocess
import sys

import pytest

from freesurf.cli import CorpusEntry, ManifestError, load_manifest, main


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_analyze_text_report(capsys):
    code, out, _ = run(["analyze", "(x*w+y^2)^2+y^2*z^2"], capsys)
    assert code == 0
    assert "tameness: Tame" in out and "classification: Neither" in out


def test_analyze_json_free(capsys):
    code, out, _ = run(["analyze", "x*y*z*w", "--json"], capsys)
    rep = json.loads(out)
    assert code == 0
    assert rep["classification"]["status"] == "Free" and rep["classification"]["exponents"] == [1, 1, 1]
    for key in ("input", "hypotheses", "ar", "hilbert", "h0m_zero", "tameness", "bourbaki",
                "classification", "checks", "meta"):
        assert key in rep
    assert {"seed", "budget", "version"} <= set(rep["meta"])


@pytest.mark.parametrize("argv, code", [
    (["analyze", "x^2*y*w"], 2),
    (["analyze", "x^3+y^3"], 2),
    (["analyze", "x^2+y"], 2),
    (["analyze", "x^2+y^2+z^2+w^2"], 2),
    (["analyze", "x + q"], 2),
    (["analyze", "x*y*z*w", "--quiet"], 0),
    (["analyze", "(x^2+y^2+z*w)^4+y^4*z^4", "--quiet"], 0),
])
def test_exit_codes(argv, code, capsys):
    assert run(argv, capsys)[0] == code


def test_not_reduced_message_names_hypothesis(capsys):
    _, _, err = run(["analyze", "x^2*y*w"], capsys)
    assert "NotReduced" in err


def test_unknown_flag_is_an_error(capsys):
    with pytest.raises(SystemExit) as info:
        main(["analyze", "x*y*z*w", "--bogus"])
    assert info.value.code != 0


def test_bad_field_is_an_error(capsys):
    with pytest.raises(SystemExit):
        main(["analyze", "x*y*z*w", "--field", "prime:10"])


def test_byte_identical_json(capsys):
    argv = ["analyze", "(x*w+y^2)^2+y^2*z^2", "--json", "--seed", "11", "--budget", "3"]
    _, a, _ = run(argv, capsys)
    _, b, _ = run(argv, capsys)
    assert a == b


def test_analyze_from_file(tmp_path, capsys):
    p = tmp_path / "f.txt"
    p.write_text("x*y*z*w*(x+y)\n")
    code, out, _ = run(["analyze", "--file", str(p), "--json"], capsys)
    assert code == 0 and json.loads(out)["classification"]["exponents"] == [1, 1, 2]


def test_prime_field_flag(capsys):
    code, out, _ = run(["analyze", "x*y*z*w", "--field", "prime:32003", "--json"], capsys)
    rep = json.loads(out)
    assert code == 0 and rep["input"]["field"] == "prime:32003"
    assert rep["meta"]["certification"]["classification"].startswith("exact")


def test_max_ar_degree_flag(capsys):
    _, out, _ = run(["analyze", "x*y*z*w", "--json", "--max-ar-degree", "2"], capsys)
    assert json.loads(out)["ar"]["dims"] == {"0": 0, "1": 3, "2": 12}


def test_shipped_corpus_passes(capsys):
    code, out, _ = run(["corpus", "--jobs", "2"], capsys)
    assert code == 0, out
    names = [e.name for e in load_manifest()]
    for n in ("ex2.8i", "ex2.8ii", "ex2.8iii", "ex5.4", "xyzw", "smooth-quadric"):
        assert n in names


def test_wrong_expectation_fails(tmp_path, capsys):
    m = tmp_path / "m.json"
    m.write_text(json.dumps([{"name": "ex4.2", "f": "(x^2+y^2+z*w)^4+y^4*z^4",
                              "expect": {"hilbert": {"deg_sigma": 35}}}]))
    code, out, _ = run(["corpus", str(m)], capsys)
    assert code == 1
    assert "FAIL  ex4.2" in out and "expected 35, computed 36" in out


def test_empty_manifest(tmp_path, capsys):
    m = tmp_path / "m.json"
    m.write_text("[]")
    code, out, _ = run(["corpus", str(m)], capsys)
    assert code == 0 and "0/0" in out


@pytest.mark.parametrize("entry", [
    {"name": "a", "f": "x*y*z*w", "expect": {"bogus": 1}},
    {"name": "a", "f": "x*y*z*w", "expect": {"hilbert": {"bogus": 1}}},
    {"name": "a", "f": "x*y*z*w", "extra": 1},
    {"f": "x*y*z*w"},
])
def test_manifest_rejects_unknown_keys(entry, tmp_path, capsys):
    with pytest.raises(ManifestError):
        CorpusEntry.from_dict(entry)
    m = tmp_path / "m.json"
    m.write_text(json.dumps([entry]))
    assert run(["corpus", str(m)], capsys)[0] == 2


def test_corpus_json_output_in_manifest_order(tmp_path, capsys):
    m = tmp_path / "m.json"
    entries = [{"name": n, "f": f} for n, f in (("b", "x*y*z*w"), ("a", "x*y*z*w*(x+y)"))]
    m.write_text(json.dumps(entries))
    code, out, _ = run(["corpus", str(m), "--json", "--jobs", "2"], capsys)
    assert code == 0 and [e["name"] for e in json.loads(out)["entries"]] == ["b", "a"]


def test_oracle_check_xyzw(capsys):
    code, out, _ = run(["oracle-check", "x*y*z*w", "--max-k", "6", "--json"], capsys)
    rows = json.loads(out)["rows"]
    assert code == 0 and len(rows) == 7
    assert all(r["ar_dim"] == r["oracle"] and r["bridge_residual"] == 0 for r in rows)


def test_oracle_check_ex54_row(capsys):
    code, out, _ = run(["oracle-check", "x^12+x^11*y+y^11*z+w*(x^10*w+y^10*z)", "--max-k", "3",
                        "--json"], capsys)
    rows = json.loads(out)["rows"]
    assert code == 0
    assert rows[3]["ar_dim"] == rows[3]["oracle"] == 4
    assert all(r["ar_dim"] == r["oracle"] == 0 for r in rows[:3])


def test_oracle_check_inadmissible(capsys):
    assert run(["oracle-check", "x^2*y*w"], capsys)[0] == 2


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "freesurf", "analyze", "x*y*z*w", "--json"],
                         capture_output=True, text=True, check=False)
    assert out.returncode == 0 and json.loads(out.stdout)["classification"]["status"] == "Free"
