import json

from click.testing import CliRunner

from gtx.cli import main


def run(*args):
    result = CliRunner().invoke(main, [str(a) for a in args])
    return result.exit_code, json.loads(result.output) if result.output.strip() else None


def test_admissible():
    code, out = run("admissible", "--n", 3, "--p", 3, "--q", 2, "--orbit", "min")
    assert code == 0
    assert out["orbit_for_q"]["name"] == "minimal"
    assert [w["var_dimension"] for w in out["weights"]] == [4]


def test_admissible_reports_errors():
    code, out = run("admissible", "--n", 3, "--p", 3, "--q", 2, "--orbit", "prin")
    assert code == 2 and "q >= n" in out["error"]


def test_classify_single_family_verified():
    code, out = run("classify", "--p", 3, "--q", 2, "--family", "L1", "--radius", 3, "--verify")
    assert code == 0 and out["pass"]
    assert out["families"][0]["closure"]["pass"]


def test_classify_failure_sets_exit_code():
    code, out = run("classify", "--p", 3, "--q", 2, "--family", "L18", "--radius", 3,
                    "--verify", "--probes", 5, "--convention", "canonical")
    assert code == 1 and not out["pass"]


def test_classify_unknown_family():
    code, out = run("classify", "--p", 3, "--q", 2, "--family", "L99")
    assert code == 2 and "unknown family" in out["error"]


def test_classify_skips_empty_orbits():
    code, out = run("classify", "--p", 3, "--q", 2, "--family", "principal", "--radius", 2)
    assert code == 0 and len(out["skipped"]) == 10


def test_induce():
    code, out = run("induce", "--n", 3, "--p", 4, "--q", 3, "--radius", 2, "--verify", "--probes", 5)
    assert code == 0 and out["pass"]
    assert out["induced"]["k_sub"] == "-2/3"


def test_twist_and_relations(tmp_path):
    code, fam = run("classify", "--p", 3, "--q", 2, "--family", "L5", "--radius", 2)
    assert code == 0
    path = tmp_path / "l5.json"
    path.write_text(json.dumps(fam))
    code, out = run("twist", "--alpha", 32, "--a", "1/2", "--spec", path, "--radius", 1,
                    "--probes", 2, "--verify-lemma")
    assert code == 0 and out["pass"]
    assert out["relabel"] == [3, 1, 2]
    code, out = run("relations", "--spec", path, "--radius", 1, "--probes", 3)
    assert code == 0 and out["pass"]


def test_twist_rejects_positive_roots(tmp_path):
    path = tmp_path / "seed.json"
    path.write_text(json.dumps({"n": 3, "rows": [["1/5"], ["1/3", "2/3"], ["0", "1/7", "2/7"]]}))
    code, out = run("twist", "--alpha", 12, "--spec", path)
    assert code == 2 and "negative root" in out["error"]
