import json

import pytest

from intersection_graphs.certify import DATA_DIR
from intersection_graphs.cli import main


def run(capsys, *argv):
    rc = main(list(argv))
    out, err = capsys.readouterr()
    return rc, out, err


@pytest.mark.parametrize("argv, expected", [
    (["--catalog", "alternating:5"], "60"),
    (["--file", "m11.json"], "7920"),
    (["--file", str(DATA_DIR / "m23.json")], "10200960"),
])
def test_order(capsys, argv, expected):
    rc, out, _ = run(capsys, "order", *argv)
    assert rc == 0 and out.strip() == expected


def test_order_json(capsys):
    rc, out, _ = run(capsys, "order", "--catalog", "symmetric:4", "--format", "json")
    assert rc == 0 and json.loads(out)["order"] == 24


@pytest.mark.parametrize("catalog, first", [
    (["alternating:5"], "3"),
    (["direct_product", "cyclic:2", "cyclic:2"], "disconnected"),
    (["alternating:6"], "3"),
])
def test_diameter(capsys, catalog, first):
    rc, out, _ = run(capsys, "diameter", "--catalog", *catalog)
    lines = out.splitlines()
    assert rc == 0 and lines[0] == first
    assert lines[1].startswith("vertices: ") and lines[2].startswith("edges: ")


def test_diameter_json_mirrors_human(capsys):
    _, human, _ = run(capsys, "diameter", "--catalog", "alternating:5")
    _, js, _ = run(capsys, "diameter", "--catalog", "alternating:5", "--format", "json")
    d = json.loads(js)
    assert human.splitlines() == [str(d["diameter"]), f"vertices: {d['vertices']}", f"edges: {d['edges']}"]
    assert (d["vertices"], d["diameter"]) == (57, 3)


def test_diameter_export(capsys, tmp_path):
    rc, _, _ = run(capsys, "diameter", "--catalog", "alternating:4", "--export", str(tmp_path / "g.json"))
    assert rc == 0 and len(json.loads((tmp_path / "g.json").read_text())["vertices"]) == 8


def test_diameter_lattice_budget(capsys):
    rc, _, err = run(capsys, "diameter", "--catalog", "alternating:5", "--budget-lattice", "10")
    assert rc == 2 and "error" in err


def test_diameter_group_budget(capsys):
    rc, _, _ = run(capsys, "diameter", "--catalog", "alternating:6", "--budget-group", "100")
    assert rc == 2


@pytest.mark.parametrize("catalog, crit, diam, degenerate", [
    (["direct_product", "cyclic:4", "cyclic:2"], True, 2, False),
    (["alternating:5"], False, 3, False),
    (["quaternion8"], True, 1, True),
])
def test_diam2(capsys, catalog, crit, diam, degenerate):
    rc, out, _ = run(capsys, "diam2", "--catalog", *catalog)
    assert rc == 0
    assert f"no generating pair of prime-order elements: {crit}" in out
    assert f"diameter: {diam}" in out
    assert ("degenerate" in out) == degenerate
    _, js, _ = run(capsys, "diam2", "--catalog", *catalog, "--format", "json")
    d = json.loads(js)
    assert (d["criterion"], d["diameter"], bool(d["degenerate"])) == (crit, diam, degenerate)


def test_diam2_over_budget_still_reports_criterion(capsys):
    rc, out, _ = run(capsys, "diam2", "--catalog", "alternating:6", "--budget-group", "100")
    assert rc == 0 and "no generating pair of prime-order elements: False" in out and "not computed" in out


@pytest.mark.parametrize("name", ["a13_distance4.json", "a11_diam3_counting.json", "thm2_n19"])
def test_certify_verified(capsys, name):
    rc, out, _ = run(capsys, "certify", name, "--no-timings")
    assert rc == 0 and "verified:    yes" in out


def test_certify_a13_output(capsys):
    rc, out, _ = run(capsys, "certify", "a13_distance4.json")
    assert rc == 0 and "conclusion:  distance = 4 conditional" in out


@pytest.mark.slow
def test_certify_a23(capsys):
    rc, out, _ = run(capsys, "certify", "a23_distance4.json", "--no-timings", "--format", "json")
    d = json.loads(out)
    assert rc == 0 and d["conclusion"] == "distance = 4 conditional" and d["verified"]


def _tampered(tmp_path, edit):
    d = json.loads((DATA_DIR / "a13_distance4.json").read_text())
    edit(d)
    path = tmp_path / "w.json"
    path.write_text(json.dumps(d))
    return str(path)


def test_certify_tampered_square(capsys, tmp_path):
    # g_a^2 generates the same subgroup as g_a
    path = _tampered(tmp_path, lambda d: d["pair"].__setitem__("g_b", "(1,10,7,6,9,3,2,8,13,5,12,11,4)"))
    rc, out, _ = run(capsys, "certify", path, "--no-timings")
    assert rc == 1 and "conclusion:  distance = 0" in out


def test_certify_tampered_order(capsys, tmp_path):
    path = _tampered(tmp_path, lambda d: d["overgroups_a"][0].__setitem__("claimed_order", 5615))
    rc, out, _ = run(capsys, "certify", path, "--no-timings")
    assert rc == 1 and "[FAIL]" in out


@pytest.mark.parametrize("content", ["not json", json.dumps({"degree": 5})])
def test_certify_malformed(capsys, tmp_path, content):
    path = tmp_path / "bad.json"
    path.write_text(content)
    rc, _, err = run(capsys, "certify", str(path))
    assert rc == 2 and err.startswith("error:")


def test_certify_missing_file(capsys):
    rc, _, _ = run(capsys, "certify", "/nonexistent/zzz.json")
    assert rc == 2


def test_certify_budget(capsys):
    rc, _, _ = run(capsys, "certify", "a13_distance4.json", "--budget-elements", "10")
    assert rc == 2


def test_certify_json_threads_identical(capsys):
    _, one, _ = run(capsys, "certify", "a13_distance4.json", "--no-timings", "--format", "json", "--threads", "1")
    _, four, _ = run(capsys, "certify", "a13_distance4.json", "--no-timings", "--format", "json", "--threads", "4")
    assert one == four and "timings" not in json.loads(one)


def test_thm2_19(capsys):
    rc, out, _ = run(capsys, "thm2", "19", "--no-timings")
    assert rc == 0 and out.startswith("n = 19: admissible")


def test_thm2_13_reports(capsys):
    rc, out, _ = run(capsys, "thm2", "13", "--no-timings")
    assert rc == 1 and out.startswith("n = 13: inadmissible")
    assert "conclusion:" in out


def test_thm2_json(capsys):
    rc, out, _ = run(capsys, "thm2", "23", "--no-timings", "--format", "json")
    d = json.loads(out)
    assert rc == 0 and d["admissible"] and d["certificate"]["conclusion"] == "distance = 4 conditional"


@pytest.mark.parametrize("n", ["12", "3", "1"])
def test_thm2_not_prime(capsys, n):
    rc, _, err = run(capsys, "thm2", n)
    assert rc == 2 and "not a prime" in err


@pytest.mark.parametrize("argv", [
    ["order", "--catalog", "bogus:3"],
    ["order", "--catalog", "alternating:x"],
    ["order", "--file", "/nonexistent.json"],
    ["order", "--catalog", "alternating:5", "--threads", "0"],
    ["order", "--catalog", "alternating:5", "--budget-elements", "-1"],
])
def test_operational_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_two_group_sources_rejected(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["order", "--catalog", "alternating:5", "--file", "m11.json"])
    assert exc.value.code == 2
