import contextlib
import io
import json
import os
import tempfile
from fractions import Fraction

from sctx import Sctx, cone, fileio, scenario, sdist


def run(*args):
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        try:
            code = Sctx.commandline(list(args))
        except SystemExit as e:
            code = e.code
    return code, out.getvalue(), err.getvalue()


def test_contextual_verdict():
    code, out, _ = run("dist", "contextual", "--scenario", "chsh.json", "--dist", "prbox.json")
    assert code == 0
    data = json.loads(out)
    assert data["results"]["verdict"] == "contextual"
    assert data["results"]["certificate"]["functional"]["coefficients"]
    assert set(data["inputs"]) == {"chsh.json", "prbox.json"}
    assert "elapsed" not in data


def test_output_is_deterministic():
    args = ("dist", "contextual", "--scenario", "chsh.json", "--dist", "prbox.json")
    assert run(*args)[1] == run(*args)[1]


def test_evaluate():
    code, out, _ = run("bell", "evaluate", "--scenario", "chsh", "--dist", "prbox")
    assert code == 0
    rows = {row["name"]: row for row in json.loads(out)["results"]["evaluations"]}
    assert rows["chain4-lower"] == {"name": "chain4-lower", "lhs": "1/1", "satisfied": False}
    assert rows["chain4-upper"]["lhs"] == "-1/1"


def test_lift():
    code, out, _ = run("bell", "lift", "--m", "2")
    assert code == 0
    data = json.loads(out)
    assert data["name"] == "cone(chsh)"
    assert len(data["inequalities"]) == 16
    assert fileio.family_from_json(data) == fileio.parse_family("cone_chsh_lifted.json")


def test_check():
    code, out, _ = run("bell", "check", "--scenario", "chsh", "--m", "2", "--samples", "20", "--seed", "1")
    assert code == 0
    data = json.loads(out)
    assert data["seed"] == 1
    assert data["results"]["passed"]
    assert data["results"]["samples"] == 20


def test_vertices():
    code, out, _ = run("polytope", "vertices", "--scenario", "chsh.json", "--m", "2")
    assert code == 0
    results = json.loads(out)["results"]
    assert (results["count"], results["noncontextual"], results["contextual"]) == (24, 16, 8)
    assert len(results["vertices"]) == 24


def test_scenario_commands():
    code, out, _ = run("scenario", "new", "--kind", "line", "--n", "3")
    assert code == 0
    assert fileio.scenario_from_json(json.loads(out)).same_as(scenario.build_line(3))
    code, out, _ = run("scenario", "suspend", "--scenario", "chsh")
    assert fileio.scenario_from_json(json.loads(out)).same_as(scenario.suspension(scenario.build_cycle(4)))
    code, out, _ = run("scenario", "validate", "--scenario", "cone_chsh")
    results = json.loads(out)["results"]
    assert results["valid"] and results["connected"]
    assert results["generators"] == ["(c,s1)", "(c,s2)", "(c,s3)", "(c,s4)"]


def test_decompose():
    x = scenario.build_cycle(4)
    point = cone.JoinPoint([(Fraction(1, 4), sdist.pr_box(x)), (Fraction(3, 4), sdist.uniform_sdist(x, 2))])
    p = cone.cone_assemble(point, x)
    with tempfile.TemporaryDirectory() as directory:
        path = os.path.join(directory, "cone_point.json")
        fileio.write(fileio.sdist_to_json(p), path)
        code, out, _ = run("dist", "decompose", "--scenario", "cone_chsh", "--dist", path)
    assert code == 0
    results = json.loads(out)["results"]
    assert results["join"][0][0] == "1/4"
    assert results["components"] == ["contextual", "noncontextual"]


def test_invalid_distribution():
    x = scenario.build_cycle(4)
    data = fileio.sdist_to_json(sdist.pr_box(x))
    data["dists"]["s2"] = [{"outcome": [0, 0], "prob": "1/1"}]
    with tempfile.TemporaryDirectory() as directory:
        path = os.path.join(directory, "bad.json")
        fileio.write(data, path)
        code, out, err = run("dist", "validate", "--scenario", "chsh", "--dist", path)
    assert code == 2
    assert out == ""
    assert "marginal mismatch" in err


def test_malformed_distribution_entries():
    x = scenario.build_cycle(4)
    for generator, entry, rule in (
        ("s1", {"outcome": [0, 0], "prob": "half"}, "prob"),
        ("s2", {"outcome": [0, 0, 0], "prob": "1/2"}, "arity"),
    ):
        data = fileio.sdist_to_json(sdist.pr_box(x))
        data["dists"][generator][0] = entry
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, "bad.json")
            fileio.write(data, path)
            code, out, err = run("dist", "contextual", "--scenario", "chsh", "--dist", path)
        assert code == 2
        assert out == ""
        assert f"{generator}: {rule}" in err
        assert "internal error" not in err


def test_parse_error():
    with tempfile.TemporaryDirectory() as directory:
        path = os.path.join(directory, "broken.json")
        with open(path, "w") as f:
            f.write('{"m": 2,\n "dists": }\n')
        code, _, err = run("dist", "validate", "--scenario", "chsh", "--dist", path)
    assert code == 2
    assert ":2:" in err


def test_usage_errors():
    assert run("dist", "validate", "--bogus")[0] == 64
    assert run("dist")[0] == 64
    assert run()[0] == 64
    assert run("--version")[0] == 0
    code, _, err = run("dist", "validate", "--dist", "prbox")
    assert code == 2
    assert "--scenario" in err


def test_factory_vertex_to_file():
    with tempfile.TemporaryDirectory() as directory:
        path = os.path.join(directory, "vertex.json")
        code, out, _ = run("factory", "suspension-vertex", "--example", "pr-box", "--out", path)
        assert code == 0
        assert out == ""
        with open(path) as f:
            results = json.load(f)["results"]
    assert results["construction"] == "average collection"
    assert results["is_vertex"] and results["contextual"] and results["suspension_lp_contextual"]
    assert (results["rank"], results["n"]) == (64, 64)
    assert results["collection"] == {"kind": "avg", "m": 2, "exponents": [[0, 0], [1, 1]]}


def test_validate_collection():
    code, out, _ = run("factory", "validate-collection", "--example", "odd", "--m", "3")
    assert code == 0
    assert json.loads(out)["results"]["valid"]
    code, out, err = run("factory", "validate-collection", "--example", "odd", "--m", "4")
    assert code == 2
    assert not json.loads(out)["results"]["valid"]
    assert "condition (3)" in err


def test_uniqueness():
    code, out, _ = run("solve", "uniqueness", "--all-avg", "--m", "2")
    assert code == 0
    results = json.loads(out)["results"]
    assert len(results["solutions"]) == 4
    assert results["all_unique_uniform"]
    code, out, _ = run("solve", "uniqueness", "--input", "three_way.json")
    row = json.loads(out)["results"]["solutions"][0]
    assert row["solution"] == ["1/4"] * 8


def test_all():
    test_contextual_verdict()
    test_output_is_deterministic()
    test_evaluate()
    test_lift()
    test_check()
    test_vertices()
    test_scenario_commands()
    test_decompose()
    test_invalid_distribution()
    test_malformed_distribution_entries()
    test_parse_error()
    test_usage_errors()
    test_factory_vertex_to_file()
    test_validate_collection()
    test_uniqueness()


if __name__ == '__main__':
    test_all()
