"""
*** SCTX: simplicial distributions and contextuality ***
License GNU GPL version 3 (See LICENSE)

fileio.py: JSON formats and run reports

rationals are always written as "a/b" strings and objects are dumped with
sorted keys, so identical values give identical bytes.

"""
import json
import logging
import pathlib
import time

from . import bell, cone, config, distribution, error, factory, polytope, scenario, sdist, utils

logger = logging.getLogger("sctx.fileio")


def dumps(obj):
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def write(obj, path=None):
    """write to path, or stdout when path is None"""
    text = dumps(obj)
    if path is None:
        print(text, end="")
    else:
        pathlib.Path(path).write_text(text, encoding="utf-8")
        logger.debug("wrote %s", path)
    return text


def resolve(path, kind=None):
    """the file itself, or the shipped resource of that name"""
    path = pathlib.Path(path)
    if path.is_file() or kind is None:
        return path
    shipped = getattr(config.gx, f"sctx_{kind}") / path.name
    if shipped.is_file():
        return shipped
    if not path.suffix:
        shipped = shipped.with_suffix(".json")
        if shipped.is_file():
            return shipped
    return path


def load_text(path, kind=None):
    path = resolve(path, kind)
    try:
        return path, path.read_text(encoding="utf-8")
    except OSError as e:
        raise error.ParseError(path, f"cannot read: {e.strerror}")


def load_json(path, kind=None):
    path, text = load_text(path, kind)
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise error.ParseError(path, e.msg, e.lineno, e.colno)


def _field(data, key, what):
    try:
        return data[key]
    except (KeyError, TypeError):
        raise error.ValidationError([error.Violation(what, "missing field", key)], what=what)


# --- scenarios


def scenario_to_json(x):
    data = {
        "name": x.name,
        "simplices": [{"id": s, "dim": x.dim(s), "faces": list(x.faces(s))} for s in x.order],
    }
    if x.base is not None:
        data["base"] = scenario_to_json(x.base)
        data["cones"] = {cp: dict(mapping) for cp, mapping in x.cones.items()}
    return data


def scenario_from_json(data):
    simplices = []
    for entry in _field(data, "simplices", "scenario"):
        simplices.append((_field(entry, "id", "simplex"), int(_field(entry, "dim", "simplex")),
                          list(entry.get("faces", []))))
    x = scenario.Scenario(data.get("name", "scenario"), simplices)
    if "base" in data:
        x.base = scenario_from_json(data["base"])
        x.cones = {cp: dict(mapping) for cp, mapping in data.get("cones", {}).items()}
    scenario.validate_or_raise(x)
    return x


def parse_scenario_file(path):
    return scenario_from_json(load_json(path, "scenarios"))


# --- distributions


def dist_to_json(P):
    return [{"outcome": list(y), "prob": utils.rat_str(p)} for y, p in P.items()]


def _rat(value, subject, what, rule="prob"):
    try:
        return utils.rat(value)
    except (ValueError, TypeError, ZeroDivisionError):
        raise error.ValidationError([error.Violation(subject, rule, f"{value!r} is not a rational")], what=what)


def _outcome_violation(y, arity, subject):
    if not all(isinstance(a, int) and not isinstance(a, bool) for a in y):
        return error.Violation(subject, "outcome", f"{list(y)} is not a list of integers")
    if len(y) != arity:
        return error.Violation(subject, "arity", f"outcome {list(y)} has length {len(y)}, expected {arity}")
    return None


def dist_from_json(data, m, arity, check=True, subject="distribution"):
    masses = {}
    found = []
    for entry in data:
        y = _field(entry, "outcome", subject)
        y = tuple(y) if isinstance(y, list) else (y,)
        violation = _outcome_violation(y, arity, subject)
        if violation is not None:
            found.append(violation)
            continue
        try:
            masses[y] = masses.get(y, 0) + _rat(_field(entry, "prob", subject), subject, "distribution")
        except error.ValidationError as e:
            found.extend(e.violations)
    error.raise_if(found, what="distribution")
    return distribution.Dist(m, arity, masses, check=check)


def sdist_to_json(p):
    return {"m": p.m, "dists": {g: dist_to_json(P) for g, P in p.items()}}


def sdist_from_json(data, x, m=None):
    """{"m", "dists": {generator: [{outcome, prob}]}}, or the bare dists mapping"""
    if "dists" in data:
        m = int(data.get("m", m))
        dists = data["dists"]
    else:
        dists = data
    if m is None:
        raise error.ValidationError([error.Violation("distribution", "missing field", "m")], what="distribution")
    parsed = {}
    found = []
    for g, entries in dists.items():
        if g not in x:
            found.append(error.Violation(g, "not a generator"))
            continue
        try:
            parsed[g] = dist_from_json(entries, m, x.dim(g) + 1, check=False, subject=g)
        except error.ValidationError as e:
            found.extend(e.violations)
    error.raise_if(found, what=f"distribution on {x.name}")
    return sdist.SDist(x, m, parsed)


def parse_sdist_file(path, x, m=None):
    return sdist_from_json(load_json(path, "dists"), x, m)


def labeling_to_json(phi):
    return {"m": phi.m, "labels": dict(phi.labels)}


def labeling_from_json(data, x, m=None):
    labels = data.get("labels", data)
    m = int(data.get("m", m)) if "labels" in data else m
    return sdist.DeterministicMap(x, {v: int(a) for v, a in labels.items()}, m)


def mixture_to_json(Q):
    return [{"labels": dict(phi.labels), "weight": utils.rat_str(w)} for phi, w in sorted(Q.items())]


# --- inequalities


def _terms_to_json(terms):
    return [{"simplex": s, "outcome": list(y), "coef": utils.rat_str(c)} for s, y, c in terms]


def _terms_from_json(data):
    return [(t["simplex"], tuple(t["outcome"]), _rat(t["coef"], t["simplex"], "inequality", "coef")) for t in data]


def inequality_to_json(ineq):
    data = {
        "terms": _terms_to_json(ineq.terms),
        "rhs_terms": _terms_to_json(ineq.rhs_terms),
        "bound": utils.rat_str(ineq.bound),
        "sense": ineq.sense,
    }
    if ineq.name:
        data["name"] = ineq.name
    if ineq.first != ineq.terms[0][0]:
        data["first"] = ineq.first
    return data


def inequality_from_json(data):
    sense = data.get("sense", "le")
    if sense != "le":
        raise error.ValidationError([error.Violation("inequality", "sense", sense)], what="inequality")
    return bell.LinearInequality(
        _terms_from_json(_field(data, "terms", "inequality")),
        _rat(_field(data, "bound", "inequality"), "inequality", "inequality", "bound"),
        _terms_from_json(data.get("rhs_terms", [])),
        name=data.get("name"), first=data.get("first"))


def family_to_json(family, name=None):
    return {"name": name, "inequalities": [inequality_to_json(q) for q in family]}


def family_from_json(data):
    entries = data["inequalities"] if isinstance(data, dict) else data
    return [inequality_from_json(q) for q in entries]


def parse_family(name_or_path):
    """'chsh' for the built-in family, otherwise a family file"""
    if name_or_path == "chsh":
        return bell.chsh_family()
    return family_from_json(load_json(name_or_path, "families"))


# --- cones and suspensions


def join_to_json(point):
    return [[utils.rat_str(lam), None if comp is None else sdist_to_json(comp)] for lam, comp in point]


def join_from_json(data, base, m):
    return cone.JoinPoint([
        (_rat(lam, "join", "join point", "weight"), None if comp is None else sdist_from_json(comp, base, m)) for lam, comp in data
    ])


def suspension_point_to_json(sp):
    return {"up": join_to_json(sp.up), "down": join_to_json(sp.down)}


def suspension_point_from_json(data, base, m):
    return cone.SuspensionPoint(join_from_json(data["up"], base, m), join_from_json(data["down"], base, m))


# --- collections


def collection_to_json(c):
    if isinstance(c, factory.AvgCollection):
        return {"kind": "avg", "m": c.m, "exponents": [list(row) for row in c.exponents]}
    return {
        "kind": "det",
        "m": c.m,
        "A": c.A,
        "B": c.B,
        "h": c.h,
        "maps": [
            {"i": i, "j": j, "edges": [list(pair) for pair in c.maps[(i, j)]]}
            for (i, j) in sorted(c.maps)
        ],
    }


def collection_from_json(data):
    kind = _field(data, "kind", "collection")
    m = int(_field(data, "m", "collection"))
    if kind == "avg":
        return factory.AvgCollection(m, _field(data, "exponents", "collection"))
    if kind != "det":
        raise error.ValidationError([error.Violation("collection", "unknown kind", kind)], what="collection")
    maps = {(int(e["i"]), int(e["j"])): tuple(tuple(pair) for pair in e["edges"]) for e in data["maps"]}
    return factory.DetCollection(m, data["A"], data["B"], data.get("h", 0), maps)


def parse_collection_file(path):
    return collection_from_json(load_json(path, "collections"))


def construction_from_json(data):
    """suspension-vertex input file: scenario, line, psi and the vertices

    {"kind": "det"|"avg", "m", "scenario", "line": {"edges", "bits"},
     "psi": {vertex: label}, "h"?, "vertices": [{"i"?, "j", "dist"}]}
    """
    kind = _field(data, "kind", "construction")
    m = int(_field(data, "m", "construction"))
    x = scenario_from_json(_field(data, "scenario", "construction"))
    spec = _field(data, "line", "construction")
    line = scenario.LineSpec(spec["edges"], spec.get("bits"))
    psi = sdist.DeterministicMap(x, {v: int(a) for v, a in _field(data, "psi", "construction").items()}, m)
    vertices = _field(data, "vertices", "construction")
    if kind == "det":
        q = {(int(e["i"]), int(e["j"])): sdist_from_json(e["dist"], x, m) for e in vertices}
        return kind, (x, line, q, psi)
    ps = [None] * len(vertices)
    for e in vertices:
        ps[int(e["j"])] = sdist_from_json(e["dist"], x, m)
    return kind, (x, line, ps, psi)


# --- certificates


def vertex_report_to_json(report):
    return {"is_vertex": report.is_vertex, "rank": report.rank, "n": report.n, "active": len(report.active)}


def certificate_to_json(cert):
    data = {"verdict": cert.verdict}
    if cert.witness is not None:
        data["witness"] = mixture_to_json(cert.witness)
    if cert.functional is not None:
        f = cert.functional
        data["functional"] = {
            "coefficients": [
                {"simplex": g, "outcome": list(y), "coef": utils.rat_str(c)}
                for (g, y), c in zip(f.coords, f.coeffs) if c != 0
            ],
            "constant": utils.rat_str(f.constant),
        }
    return data


def vertices_to_json(vertices):
    return [sdist_to_json(q) for q in sorted(vertices, key=polytope.sort_key)]


# --- run reports


class RunReport:
    """what was run on which inputs, and what came out"""

    def __init__(self, command, seed=None, timing=False):
        self.command = list(command)
        self.seed = seed
        self.inputs = {}
        self.results = {}
        self.timing = timing
        self.t0 = time.time()

    def add_input(self, path, kind=None):
        path, text = load_text(path, kind)
        self.inputs[str(path.name)] = utils.digest(text)

    def __setitem__(self, key, value):
        self.results[key] = value

    def __getitem__(self, key):
        return self.results[key]

    def to_json(self):
        data = {"command": self.command, "inputs": self.inputs, "results": self.results}
        if self.seed is not None:
            data["seed"] = self.seed
        if self.timing:
            data["elapsed"] = f"{time.time() - self.t0:.2f}"
        return data

    def write(self, path=None):
        return write(self.to_json(), path)
