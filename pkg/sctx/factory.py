"""
*** SCTX: simplicial distributions and contextuality ***
License GNU GPL version 3 (See LICENSE)

factory.py: contextual vertices on suspensions

two constructions glue m vertices p^j of X into a distribution on SX:
up side (<1/m, p^j>)_j, down side (<1/m, psi . p^j>)_j. the first takes the
p^j as uniform mixtures of closed vertex sets restricting to a complete
collection of deterministic maps on a three-edge line; the second takes
vertices restricting to a complete collection of average distributions on a
two-edge line. every hypothesis is recomputed and the output is certified
before it is returned.

"""
import itertools
import logging
import math
from fractions import Fraction

from . import cone, distribution, error, linalg, lp, polytope, scenario, sdist

logger = logging.getLogger("sctx.factory")

ZERO = Fraction(0)
ONE = Fraction(1)


class DetCollection:
    """maps phi^{i,j} on L^(3), given by their edge tuples in line direction

    maps: dict (i, j) -> ((a, b), (b, c), (c, d))
    """

    def __init__(self, m, A, B, h, maps):
        self.m = m
        self.A = [[int(v) % m for v in row] for row in A]
        self.B = [[int(v) % m for v in row] for row in B]
        self.h = int(h) % m
        self.maps = {tuple(k): tuple(tuple(int(a) % m for a in pair) for pair in v) for k, v in maps.items()}

    def __repr__(self):
        return f"DetCollection(m={self.m}, A={self.A}, B={self.B}, h={self.h})"

    def labels(self, i, j):
        s1, s2, s3 = self.maps[(i, j)]
        return (s1[0], s1[1], s2[1], s3[1])


class AvgCollection:
    """exponents[j] = (e_1, e_2) with q^j_{sigma_k} = S^{e_k}"""

    def __init__(self, m, exponents):
        self.m = m
        self.exponents = [tuple(int(e) % m for e in row) for row in exponents]

    def __repr__(self):
        return f"AvgCollection(m={self.m}, {self.exponents})"

    def __eq__(self, other):
        return isinstance(other, AvgCollection) and (self.m, self.exponents) == (other.m, other.exponents)

    def __hash__(self):
        return hash((self.m, tuple(self.exponents)))


def _row_times(pair, M, m):
    """(i, j) M^T"""
    i, j = pair
    return ((M[0][0] * i + M[0][1] * j) % m, (M[1][0] * i + M[1][1] * j) % m)


def _det(M):
    return M[0][0] * M[1][1] - M[0][1] * M[1][0]


def validate_det_collection(c):
    m = c.m
    found = []
    expected = set(itertools.product(range(m), repeat=2))
    if set(c.maps) != expected:
        found.append(error.Violation("collection", "index set", "need one map per (i, j) in Z_m^2"))
        return found
    for (i, j), (s1, s2, s3) in sorted(c.maps.items()):
        if s1[1] != s2[0] or s2[1] != s3[0]:
            found.append(error.Violation(f"phi^{i},{j}", "not a labeling of the line"))
    if {c.maps[k][0] for k in c.maps} != expected:
        found.append(error.Violation("collection", "condition (1)", "sigma_1 values do not cover Z_m^2"))
    for (i, j), (_, s2, s3) in sorted(c.maps.items()):
        if s2 != _row_times((i, j), c.A, m):
            found.append(error.Violation(f"phi^{i},{j}", "condition (2)", f"sigma_2 = {s2} is not (i,j)A^T"))
        if s3 != _row_times((i, j), c.B, m):
            found.append(error.Violation(f"phi^{i},{j}", "condition (2)", f"sigma_3 = {s3} is not (i,j)B^T"))
    (a11, a12), (a21, a22) = c.A
    (b11, b12), (b21, b22) = c.B
    h = c.h
    terms = {
        "det A": _det(c.A),
        "det B": _det(c.B),
        "mixed term": a12 * (b21 - b11 * h) - a11 * (b22 - b12 * h),
    }
    for name, value in terms.items():
        g = math.gcd(value, m)
        if g != 1:
            found.append(error.Violation("collection", "condition (3)", f"gcd({name} = {value}, {m}) = {g}"))
    return found


def validate_avg_collection(c):
    m = c.m
    found = []
    if len(c.exponents) != m:
        found.append(error.Violation("collection", "size", f"{len(c.exponents)} members for m={m}"))
        return found
    for k in range(2):
        column = sorted(row[k] for row in c.exponents)
        if column != list(range(m)):
            found.append(error.Violation(f"sigma_{k + 1}", "not a permutation", f"exponents {column}"))
    uniform = distribution.uniform(m, 1)
    for row in c.exponents:
        for e in row:
            S = distribution.average_power(m, e)
            if distribution.marginalize(S, 0) != uniform or distribution.marginalize(S, 1) != uniform:
                found.append(error.Violation(f"S^{e}", "vertex marginals not uniform"))
    return found


# --- canned collections


def det_collection_from_restrictions(maps, m, h):
    """infer A from phi^{1,0}, phi^{0,1} on sigma_2 and B likewise on sigma_3"""
    s2_10, s2_01 = maps[(1, 0)][1], maps[(0, 1)][1]
    s3_10, s3_01 = maps[(1, 0)][2], maps[(0, 1)][2]
    A = [[s2_10[0], s2_01[0]], [s2_10[1], s2_01[1]]]
    B = [[s3_10[0], s3_01[0]], [s3_10[1], s3_01[1]]]
    return DetCollection(m, A, B, h, maps)


def example_det_collection(m, h=0):
    """(i,i+j), (i+j,i+2j), (i+2j,i+3j)"""
    maps = {}
    for i, j in itertools.product(range(m), repeat=2):
        maps[(i, j)] = ((i, i + j), (i + j, i + 2 * j), (i + 2 * j, i + 3 * j))
    return det_collection_from_restrictions(
        {k: tuple(tuple(a % m for a in pair) for pair in v) for k, v in maps.items()}, m, h)


def remark_det_collection():
    """(i,j), (j,i), (i,j) for m=2: complete, but its vertex sets are not closed"""
    maps = {(i, j): ((i, j), (j, i), (i, j)) for i, j in itertools.product(range(2), repeat=2)}
    return det_collection_from_restrictions(maps, 2, 1)


def three_way_collection():
    """restriction of the CHSH maps (i,i+j), (i+j,i), (i,i+j) to sigma_1..sigma_3"""
    maps = {
        (i, j): ((i, (i + j) % 2), ((i + j) % 2, i), (i, (i + j) % 2))
        for i, j in itertools.product(range(2), repeat=2)
    }
    return det_collection_from_restrictions(maps, 2, 1)


def diagonal_avg_collection(m):
    return AvgCollection(m, [(j, j) for j in range(m)])


def enumerate_avg_collections(m):
    perms = list(itertools.permutations(range(m)))
    return [AvgCollection(m, list(zip(first, second))) for first in perms for second in perms]


# --- psi


def forced_line_labels(length, h):
    """vertex labels of psi^h along a line: (0,0), (0,1), (1,h)"""
    return [0, 0, 1, h][:length + 1]


def psi_map(x, line, h, m, extension=None):
    """psi^h along the line, the extension labels every other vertex"""
    vertices = line.line_vertices(x)
    if len(set(vertices)) != len(vertices):
        raise error.ValidationError([error.Violation("line", "repeated vertex")], what="psi")
    labels = {v: a % m for v, a in zip(vertices, forced_line_labels(len(line), h))}
    conflicts = []
    for v, value in (extension or {}).items():
        value = int(value) % m
        if labels.setdefault(v, value) != value:
            conflicts.append(error.Violation(v, "conflicting label", f"{value} != {labels[v]}"))
    error.raise_if(conflicts, what="psi")
    return sdist.DeterministicMap(x, labels, m)


def line_tuples(phi, line):
    return [line.oriented(k, phi.on(e)) for k, e in enumerate(line.edges)]


# --- uniqueness


class UniquenessReport:
    def __init__(self, nullspace_dim, unique, solution=None, uniform=False, feasible=True):
        self.nullspace_dim = nullspace_dim
        self.unique = unique
        self.solution = solution
        self.uniform = uniform
        self.feasible = feasible

    def __repr__(self):
        return (f"UniquenessReport(nullspace={self.nullspace_dim}, unique={self.unique}, "
                f"uniform={self.uniform})")


def uniqueness_solve(left, right):
    """all (lambda, mu) in simplices with sum lambda_k left_k = sum mu_k right_k"""
    x, m = left[0].scenario, left[0].m
    coords = polytope.coordinates(x, m)
    a, b = len(left), len(right)
    n = a + b
    rows, rhs = [], []
    for (g, y) in coords:
        rows.append([q[g][y] for q in left] + [-q[g][y] for q in right])
        rhs.append(ZERO)
    rows.append([ONE] * a + [ZERO] * b)
    rhs.append(ONE)
    rows.append([ZERO] * a + [ONE] * b)
    rhs.append(ONE)

    basis = linalg.nullspace(rows, n)
    particular = linalg.solve(rows, rhs)
    if particular is None:
        return UniquenessReport(len(basis), False, feasible=False)

    system = lp.LinearSystem(n, nonneg=range(n))
    for row, value in zip(rows, rhs):
        system.add(row, lp.EQ, value)
    if not basis:
        feasible = system.satisfied_by(particular)
        solution = particular if feasible else None
    else:
        solution = None
        feasible = lp.lp_feasible(system).feasible
        if feasible:
            lows, highs = [], []
            for k in range(n):
                objective = [ONE if t == k else ZERO for t in range(n)]
                lows.append(lp.lp_optimize(system, objective).value)
                highs.append(lp.lp_optimize(system, objective, maximize=True).value)
            if lows == highs:
                solution = lows
    unique = feasible and solution is not None
    uniform = unique and solution[:a] == [Fraction(1, a)] * a and solution[a:] == [Fraction(1, b)] * b
    logger.info("uniqueness: nullspace %d, unique %s", len(basis), unique)
    return UniquenessReport(len(basis), unique, solution, uniform, feasible)


def det_collection_families(c, psi=None):
    line = scenario.build_line(3)
    if psi is None:
        psi = sdist.DeterministicMap(line, dict(zip(line.vertices(), forced_line_labels(3, c.h))), c.m)
    keys = sorted(c.maps)
    left = [sdist.deterministic_sdist(sdist.DeterministicMap(line, dict(zip(line.vertices(), c.labels(*k))), c.m))
            for k in keys]
    right = [sdist.act(psi, q) for q in left]
    return left, right


def avg_collection_families(c, psi=None):
    line = scenario.build_line(2)
    if psi is None:
        psi = sdist.DeterministicMap(line, dict(zip(line.vertices(), forced_line_labels(2, 0))), c.m)
    left = [
        sdist.SDist(line, c.m, {
            "s1": distribution.average_power(c.m, e1),
            "s2": distribution.average_power(c.m, e2),
        })
        for (e1, e2) in c.exponents
    ]
    right = [sdist.act(psi, q) for q in left]
    return left, right


def collection_uniqueness_solve(collection, psi=None):
    """psi: the labeling on the standard line, psi^h of the collection by default"""
    if isinstance(collection, DetCollection):
        left, right = det_collection_families(collection, psi)
    else:
        left, right = avg_collection_families(collection, psi)
    return uniqueness_solve(left, right)


# --- constructions


class ConstructionReport:
    def __init__(self, construction):
        self.construction = construction
        self.h = None
        self.collection = None
        self.rank = None
        self.n = None
        self.is_vertex = False
        self.contextual = False
        self.suspension_lp_contextual = False

    def __repr__(self):
        return (f"ConstructionReport({self.construction}: vertex={self.is_vertex} "
                f"rank={self.rank}/{self.n}, contextual={self.contextual})")


def _uniform_weights(m):
    return [Fraction(1, m)] * m


def _assemble_and_certify(x, m, ps, psi, report):
    up = cone.JoinPoint([(Fraction(1, m), p) for p in ps])
    down = cone.JoinPoint([(Fraction(1, m), sdist.act(psi, p)) for p in ps])
    sp = cone.SuspensionPoint(up, down)
    sx = scenario.suspension(x)
    result = cone.suspension_assemble(sp, x, sx)
    sdist.validate_or_raise(result)
    vertex = polytope.is_vertex(result)
    report.rank, report.n = vertex.rank, vertex.n
    report.is_vertex = vertex.is_vertex
    report.contextual = not polytope.is_noncontextual(result).noncontextual
    report.suspension_lp_contextual = not cone.suspension_noncontextuality_lp(sp).noncontextual
    if not (report.is_vertex and report.contextual and report.suspension_lp_contextual):
        raise error.CertificateError(f"{report.construction}: output failed certification: {report!r}")
    logger.info("%r", report)
    return result, report


def _psi_invariance(ps, psi, failures):
    mean = sdist.uniform_mixture(ps)
    if sdist.act(psi, mean) != mean:
        failures.append(error.Violation("psi", "psi-invariance", "psi . mean != mean"))


def _common_checks(x, line, failures):
    if not scenario.is_connected(x):
        failures.append(error.Violation(x.name, "connected"))
    try:
        scenario.line_in(x, line)
    except error.ValidationError as e:
        failures.extend(error.Violation(v.subject, "line", v.rule) for v in e.violations)


def build_suspension_vertex_det(x, line, q, psi, cap=None):
    """q: dict (i, j) -> vertex q^{i,j} of sDist(x); psi: DeterministicMap on x"""
    m = psi.m
    report = ConstructionReport("deterministic collection")
    failures = []
    _common_checks(x, line, failures)
    if len(line) != 3:
        failures.append(error.Violation("line", "line", "need three edges"))
    if failures:
        raise error.HypothesisError(report.construction, failures)

    keys = sorted(itertools.product(range(m), repeat=2))
    if sorted(q) != keys:
        raise error.HypothesisError(report.construction, [error.Violation("q", "index set")])
    hrep = polytope.build_hrep(x, m)
    for k in keys:
        if not polytope.is_vertex(q[k], hrep):
            failures.append(error.Violation(f"q^{k[0]},{k[1]}", "vertices"))

    psi_line = line_tuples(psi, line)
    h = psi_line[2][1]
    report.h = h
    if psi_line[0] != (0, 0) or psi_line[1] != (0, 1) or psi_line[2][0] != 1:
        failures.append(error.Violation("psi", "psi restriction", f"{psi_line} is not psi^h"))

    sub = scenario.line_in(x, line)
    maps = {}
    for k in keys:
        phi = sdist.is_deterministic(sdist.restrict(q[k], sub))
        if phi is None:
            failures.append(error.Violation(f"q^{k[0]},{k[1]}", "complete collection", "restriction is not deterministic"))
            continue
        maps[k] = tuple(line_tuples(phi, line))
    if len(maps) == len(keys):
        collection = det_collection_from_restrictions(maps, m, h)
        report.collection = collection
        failures.extend(validate_det_collection(collection))

    if not any(v.rule == "vertices" for v in failures):
        for j in range(m):
            family = [q[(i, j)] for i in range(m)]
            if not polytope.is_closed_vertex_set(family, cap):
                failures.append(error.Violation(f"j={j}", "closed set"))
    _psi_invariance([q[k] for k in keys], psi, failures)
    if failures:
        raise error.HypothesisError(report.construction, failures)

    ps = [sdist.uniform_mixture([q[(i, j)] for i in range(m)]) for j in range(m)]
    return _assemble_and_certify(x, m, ps, psi, report)


def build_suspension_vertex_avg(x, line, ps, psi):
    """ps: vertices p^0..p^{m-1} of sDist(x); psi: DeterministicMap on x"""
    m = psi.m
    report = ConstructionReport("average collection")
    failures = []
    _common_checks(x, line, failures)
    if len(line) != 2:
        failures.append(error.Violation("line", "line", "need two edges"))
    if len(ps) != m:
        failures.append(error.Violation("p", "index set", f"{len(ps)} members for m={m}"))
    if failures:
        raise error.HypothesisError(report.construction, failures)

    hrep = polytope.build_hrep(x, m)
    for j, p in enumerate(ps):
        if not polytope.is_vertex(p, hrep):
            failures.append(error.Violation(f"p^{j}", "vertices"))

    psi_line = line_tuples(psi, line)
    if psi_line != [(0, 0), (0, 1)]:
        failures.append(error.Violation("psi", "psi restriction", f"{psi_line} is not ((0,0),(0,1))"))

    exponents = []
    for j, p in enumerate(ps):
        row = []
        for k, e in enumerate(line.edges):
            P = p.at(e)
            if line.bits[k]:
                P = distribution.keep(P, (1, 0))
            row.append(distribution.is_average(P))
        if None in row:
            failures.append(error.Violation(f"p^{j}", "complete collection", "restriction is not an average distribution"))
        else:
            exponents.append(row)
    if len(exponents) == m:
        collection = AvgCollection(m, exponents)
        report.collection = collection
        failures.extend(validate_avg_collection(collection))
    _psi_invariance(ps, psi, failures)
    if failures:
        raise error.HypothesisError(report.construction, failures)
    return _assemble_and_certify(x, m, list(ps), psi, report)


# --- inputs of the worked examples


def three_way_inputs():
    """CHSH maps psi^{i,j}: (i,i+j) on sigma_1, sigma_3 and (i+j,i) on sigma_2, sigma_4"""
    x = scenario.build_cycle(4, name="chsh")
    line = scenario.LineSpec(["s1", "s2", "s3"])
    q = {}
    for i, j in itertools.product(range(2), repeat=2):
        labels = dict(zip(x.vertices(), (i, i + j, i, i + j)))
        q[(i, j)] = sdist.deterministic_sdist(sdist.DeterministicMap(x, labels, 2))
    psi = psi_map(x, line, 1, 2)
    return x, line, q, psi


def pr_box_inputs():
    """p^0: p_+ on s1, s2, s4 and p_- on s3; p^1 the other way round"""
    x = scenario.build_cycle(4, name="chsh")
    line = scenario.LineSpec(["s1", "s2"])
    ps = [sdist.pr_box(x, minus=("s3",)), sdist.pr_box(x, minus=("s1", "s2", "s4"))]
    psi = psi_map(x, line, 0, 2, extension={"v4": 1})
    return x, line, ps, psi


def line_det_inputs(m=3, h=0):
    x = scenario.build_line(3)
    line = scenario.LineSpec(["s1", "s2", "s3"])
    collection = example_det_collection(m, h)
    q = {
        k: sdist.deterministic_sdist(sdist.DeterministicMap(x, dict(zip(x.vertices(), collection.labels(*k))), m))
        for k in collection.maps
    }
    psi = psi_map(x, line, h, m)
    return x, line, q, psi


def three_way_vertex():
    return build_suspension_vertex_det(*three_way_inputs())


def pr_box_vertex():
    return build_suspension_vertex_avg(*pr_box_inputs())


def line_det_vertex(m=3, h=0):
    return build_suspension_vertex_det(*line_det_inputs(m, h))
