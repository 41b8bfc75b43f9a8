"""
*** SCTX: simplicial distributions and contextuality ***
License GNU GPL version 3 (See LICENSE)

polytope.py: the polytope sDist(X, Delta_{Z_m})

coordinates are (generator, outcome) pairs, generators in scenario order and
outcomes in lexicographic order. the polytope is cut out by per-generator
normalization, face compatibility and nonnegativity.

vertices are enumerated by double description on the affine hull, with the
combinatorial adjacency test; contextuality is decided by an LP over the
weights of deterministic distributions.

"""
import logging
import random
from fractions import Fraction

from . import config, distribution, error, linalg, lp, sdist

logger = logging.getLogger("sctx.polytope")

ZERO = Fraction(0)
ONE = Fraction(1)


def coordinates(x, m):
    return [(g, y) for g in x.generators() for y in distribution.outcomes(m, x.dim(g) + 1)]


def vector(p):
    return [p[g][y] for (g, y) in coordinates(p.scenario, p.m)]


def sort_key(p):
    return tuple(vector(p))


def from_vector(x, m, vec, check=False):
    masses = {g: {} for g in x.generators()}
    for (g, y), v in zip(coordinates(x, m), vec):
        if v != 0:
            masses[g][y] = v
    dists = {g: distribution.Dist(m, x.dim(g) + 1, masses[g], check=check) for g in masses}
    return sdist.SDist(x, m, dists, check=check)


class HRep:
    """equalities a.p = b and inequalities a.p >= b over the coordinates"""

    def __init__(self, x, m):
        self.scenario = x
        self.m = m
        self.coords = coordinates(x, m)
        self.index = {c: i for i, c in enumerate(self.coords)}
        self.equalities = []
        self.inequalities = []

    def __len__(self):
        return len(self.coords)

    def add_equality(self, coeffs, rhs):
        self.equalities.append((coeffs, Fraction(rhs)))

    def add_inequality(self, coeffs, rhs):
        self.inequalities.append((coeffs, Fraction(rhs)))

    def dense(self, coeffs):
        row = [ZERO] * len(self.coords)
        for i, v in coeffs.items():
            row[i] += v
        return row

    def contains(self, vec):
        for coeffs, rhs in self.equalities:
            if sum((v * vec[i] for i, v in coeffs.items()), ZERO) != rhs:
                return False
        for coeffs, rhs in self.inequalities:
            if sum((v * vec[i] for i, v in coeffs.items()), ZERO) < rhs:
                return False
        return True

    def equality_matrix(self):
        return [self.dense(coeffs) for coeffs, _ in self.equalities], [rhs for _, rhs in self.equalities]

    def to_system(self):
        system = lp.LinearSystem(len(self.coords))
        for coeffs, rhs in self.equalities:
            system.add(coeffs, lp.EQ, rhs)
        for coeffs, rhs in self.inequalities:
            system.add(coeffs, lp.GE, rhs)
        return system


def _marginal_coeffs(hrep, gen, kept, z, sign, acc):
    x, m = hrep.scenario, hrep.m
    for y in distribution.outcomes(m, x.dim(gen) + 1):
        if tuple(y[k] for k in kept) == z:
            i = hrep.index[(gen, y)]
            acc[i] = acc.get(i, ZERO) + sign


def build_hrep(x, m):
    hrep = HRep(x, m)
    for g in x.generators():
        hrep.add_equality({hrep.index[(g, y)]: ONE for y in distribution.outcomes(m, x.dim(g) + 1)}, ONE)
    for ident, occurrences in x.occurrences().items():
        if len(occurrences) < 2:
            continue
        (gen, kept) = occurrences[0]
        # the last outcome follows from normalization on both sides
        for z in distribution.outcomes(m, x.dim(ident) + 1)[:-1]:
            for (other, other_kept) in occurrences[1:]:
                acc = {}
                _marginal_coeffs(hrep, gen, kept, z, ONE, acc)
                _marginal_coeffs(hrep, other, other_kept, z, -ONE, acc)
                acc = {i: v for i, v in acc.items() if v != 0}
                if acc:
                    hrep.add_equality(acc, ZERO)
    for i in range(len(hrep.coords)):
        hrep.add_inequality({i: ONE}, ZERO)
    logger.debug("%s, m=%d: %d coordinates, %d equalities",
                 x.name, m, len(hrep.coords), len(hrep.equalities))
    return hrep


def affine_dimension(x, m):
    hrep = build_hrep(x, m)
    rows, _ = hrep.equality_matrix()
    # the uniform distribution is strictly positive, so the hull is the equality subspace
    return len(hrep.coords) - linalg.rank(rows)


# --- vertex certification


class VertexReport:
    def __init__(self, rank, n, active):
        self.rank = rank
        self.n = n
        self.active = active

    @property
    def is_vertex(self):
        return self.rank == self.n

    def __bool__(self):
        return self.is_vertex

    def __repr__(self):
        return f"VertexReport(rank={self.rank}, n={self.n}, active={len(self.active)})"


def is_vertex(p, hrep=None):
    hrep = hrep or build_hrep(p.scenario, p.m)
    vec = vector(p)
    rows, _ = hrep.equality_matrix()
    active = [i for i, v in enumerate(vec) if v == 0]
    for i in active:
        row = [ZERO] * len(vec)
        row[i] = ONE
        rows.append(row)
    report = VertexReport(linalg.rank(rows, len(vec)), len(vec), active)
    logger.debug("rank test on %s: %r", p.scenario.name, report)
    return report


# --- contextuality


class AffineFunctional:
    """f(p) = sum_i coeffs[i] * p_i + constant over the coordinates"""

    def __init__(self, coords, coeffs, constant):
        self.coords = coords
        self.coeffs = coeffs
        self.constant = constant

    def evaluate(self, vec):
        return sum((a * v for a, v in zip(self.coeffs, vec)), ZERO) + self.constant


NONCONTEXTUAL = "noncontextual"
CONTEXTUAL = "contextual"


class NoncontextualityCertificate:
    def __init__(self, verdict, witness=None, functional=None):
        self.verdict = verdict
        self.witness = witness
        self.functional = functional

    @property
    def noncontextual(self):
        return self.verdict == NONCONTEXTUAL

    def __repr__(self):
        return f"NoncontextualityCertificate({self.verdict})"


def is_noncontextual(p, cap=None, labelings=None):
    """LP over weights of deterministic distributions; certificate checked exactly"""
    x, m = p.scenario, p.m
    coords = coordinates(x, m)
    vec = vector(p)
    zero = {i for i, v in enumerate(vec) if v == 0}
    index = {c: i for i, c in enumerate(coords)}
    labelings = labelings or sdist.enumerate_deterministic(x, m, cap)
    generators = x.generators()

    hits = []
    for phi in labelings:
        hits.append([index[(g, phi.on(g))] for g in generators])
    kept = [k for k, h in enumerate(hits) if not zero.intersection(h)]

    support = [i for i in range(len(coords)) if i not in zero]
    row_of = {i: r for r, i in enumerate(support)}
    A = [[ZERO] * len(kept) for _ in range(len(support) + 1)]
    for col, k in enumerate(kept):
        for i in hits[k]:
            A[row_of[i]][col] += ONE
        A[-1][col] = ONE
    b = [vec[i] for i in support] + [ONE]

    if kept:
        result = lp.solve_standard(A, b)
    else:
        result = lp.LPResult(lp.INFEASIBLE, farkas=[ZERO] * len(support) + [ONE])
    if result.status == lp.OPTIMAL:
        witness = {labelings[k]: w for k, w in zip(kept, result.x) if w != 0}
        if sdist.theta(witness, x, m) != p:
            raise error.CertificateError("witness does not reproduce the distribution")
        logger.info("%s: noncontextual (%d deterministic terms)", x.name, len(witness))
        return NoncontextualityCertificate(NONCONTEXTUAL, witness=witness)

    y = result.farkas
    coeffs = [ZERO] * len(coords)
    for i in support:
        coeffs[i] = y[row_of[i]]
    constant = y[-1]
    # eliminated labelings touch a zero coordinate; push them below zero
    penalty = ZERO
    for k, h in enumerate(hits):
        if zero.intersection(h):
            value = sum((coeffs[i] for i in h), ZERO) + constant
            penalty = max(penalty, value)
    for i in zero:
        coeffs[i] = -penalty
    functional = AffineFunctional(coords, coeffs, constant)
    if functional.evaluate(vec) <= 0:
        raise error.CertificateError("separating functional is not positive on the distribution")
    for h in hits:
        if sum((coeffs[i] for i in h), ZERO) + constant > 0:
            raise error.CertificateError("separating functional is positive on a deterministic point")
    logger.info("%s: contextual", x.name)
    return NoncontextualityCertificate(CONTEXTUAL, functional=functional)


# --- double description


def _zero_mask(rows, ray, upto):
    mask = 0
    for k in range(upto):
        if sum(a * b for a, b in zip(rows[k], ray)) == 0:
            mask |= 1 << k
    return mask


def _popcount(mask):
    return bin(mask).count("1")


def extreme_rays(rows):
    """extreme rays of the pointed cone {z : rows . z >= 0}, as primitive int vectors

    rows are integer vectors spanning the whole space.
    """
    dim = len(rows[0])
    order = linalg.independent_rows(rows, dim)
    if len(order) != dim:
        raise error.SctxError("constraint rows do not span the space")
    rest = [k for k in range(len(rows)) if k not in set(order)]
    rows = [rows[k] for k in order] + [rows[k] for k in rest]

    inv = linalg.inverse(rows[:dim])
    rays = [linalg.primitive([inv[i][j] for i in range(dim)]) for j in range(dim)]
    masks = [_zero_mask(rows, r, dim) for r in rays]

    for k in range(dim, len(rows)):
        h = rows[k]
        values = [sum(a * b for a, b in zip(h, r)) for r in rays]
        plus = [i for i, v in enumerate(values) if v > 0]
        minus = [i for i, v in enumerate(values) if v < 0]
        if not minus:
            masks = [mk | (1 << k) if values[i] == 0 else mk for i, mk in enumerate(masks)]
            continue
        new_rays, new_masks = [], []
        for i, r in enumerate(rays):
            if values[i] >= 0:
                new_rays.append(r)
                new_masks.append(masks[i] | (1 << k) if values[i] == 0 else masks[i])
        for i in plus:
            for j in minus:
                common = masks[i] & masks[j]
                if _popcount(common) < dim - 2:
                    continue
                if any(
                    (masks[t] & common) == common
                    for t in range(len(rays)) if t != i and t != j
                ):
                    continue
                combo = [values[i] * b - values[j] * a for a, b in zip(rays[i], rays[j])]
                new_rays.append(linalg.primitive(combo))
                new_masks.append(common | (1 << k))
        rays, masks = new_rays, new_masks
        logger.debug("double description: row %d/%d, %d rays", k + 1, len(rows), len(rays))
    return rays


def face_vertices(hrep, support, interior):
    """vertices of the face where coordinates outside `support` vanish

    interior: a coordinate vector in the relative interior of that face.
    """
    support = list(support)
    eq_rows, _ = hrep.equality_matrix()
    restricted = [[row[i] for i in support] for row in eq_rows]
    basis = linalg.nullspace(restricted, len(support))
    d = len(basis)
    rows = []
    for pos, i in enumerate(support):
        rows.append(linalg.primitive([interior[i]] + [b[pos] for b in basis]))
    rows.append([1] + [0] * d)
    rays = extreme_rays(rows)
    vertices = []
    for r in rays:
        s = r[0]
        if s <= 0:
            raise error.SctxError("unbounded direction in a bounded polytope")
        point = [ZERO] * len(hrep.coords)
        for pos, i in enumerate(support):
            point[i] = interior[i] + sum((Fraction(r[1 + t], s) * basis[t][pos] for t in range(d)), ZERO)
        vertices.append(point)
    vertices.sort()
    return vertices


def _check_size(x, m, cap):
    n = len(coordinates(x, m))
    cap = config.coordinate_cap(cap)
    if n > cap:
        raise error.CapExceededError(f"coordinates of {x.name}", n, cap)


def enumerate_vertices(x, m, cap=None):
    _check_size(x, m, cap)
    hrep = build_hrep(x, m)
    interior = vector(sdist.uniform_sdist(x, m))
    points = face_vertices(hrep, range(len(hrep.coords)), interior)
    vertices = [from_vector(x, m, v) for v in points]
    logger.info("%s, m=%d: %d vertices", x.name, m, len(vertices))
    return vertices


def vsupp(p, cap=None):
    """vertices q with q <= p, i.e. of the minimal face containing p"""
    x, m = p.scenario, p.m
    _check_size(x, m, cap)
    hrep = build_hrep(x, m)
    vec = vector(p)
    support = [i for i, v in enumerate(vec) if v != 0]
    points = face_vertices(hrep, support, vec)
    return [from_vector(x, m, v) for v in points]


def is_closed_vertex_set(vs, cap=None):
    vs = list(vs)
    hrep = build_hrep(vs[0].scenario, vs[0].m)
    bad = [q for q in vs if not is_vertex(q, hrep)]
    if bad:
        raise error.ValidationError(
            [error.Violation("vertex set", "not a vertex", repr(q)) for q in bad], what="closed set")
    mixture = sdist.uniform_mixture(vs)
    return set(vsupp(mixture, cap)) == set(vs)


def classify_vertices(x, m, cap=None, vertices=None):
    """(noncontextual, contextual) split of the vertex list"""
    vertices = vertices if vertices is not None else enumerate_vertices(x, m, cap)
    labelings = sdist.enumerate_deterministic(x, m)
    noncontextual, contextual = [], []
    for q in vertices:
        if is_noncontextual(q, labelings=labelings).noncontextual:
            noncontextual.append(q)
        else:
            contextual.append(q)
    return noncontextual, contextual


def random_point(vertices, rng, max_terms=3, max_weight=10):
    """seeded convex combination of 1..max_terms distinct vertices"""
    if not isinstance(rng, random.Random):
        rng = random.Random(rng)
    k = rng.randint(1, min(max_terms, len(vertices)))
    chosen = rng.sample(range(len(vertices)), k)
    raw = [rng.randint(1, max_weight) for _ in chosen]
    total = sum(raw)
    return sdist.mix([Fraction(w, total) for w in raw], [vertices[i] for i in chosen])
