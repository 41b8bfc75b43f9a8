"""
*** SCTX: simplicial distributions and contextuality ***
License GNU GPL version 3 (See LICENSE)

cone.py: join decompositions on cones and suspensions

a distribution p on CX splits into weights lambda_j (the mass of cone
outcome j, the same on every cone generator when X is connected) and
conditional distributions p^(j) on X; a zero weight carries no component.

"""
import logging
from fractions import Fraction

from . import distribution, error, lp, polytope, scenario, sdist

logger = logging.getLogger("sctx.cone")

ZERO = Fraction(0)
ONE = Fraction(1)


class JoinPoint:
    """[(lambda_j, p^(j) or None)] for j in Z_m"""

    def __init__(self, parts):
        self.parts = [(Fraction(lam), comp) for lam, comp in parts]

    @property
    def m(self):
        return len(self.parts)

    def weights(self):
        return [lam for lam, _ in self.parts]

    def components(self):
        return [comp for _, comp in self.parts]

    def __getitem__(self, j):
        return self.parts[j]

    def __iter__(self):
        return iter(self.parts)

    def __eq__(self, other):
        return isinstance(other, JoinPoint) and self.parts == other.parts

    def __repr__(self):
        body = ", ".join(f"<{lam}, {'*' if comp is None else comp.scenario.name}>" for lam, comp in self.parts)
        return f"JoinPoint({body})"

    def violations(self):
        found = []
        if sum(self.weights(), ZERO) != 1:
            found.append(error.Violation("join", "weights not normalized"))
        for j, (lam, comp) in enumerate(self.parts):
            if lam < 0:
                found.append(error.Violation(f"lambda_{j}", "negative weight"))
            if (lam == 0) != (comp is None):
                found.append(error.Violation(f"lambda_{j}", "zero weight iff no component"))
            if comp is not None:
                found.extend(sdist.validate_sdist(comp))
        return found

    def mixture(self):
        """sum_j lambda_j p^(j) on the base"""
        used = [(lam, comp) for lam, comp in self.parts if comp is not None]
        return sdist.mix([lam for lam, _ in used], [comp for _, comp in used])


class SuspensionPoint:
    def __init__(self, up, down):
        self.up = up
        self.down = down

    def __eq__(self, other):
        return isinstance(other, SuspensionPoint) and (self.up, self.down) == (other.up, other.down)

    def __repr__(self):
        return f"SuspensionPoint(up={self.up!r}, down={self.down!r})"


def kappa(j, q, m):
    return JoinPoint([(ONE, q) if k == j else (ZERO, None) for k in range(m)])


def join_mix(weights, points):
    """convex combination of join points"""
    parts = distribution.join_convex(weights, [p.parts for p in points], sdist.mix)
    return JoinPoint(parts)


def join_is_vertex(point, vertex_test):
    """vertices of a join: one full weight on a vertex component"""
    full = [comp for lam, comp in point if lam == 1]
    return len(full) == 1 and bool(vertex_test(full[0]))


# --- generic split and assembly along one cone of a space


def _decompose(p, base, mapping):
    m = p.m
    gens = base.generators()
    lambdas = None
    for g in gens:
        P = p.at(mapping[g])
        sums = [ZERO] * m
        for y, mass in P.items():
            sums[y[0]] += mass
        if lambdas is None:
            lambdas = sums
        elif sums != lambdas:
            raise error.ValidationError(
                [error.Violation(mapping[g], "cone weight", f"{sums} != {lambdas}")],
                what="cone decomposition")
    parts = []
    for j in range(m):
        lam = lambdas[j]
        if lam == 0:
            parts.append((ZERO, None))
            continue
        dists = {}
        for g in gens:
            P = p.at(mapping[g])
            dists[g] = distribution.Dist(
                m, base.dim(g) + 1,
                {y[1:]: mass / lam for y, mass in P.items() if y[0] == j}, check=False)
        parts.append((lam, sdist.SDist(base, m, dists, check=False)))
    return JoinPoint(parts)


def _assemble(point, base, mapping, m):
    error.raise_if(point.violations(), what="join point")
    if point.m != m:
        raise error.MismatchError(f"join point has {point.m} parts, modulus is {m}")
    dists = {}
    for g in base.generators():
        masses = {}
        for j, (lam, comp) in enumerate(point):
            if comp is None:
                continue
            for y, mass in comp[g].items():
                masses[(j,) + y] = lam * mass
        dists[mapping[g]] = distribution.Dist(m, base.dim(g) + 2, masses, check=False)
    return dists


def cone_decompose(p):
    cx = p.scenario
    c = scenario.cone_point(cx)
    scenario.require_connected(cx.base)
    return _decompose(p, cx.base, cx.cones[c])


def cone_assemble(point, base, cx=None):
    """beta: p_(c,x)(a_0, a) = lambda_{a_0} p^(a_0)_x(a)"""
    cx = cx or scenario.cone(base)
    c = scenario.cone_point(cx)
    m = point.m
    return sdist.SDist(cx, m, _assemble(point, base, cx.cones[c], m), check=False)


def cone_labeling(phi, j, cx):
    """the transpose phi' on CX with phi'(c) = j"""
    labels = dict(phi.labels)
    labels[scenario.cone_point(cx)] = j
    return sdist.DeterministicMap(cx, labels, phi.m)


def cone_split_mixture(Q, cx):
    """split a mixture of labelings of CX by the cone label"""
    c = scenario.cone_point(cx)
    base = cx.base
    m = next(iter(Q)).m
    parts = [[phi for phi in Q if phi[c] == j] for j in range(m)]
    split = distribution.partition_split(Q, parts)
    result = []
    for lam, component in split:
        if component is None:
            result.append((ZERO, None))
        else:
            result.append((lam, {sdist.restrict_labeling(phi, base): w for phi, w in component.items()}))
    return result


def vsupp_decomposed(p, cap=None):
    cx = p.scenario
    point = cone_decompose(p)
    result = []
    for j, (lam, comp) in enumerate(point):
        if comp is None:
            continue
        for q in polytope.vsupp(comp, cap):
            result.append(cone_assemble(kappa(j, q, p.m), cx.base, cx))
    return result


# --- suspensions


def _check_gluing(sp):
    if sp.up.mixture() != sp.down.mixture():
        raise error.GluingError("up and down mixtures differ on the base")


def suspension_decompose(p):
    sx = p.scenario
    base = sx.base
    scenario.require_connected(base)
    up = _decompose(p, base, sx.cones[scenario.UP])
    down = _decompose(p, base, sx.cones[scenario.DOWN])
    sp = SuspensionPoint(up, down)
    _check_gluing(sp)
    return sp


def suspension_assemble(sp, base, sx=None):
    sx = sx or scenario.suspension(base)
    _check_gluing(sp)
    m = sp.up.m
    dists = _assemble(sp.up, base, sx.cones[scenario.UP], m)
    dists.update(_assemble(sp.down, base, sx.cones[scenario.DOWN], m))
    return sdist.SDist(sx, m, dists, check=False)


class SuspensionVerdict:
    def __init__(self, noncontextual, witnesses=None, farkas=None):
        self.noncontextual = noncontextual
        self.witnesses = witnesses
        self.farkas = farkas

    def __repr__(self):
        return f"SuspensionVerdict(noncontextual={self.noncontextual})"


def suspension_noncontextuality_lp(sp, cap=None):
    """mixtures Q^{side,j} on X with Theta(Q^{side,j}) = p^{side,j} and
    sum_j lambda_j Q^{up,j} = sum_j mu_j Q^{down,j}"""
    comps = [("up", j, lam, comp) for j, (lam, comp) in enumerate(sp.up) if comp is not None]
    comps += [("down", j, lam, comp) for j, (lam, comp) in enumerate(sp.down) if comp is not None]
    base = comps[0][3].scenario
    m = comps[0][3].m
    gens = base.generators()
    labelings = sdist.enumerate_deterministic(base, m, cap)

    columns = []  # (component index, labeling index)
    for ci, (_, _, _, comp) in enumerate(comps):
        for k, phi in enumerate(labelings):
            if all(comp[g][phi.on(g)] != 0 for g in gens):
                columns.append((ci, k))

    A, b = [], []
    for ci, (_, _, _, comp) in enumerate(comps):
        for g in gens:
            for y in distribution.outcomes(m, base.dim(g) + 1):
                A.append([ONE if c == ci and labelings[k].on(g) == y else ZERO for (c, k) in columns])
                b.append(comp[g][y])
        A.append([ONE if c == ci else ZERO for (c, _) in columns])
        b.append(ONE)
    for k0 in range(len(labelings)):
        row = []
        for (c, k) in columns:
            side, _, lam, _ = comps[c]
            row.append((lam if side == "up" else -lam) if k == k0 else ZERO)
        if any(v != 0 for v in row):
            A.append(row)
            b.append(ZERO)

    if not columns:
        logger.info("suspension LP: no consistent labelings")
        return SuspensionVerdict(False)
    result = lp.solve_standard(A, b)
    if result.status == lp.INFEASIBLE:
        if not lp.check_standard_farkas(A, b, result.farkas):
            raise error.CertificateError("suspension LP certificate failed its exact check")
        logger.info("suspension LP: contextual")
        return SuspensionVerdict(False, farkas=result.farkas)

    witnesses = {}
    for (c, k), w in zip(columns, result.x):
        side, j, _, _ = comps[c]
        if w != 0:
            witnesses.setdefault((side, j), {})[labelings[k]] = w
    for side, j, lam, comp in comps:
        if sdist.theta(witnesses.get((side, j), {}), base, m) != comp:
            raise error.CertificateError(f"witness for {side} {j} does not reproduce its component")
    logger.info("suspension LP: noncontextual")
    return SuspensionVerdict(True, witnesses=witnesses)
