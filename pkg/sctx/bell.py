"""
*** SCTX: simplicial distributions and contextuality ***
License GNU GPL version 3 (See LICENSE)

bell.py: Bell inequalities

an inequality reads  sum terms.p <= bound + sum rhs_terms.p  where each term
is (simplex, outcome, coefficient) and p is evaluated on that simplex.

"""
import logging
import random
from fractions import Fraction

from . import config, distribution, error, polytope, scenario, sdist, utils

logger = logging.getLogger("sctx.bell")

ZERO = Fraction(0)


def _canonical(terms):
    acc = {}
    for simplex, outcome, coef in terms:
        key = (simplex, tuple(outcome))
        acc[key] = acc.get(key, ZERO) + Fraction(coef)
    return [(s, y, c) for (s, y), c in sorted(acc.items()) if c != 0]


class LinearInequality:
    sense = "le"

    def __init__(self, terms, bound, rhs_terms=(), name=None, first=None):
        terms = list(terms)
        self.terms = _canonical(terms)
        self.rhs_terms = _canonical(rhs_terms)
        self.bound = Fraction(bound)
        self.name = name
        if not self.terms:
            raise error.ValidationError([error.Violation(name or "inequality", "no terms")], what="inequality")
        # x_1 is the first simplex as written, not after sorting
        kept = {s for s, _, _ in self.terms}
        self.first = first if first in kept else next(s for s, _, _ in terms if s in kept)

    def key(self):
        return (tuple(self.terms), tuple(self.rhs_terms), self.bound)

    def __eq__(self, other):
        return isinstance(other, LinearInequality) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"LinearInequality({self.name or ''}: {len(self.terms)} terms <= {self.bound})"

    def simplices(self):
        return {s for s, _, _ in self.terms} | {s for s, _, _ in self.rhs_terms}

    def first_simplex(self):
        return self.first


class Evaluation:
    def __init__(self, lhs, bound):
        self.lhs = lhs
        self.bound = bound
        self.satisfied = lhs <= bound

    def __iter__(self):
        return iter((self.lhs, self.satisfied))

    def __repr__(self):
        return f"Evaluation({self.lhs} <= {self.bound}: {self.satisfied})"


# the four CHSH chains: a minus sign on one edge each
CHSH_SIGNS = [(1, 1, 1, -1), (1, 1, -1, 1), (1, -1, 1, 1), (-1, 1, 1, 1)]


def chsh_family(edges=("s1", "s2", "s3", "s4")):
    """upper and lower bound of each chain, as eight one-sided inequalities"""
    family = []
    for k, signs in enumerate(CHSH_SIGNS, start=1):
        terms = []
        for edge, sign in zip(edges, signs):
            terms.append((edge, (0, 0), sign))
            terms.append((edge, (1, 1), sign))
        family.append(LinearInequality(terms, 2, name=f"chain{k}-upper"))
        family.append(LinearInequality([(s, y, -c) for s, y, c in terms], 0, name=f"chain{k}-lower"))
    return family


def evaluate(ineq, p):
    x = p.scenario
    missing = [s for s in ineq.simplices() if s not in x]
    if missing:
        raise error.MismatchError(f"unknown simplices {sorted(missing)} in {x.name}")
    lhs = sum((c * p.at(s)[y] for s, y, c in ineq.terms), ZERO)
    lhs -= sum((c * p.at(s)[y] for s, y, c in ineq.rhs_terms), ZERO)
    return Evaluation(lhs, ineq.bound)


def satisfies(family, p):
    return all(evaluate(ineq, p).satisfied for ineq in family)


def lift_to_cone(family, m, x=None, cone_point="c"):
    """one inequality per member and cone outcome j:

    sum B p_(c,x)(j,y) <= R sum_y p_(c,x_1)(j,y), x_1 the first simplex.
    """
    lifted = []
    for ineq in family:
        if x is not None:
            missing = [s for s in ineq.simplices() if s not in x]
            if missing:
                raise error.MismatchError(f"unknown simplices {sorted(missing)} in {x.name}")
        first = ineq.first_simplex()
        arity = next(len(y) for s, y, _ in ineq.terms if s == first)
        for j in range(m):
            terms = [(scenario.coned_id(cone_point, s), (j,) + tuple(y), c) for s, y, c in ineq.terms]
            rhs_terms = [
                (scenario.coned_id(cone_point, first), (j,) + y, ineq.bound)
                for y in distribution.outcomes(m, arity)
            ]
            for s, y, c in ineq.rhs_terms:
                terms.append((scenario.coned_id(cone_point, s), (j,) + tuple(y), -c))
            name = f"{ineq.name}-{j}" if ineq.name else None
            lifted.append(LinearInequality(terms, 0, rhs_terms, name=name))
    return lifted


# --- verification


class CharacterizationReport:
    def __init__(self):
        self.vertices = 0
        self.noncontextual_vertices = 0
        self.contextual_vertices = 0
        self.samples = 0
        self.counterexamples = []

    @property
    def passed(self):
        return not self.counterexamples

    def __repr__(self):
        return (f"CharacterizationReport(passed={self.passed}, vertices={self.vertices}, "
                f"samples={self.samples}, counterexamples={len(self.counterexamples)})")


def verify_characterization(x, m, family, samples=None, seed=None, cap=None, vertices=None,
                            progress=False):
    """does the family decide noncontextuality on x? checks every vertex and
    `samples` seeded random points"""
    samples = config.gx.samples if samples is None else samples
    seed = config.gx.seed if seed is None else seed
    report = CharacterizationReport()
    vertices = vertices if vertices is not None else polytope.enumerate_vertices(x, m, cap)
    labelings = sdist.enumerate_deterministic(x, m, cap)
    report.vertices = len(vertices)

    for q in vertices:
        noncontextual = polytope.is_noncontextual(q, labelings=labelings).noncontextual
        ok = satisfies(family, q)
        if noncontextual:
            report.noncontextual_vertices += 1
            if not ok:
                report.counterexamples.append(("noncontextual vertex violates the family", q))
        else:
            report.contextual_vertices += 1
            if ok:
                report.counterexamples.append(("contextual vertex satisfies the family", q))

    rng = random.Random(seed)
    bar = utils.ProgressBar(total=samples, prefix="sampling") if progress else None
    for n in range(samples):
        p = polytope.random_point(vertices, rng)
        noncontextual = polytope.is_noncontextual(p, labelings=labelings).noncontextual
        if noncontextual != satisfies(family, p):
            report.counterexamples.append(("sample verdict differs from the family", p))
        report.samples += 1
        if bar:
            bar.update(n + 1)
    logger.info("%s: characterization %s (%d vertices, %d samples)",
                x.name, "passed" if report.passed else "failed", report.vertices, report.samples)
    return report


class BellReport:
    def __init__(self, valid, saturated, violated):
        self.valid = valid
        self.saturated = saturated
        self.violated = violated

    @property
    def is_bell_inequality(self):
        return self.valid and self.saturated and self.violated

    def __repr__(self):
        return f"BellReport(valid={self.valid}, saturated={self.saturated}, violated={self.violated})"


def is_bell_inequality(ineq, x, m, cap=None, vertices=None):
    """valid on every deterministic point, saturated by one, violated by a vertex"""
    values = [evaluate(ineq, sdist.deterministic_sdist(phi)).lhs
              for phi in sdist.enumerate_deterministic(x, m, cap)]
    valid = all(v <= ineq.bound for v in values)
    saturated = any(v == ineq.bound for v in values)
    vertices = vertices if vertices is not None else polytope.enumerate_vertices(x, m, cap)
    violated = any(not evaluate(ineq, q).satisfied for q in vertices)
    return BellReport(valid, saturated, violated)
