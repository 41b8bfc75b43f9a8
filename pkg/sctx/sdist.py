"""
*** SCTX: simplicial distributions and contextuality ***
License GNU GPL version 3 (See LICENSE)

sdist.py: simplicial distributions on (X, Delta_{Z_m})

a simplicial distribution stores one Dist per generator; the distribution
on any other simplex is the marginal from its canonical parent.
simplicial maps X -> Delta_{Z_m} are vertex labelings (DeterministicMap).

"""
import itertools
import logging
from fractions import Fraction

from . import config, distribution, error, scenario

logger = logging.getLogger("sctx.sdist")

ZERO = Fraction(0)


class SDist:
    def __init__(self, x, m, dists, check=True):
        self.scenario = x
        self.m = m
        self._dists = {g: dists[g] for g in x.generators() if g in dists}
        self._extra = [g for g in dists if g not in self._dists]
        self._hash = None
        if check:
            error.raise_if(validate_sdist(self), what=f"distribution on {x.name}")

    def __getitem__(self, generator):
        return self._dists[generator]

    def items(self):
        return [(g, self._dists[g]) for g in self.scenario.generators() if g in self._dists]

    def at(self, ident):
        """distribution on any simplex, by marginalizing its canonical parent"""
        gen, kept = self.scenario.canonical_parent(ident)
        P = self._dists[gen]
        if len(kept) == P.arity:
            return P
        return distribution.keep(P, kept)

    def key(self):
        return (self.m, tuple(self.items()))

    def __eq__(self, other):
        return isinstance(other, SDist) and self.key() == other.key()

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.key())
        return self._hash

    def __repr__(self):
        return f"SDist({self.scenario.name}, m={self.m}, {dict(self.items())!r})"


class DeterministicMap:
    """vertex labeling X_0 -> Z_m"""

    def __init__(self, x, labels, m):
        self.scenario = x
        self.m = m
        self.labels = {v: int(labels[v]) % m for v in x.vertices() if v in labels}
        missing = [v for v in x.vertices() if v not in self.labels]
        if missing:
            raise error.ValidationError(
                [error.Violation(v, "unlabeled vertex") for v in missing], what="labeling")

    def __getitem__(self, vertex):
        return self.labels[vertex]

    def on(self, ident):
        """outcome tuple of a simplex: the labels of its ordered vertices"""
        return tuple(self.labels[v] for v in self.scenario.vertices_of(ident))

    def values(self):
        return tuple(self.labels[v] for v in self.scenario.vertices())

    def key(self):
        return (self.m, tuple(sorted(self.labels.items())))

    def __eq__(self, other):
        return isinstance(other, DeterministicMap) and self.key() == other.key()

    def __lt__(self, other):
        return self.values() < other.values()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"DeterministicMap({self.labels!r})"


# --- validation


def validate_sdist(p):
    """list of Violation records; empty means p is a simplicial distribution"""
    x = p.scenario
    found = []
    for g in p._extra:
        found.append(error.Violation(g, "not a generator"))
    for g in x.generators():
        if g not in p._dists:
            found.append(error.Violation(g, "missing distribution"))
            continue
        P = p._dists[g]
        if P.m != p.m:
            found.append(error.Violation(g, "modulus", f"{P.m} != {p.m}"))
        if P.arity != x.dim(g) + 1:
            found.append(error.Violation(g, "arity", f"{P.arity} != {x.dim(g) + 1}"))
        found.extend(P.violations(subject=g))
    if found:
        return found

    for ident, occurrences in x.occurrences().items():
        if len(occurrences) < 2:
            continue
        (gen, kept) = occurrences[0]
        reference = distribution.keep(p[gen], kept)
        for (other, other_kept) in occurrences[1:]:
            if distribution.keep(p[other], other_kept) != reference:
                found.append(error.Violation(
                    ident, "marginal mismatch",
                    f"{gen}{list(kept)} vs {other}{list(other_kept)}"))
    return found


def validate_or_raise(p):
    error.raise_if(validate_sdist(p), what=f"distribution on {p.scenario.name}")
    return p


def _same_space(p, q):
    if p.m != q.m or not p.scenario.same_as(q.scenario):
        raise error.MismatchError(
            f"different spaces: {p.scenario.name}/m={p.m} and {q.scenario.name}/m={q.m}")


# --- deterministic maps


def enumerate_deterministic(x, m, cap=None):
    vertices = x.vertices()
    size = m ** len(vertices)
    cap = config.labeling_cap(cap)
    if size > cap:
        raise error.CapExceededError(f"labelings of {x.name}", size, cap)
    logger.debug("enumerating %d labelings of %s", size, x.name)
    return [
        DeterministicMap(x, dict(zip(vertices, values)), m)
        for values in itertools.product(range(m), repeat=len(vertices))
    ]


def deterministic_sdist(phi):
    x = phi.scenario
    return SDist(x, phi.m, {g: distribution.delta(phi.on(g), phi.m) for g in x.generators()},
                 check=False)


def constant_map(x, m, value=0):
    return DeterministicMap(x, {v: value for v in x.vertices()}, m)


def add(phi, psi):
    return DeterministicMap(phi.scenario, {v: phi[v] + psi[v] for v in phi.labels}, phi.m)


def negate(phi):
    return DeterministicMap(phi.scenario, {v: -phi[v] for v in phi.labels}, phi.m)


def restrict_labeling(phi, sub):
    return DeterministicMap(sub, phi.labels, phi.m)


def is_deterministic(p):
    """the labeling phi with p = delta^phi, or None"""
    labels = {}
    for v in p.scenario.vertices():
        support = p.at(v).support()
        if len(support) != 1:
            return None
        labels[v] = support[0][0]
    phi = DeterministicMap(p.scenario, labels, p.m)
    if deterministic_sdist(phi) != p:
        return None
    return phi


# --- mixtures


def mixture_violations(Q):
    found = []
    if any(w < 0 for w in Q.values()):
        found.append(error.Violation("mixture", "negative weight"))
    if sum(Q.values(), ZERO) != 1:
        found.append(error.Violation("mixture", "not normalized"))
    return found


def theta(Q, x=None, m=None):
    """Theta(Q)_g(y) = sum of Q(phi) over phi with phi_g = y"""
    Q = {phi: Fraction(w) for phi, w in Q.items() if w != 0}
    error.raise_if(mixture_violations(Q), what="mixture")
    first = next(iter(Q))
    x = x or first.scenario
    m = m or first.m
    acc = {g: {} for g in x.generators()}
    for phi, w in Q.items():
        for g in acc:
            y = phi.on(g)
            acc[g][y] = acc[g].get(y, ZERO) + w
    return SDist(x, m, {g: distribution.Dist(m, x.dim(g) + 1, acc[g], check=False) for g in acc},
                 check=False)


def mix(weights, sdists):
    sdists = list(sdists)
    first = sdists[0]
    for q in sdists[1:]:
        _same_space(first, q)
    x = first.scenario
    return SDist(x, first.m, {
        g: distribution.mix(weights, [q[g] for q in sdists]) for g in x.generators()
    }, check=False)


def uniform_sdist(x, m):
    return SDist(x, m, {g: distribution.uniform(m, x.dim(g) + 1) for g in x.generators()},
                 check=False)


def uniform_mixture(sdists):
    sdists = list(sdists)
    return mix([Fraction(1, len(sdists))] * len(sdists), sdists)


# --- convolution monoid


def product(p, q):
    _same_space(p, q)
    x = p.scenario
    return SDist(x, p.m, {g: distribution.convolve(p[g], q[g]) for g in x.generators()},
                 check=False)


def act(phi, q):
    """(phi . q)_g(y) = q_g(y - phi_g)"""
    if phi.m != q.m or not phi.scenario.same_as(q.scenario):
        raise error.MismatchError("labeling and distribution live on different spaces")
    x = q.scenario
    return SDist(x, q.m, {g: distribution.shift(q[g], phi.on(g)) for g in x.generators()},
                 check=False)


# --- restriction and support


def restrict(p, sub):
    if not scenario.is_embedded(sub, p.scenario):
        raise error.MismatchError(f"{sub.name} is not embedded in {p.scenario.name}")
    return SDist(sub, p.m, {g: p.at(g) for g in sub.generators()}, check=False)


def preceq(q, p):
    """support of q contained in support of p, generatorwise"""
    _same_space(p, q)
    for g, Q in q.items():
        P = p[g]
        if any(P[y] == 0 for y in Q.support()):
            return False
    return True


# --- CHSH boxes


def pr_box(x, minus=("s2", "s3", "s4")):
    """p_- on the given edges, p_+ elsewhere"""
    plus = distribution.average_power(2, 0)
    neg = distribution.average_power(2, 1)
    return SDist(x, 2, {g: neg if g in minus else plus for g in x.generators()})


def pr_boxes(x):
    """the boxes with an odd number of p_- edges, in lexicographic sign order"""
    gens = x.generators()
    boxes = []
    for signs in itertools.product((0, 1), repeat=len(gens)):
        if sum(signs) % 2 == 1:
            boxes.append(pr_box(x, minus=[g for g, s in zip(gens, signs) if s]))
    return boxes
