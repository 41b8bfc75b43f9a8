"""
*** SCTX: simplicial distributions and contextuality ***
License GNU GPL version 3 (See LICENSE)

distribution.py: exact distributions on Z_m^(n+1)

"""
import itertools
from fractions import Fraction

from . import error

ZERO = Fraction(0)
ONE = Fraction(1)


class Dist:
    """probability distribution on outcome tuples of length `arity` over Z_m

    only the support is stored, keyed by outcome tuple in lexicographic order.
    """

    __slots__ = ("m", "arity", "_p", "_hash")

    def __init__(self, m, arity, masses, check=True):
        if m < 2:
            raise error.MismatchError(f"modulus must be >= 2, got {m}")
        self.m = m
        self.arity = arity
        acc = {}
        for outcome, mass in dict(masses).items():
            outcome = tuple(int(a) % m for a in outcome)
            if len(outcome) != arity:
                raise error.MismatchError(f"outcome {outcome} has length {len(outcome)}, expected {arity}")
            acc[outcome] = acc.get(outcome, ZERO) + Fraction(mass)
        self._p = {y: acc[y] for y in sorted(acc) if acc[y] != 0}
        self._hash = None
        if check:
            error.raise_if(self.violations(), what="distribution")

    def violations(self, subject="dist"):
        found = []
        for y, mass in self._p.items():
            if mass < 0:
                found.append(error.Violation(subject, "negative mass", f"{y}: {mass}"))
        total = sum(self._p.values(), ZERO)
        if total != 1:
            found.append(error.Violation(subject, "not normalized", f"total {total}"))
        return found

    def __getitem__(self, outcome):
        return self._p.get(tuple(outcome), ZERO)

    def items(self):
        return self._p.items()

    def support(self):
        return list(self._p)

    def outcomes(self):
        """every outcome of Z_m^arity in lexicographic order"""
        return outcomes(self.m, self.arity)

    def __eq__(self, other):
        return (
            isinstance(other, Dist)
            and (self.m, self.arity) == (other.m, other.arity)
            and self._p == other._p
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.m, self.arity, tuple(self._p.items())))
        return self._hash

    def __repr__(self):
        body = ", ".join(f"{''.join(map(str, y))}: {p}" for y, p in self._p.items())
        return f"Dist(m={self.m}, {{{body}}})"


def outcomes(m, arity):
    return list(itertools.product(range(m), repeat=arity))


def _same_shape(P, Q):
    if (P.m, P.arity) != (Q.m, Q.arity):
        raise error.MismatchError(
            f"shape mismatch: m={P.m}, arity={P.arity} against m={Q.m}, arity={Q.arity}")


def delta(outcome, m):
    outcome = tuple(outcome)
    return Dist(m, len(outcome), {outcome: ONE}, check=False)


def uniform(m, arity):
    mass = Fraction(1, m**arity)
    return Dist(m, arity, {y: mass for y in outcomes(m, arity)}, check=False)


def average_power(m, j):
    """S^j: mass 1/m on every pair (a, a+j)"""
    mass = Fraction(1, m)
    return Dist(m, 2, {(a, (a + j) % m): mass for a in range(m)}, check=False)


def convolve(P, Q):
    _same_shape(P, Q)
    m = P.m
    acc = {}
    for a, p in P.items():
        for b, q in Q.items():
            y = tuple((s + t) % m for s, t in zip(a, b))
            acc[y] = acc.get(y, ZERO) + p * q
    return Dist(m, P.arity, acc, check=False)


def push_forward(P, f, arity):
    """D(f)(P) along an outcome map f: Z_m^arity(P) -> Z_m^arity"""
    acc = {}
    for y, p in P.items():
        z = tuple(f(y))
        acc[z] = acc.get(z, ZERO) + p
    return Dist(P.m, arity, acc, check=False)


def keep(P, positions):
    """marginal on the given coordinate positions (in that order)"""
    positions = tuple(positions)
    return push_forward(P, lambda y: tuple(y[k] for k in positions), len(positions))


def marginalize(P, i):
    """D(d_i): sum out coordinate i"""
    if P.arity < 2:
        raise error.MismatchError(f"cannot marginalize a distribution of arity {P.arity}")
    if not 0 <= i < P.arity:
        raise error.MismatchError(f"face index {i} out of range for arity {P.arity}")
    return keep(P, [k for k in range(P.arity) if k != i])


def shift(P, outcome):
    """translate by an outcome: y -> y + outcome"""
    m = P.m
    return push_forward(P, lambda y: tuple((a + b) % m for a, b in zip(y, outcome)), P.arity)


def mix(weights, dists):
    """convex combination sum_i t_i P_i"""
    weights = [Fraction(t) for t in weights]
    dists = list(dists)
    if not dists or len(weights) != len(dists):
        raise ValueError("need one weight per distribution")
    if any(t < 0 for t in weights) or sum(weights) != 1:
        raise error.ValidationError(
            [error.Violation("mix", "weights", "not a probability vector")], what="mix")
    first = dists[0]
    acc = {}
    for t, P in zip(weights, dists):
        _same_shape(first, P)
        if t == 0:
            continue
        for y, p in P.items():
            acc[y] = acc.get(y, ZERO) + t * p
    return Dist(first.m, first.arity, acc, check=False)


def is_average(P):
    """j when P = S^j, else None"""
    if P.arity != 2:
        return None
    for j in range(P.m):
        if P == average_power(P.m, j):
            return j
    return None


def partition_split(masses, parts):
    """split a finite distribution along a partition of its universe

    masses: mapping element -> mass (a Dist works too)
    parts: list of collections of elements, pairwise disjoint

    returns [(weight, component)] with component a dict element -> mass,
    normalized, or None when the weight is zero.
    """
    masses = dict(masses.items())
    owner = {}
    for index, part in enumerate(parts):
        for element in part:
            if element in owner:
                raise ValueError(f"{element!r} occurs in two parts")
            owner[element] = index
    for element, mass in masses.items():
        if mass and element not in owner:
            raise ValueError(f"{element!r} not covered by the partition")
    result = []
    for index, part in enumerate(parts):
        weight = sum((masses.get(element, ZERO) for element in part), ZERO)
        if weight == 0:
            result.append((ZERO, None))
            continue
        component = {
            element: masses[element] / weight
            for element in part if masses.get(element, ZERO) != 0
        }
        result.append((weight, component))
    return result


def reassemble(split):
    """inverse of partition_split"""
    acc = {}
    for weight, component in split:
        if component is None:
            continue
        for element, mass in component.items():
            acc[element] = acc.get(element, ZERO) + weight * mass
    return acc


def join_convex(weights, points, mix_fn):
    """convex combination in the join of convex sets

    points: list of [(lambda_j, component_j or None)] of equal length
    mix_fn(weights, components) mixes components of one summand
    """
    weights = [Fraction(t) for t in weights]
    size = len(points[0])
    result = []
    for j in range(size):
        lam = sum((t * point[j][0] for t, point in zip(weights, points)), ZERO)
        if lam == 0:
            result.append((ZERO, None))
            continue
        used = [(t * point[j][0] / lam, point[j][1])
                for t, point in zip(weights, points) if t * point[j][0] != 0]
        result.append((lam, mix_fn([u for u, _ in used], [c for _, c in used])))
    return result
