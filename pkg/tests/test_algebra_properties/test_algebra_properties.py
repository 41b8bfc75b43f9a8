import random
from fractions import Fraction

from sctx import cone, distribution, polytope, scenario, sdist

CASES = 200
MODULI = (2, 3)


def random_weights(rng, k):
    raw = [rng.randint(1, 9) for _ in range(k)]
    return [Fraction(w, sum(raw)) for w in raw]


def random_dist(rng, m, arity):
    support = [tuple(rng.randrange(m) for _ in range(arity)) for _ in range(rng.randint(1, 4))]
    masses = {}
    for y, w in zip(support, random_weights(rng, len(support))):
        masses[y] = masses.get(y, 0) + w
    return distribution.Dist(m, arity, masses)


def random_labeling(rng, x, m):
    return sdist.DeterministicMap(x, {v: rng.randrange(m) for v in x.vertices()}, m)


def random_mixture(rng, x, m, k=3):
    Q = {}
    for w in random_weights(rng, rng.randint(1, k)):
        phi = random_labeling(rng, x, m)
        Q[phi] = Q.get(phi, 0) + w
    return Q


def average_box(x, m, exponents):
    return sdist.SDist(x, m, {g: distribution.average_power(m, e) for g, e in zip(x.generators(), exponents)})


def random_sdist(rng, x, m):
    box = average_box(x, m, [rng.randrange(m) for _ in x.generators()])
    return sdist.mix(random_weights(rng, 2), [sdist.theta(random_mixture(rng, x, m)), box])


def test_average_group():
    for m in MODULI:
        rng = random.Random(m)
        S = [distribution.average_power(m, j) for j in range(m)]
        for _ in range(CASES):
            a, b = rng.randrange(m), rng.randrange(m)
            assert distribution.convolve(S[a], S[b]) == S[(a + b) % m]
            assert distribution.convolve(S[a], S[(-a) % m]) == S[0]


def test_convolution_laws():
    for m in MODULI:
        rng = random.Random(10 + m)
        for _ in range(CASES):
            arity = rng.randint(1, 3)
            P, Q, R = (random_dist(rng, m, arity) for _ in range(3))
            unit = distribution.delta((0,) * arity, m)
            assert distribution.convolve(P, Q) == distribution.convolve(Q, P)
            assert distribution.convolve(distribution.convolve(P, Q), R) == \
                distribution.convolve(P, distribution.convolve(Q, R))
            assert distribution.convolve(P, unit) == P


def test_theta_convex_linear():
    x = scenario.build_cycle(4)
    for m in MODULI:
        rng = random.Random(20 + m)
        for _ in range(CASES):
            Q1, Q2 = random_mixture(rng, x, m), random_mixture(rng, x, m)
            t = Fraction(rng.randint(0, 6), 6)
            combined = {}
            for Q, w in ((Q1, t), (Q2, 1 - t)):
                for phi, mass in Q.items():
                    combined[phi] = combined.get(phi, 0) + w * mass
            expected = sdist.mix([t, 1 - t], [sdist.theta(Q1), sdist.theta(Q2)])
            assert sdist.theta(combined) == expected


def test_group_action():
    x = scenario.build_cycle(4)
    for m in MODULI:
        rng = random.Random(30 + m)
        zero = sdist.constant_map(x, m)
        for _ in range(CASES):
            phi, psi = random_labeling(rng, x, m), random_labeling(rng, x, m)
            q = random_sdist(rng, x, m)
            assert sdist.act(zero, q) == q
            assert sdist.act(sdist.add(phi, psi), q) == sdist.act(phi, sdist.act(psi, q))
            assert sdist.act(phi, sdist.act(sdist.negate(phi), q)) == q
            assert sdist.act(phi, q) == sdist.product(sdist.deterministic_sdist(phi), q)


def test_preceq_under_product():
    x = scenario.build_cycle(4)
    for m in MODULI:
        rng = random.Random(40 + m)
        for _ in range(CASES):
            parts_p = [random_sdist(rng, x, m) for _ in range(2)]
            parts_q = [random_sdist(rng, x, m) for _ in range(2)]
            p = sdist.mix(random_weights(rng, 2), parts_p)
            q = sdist.mix(random_weights(rng, 2), parts_q)
            small_p, small_q = rng.choice(parts_p), rng.choice(parts_q)
            assert sdist.preceq(small_p, p) and sdist.preceq(small_q, q)
            assert sdist.preceq(sdist.product(small_q, small_p), sdist.product(q, p))


def test_cone_weights_agree():
    x = scenario.build_cycle(4)
    cx = scenario.cone(x)
    for m in MODULI:
        rng = random.Random(50 + m)
        for _ in range(CASES):
            lambdas = random_weights(rng, m)
            if rng.random() < 0.3:
                lambdas[0], lambdas[-1] = 0, lambdas[0] + lambdas[-1]
            point = cone.JoinPoint([(lam, random_sdist(rng, x, m) if lam else None) for lam in lambdas])
            p = cone.cone_assemble(point, x, cx)
            for g in cx.generators():
                sums = [0] * m
                for y, mass in p[g].items():
                    sums[y[0]] += mass
                assert sums == point.weights()
            assert cone.cone_decompose(p) == point


def test_mixtures_are_noncontextual():
    x = scenario.build_cycle(4)
    cx = scenario.cone(x)
    rng = random.Random(60)
    labelings = {x.name: sdist.enumerate_deterministic(x, 2), cx.name: sdist.enumerate_deterministic(cx, 2)}
    for space in (x, cx):
        for _ in range(CASES):
            p = sdist.theta(random_mixture(rng, space, 2, k=5))
            assert polytope.is_noncontextual(p, labelings=labelings[space.name]).noncontextual


def test_vsupp_equivariance():
    x = scenario.build_cycle(4)
    vertices = polytope.enumerate_vertices(x, 2)
    rng = random.Random(70)
    for _ in range(CASES):
        p = polytope.random_point(vertices, rng)
        phi = random_labeling(rng, x, 2)
        moved = set(polytope.vsupp(sdist.act(phi, p)))
        assert moved == {sdist.act(phi, q) for q in polytope.vsupp(p)}


def test_all():
    test_average_group()
    test_convolution_laws()
    test_theta_convex_linear()
    test_group_action()
    test_preceq_under_product()
    test_cone_weights_agree()
    test_mixtures_are_noncontextual()
    test_vsupp_equivariance()


if __name__ == '__main__':
    test_all()
