from fractions import Fraction

from sctx import distribution, error

HALF = Fraction(1, 2)


def test_average_powers():
    plus = distribution.average_power(2, 0)
    minus = distribution.average_power(2, 1)
    assert dict(plus.items()) == {(0, 0): HALF, (1, 1): HALF}
    assert dict(minus.items()) == {(0, 1): HALF, (1, 0): HALF}
    assert distribution.is_average(minus) == 1
    assert distribution.is_average(distribution.uniform(2, 2)) is None
    for m in (2, 3):
        for j in range(m):
            S = distribution.average_power(m, j)
            assert distribution.marginalize(S, 0) == distribution.uniform(m, 1)
            assert distribution.marginalize(S, 1) == distribution.uniform(m, 1)


def test_convolution():
    m = 3
    S1 = distribution.average_power(m, 1)
    S2 = distribution.average_power(m, 2)
    assert distribution.convolve(S1, S2) == distribution.average_power(m, 0)
    d = distribution.delta((1, 2), m)
    assert distribution.convolve(d, S1) == distribution.shift(S1, (1, 2))


def test_delta_and_uniform():
    d = distribution.delta((1, 0, 1), 2)
    assert d.support() == [(1, 0, 1)]
    assert d[(1, 0, 1)] == 1
    assert d[(0, 0, 0)] == 0
    u = distribution.uniform(3, 2)
    assert len(u.support()) == 9
    assert u[(2, 1)] == Fraction(1, 9)


def test_marginals():
    P = distribution.Dist(2, 3, {(0, 0, 1): HALF, (1, 1, 1): HALF})
    assert distribution.marginalize(P, 0) == distribution.Dist(2, 2, {(0, 1): HALF, (1, 1): HALF})
    assert distribution.marginalize(P, 2) == distribution.Dist(2, 2, {(0, 0): HALF, (1, 1): HALF})
    assert distribution.keep(P, (2, 0)) == distribution.Dist(2, 2, {(1, 0): HALF, (1, 1): HALF})
    try:
        distribution.marginalize(P, 3)
        assert False
    except error.MismatchError:
        pass
    try:
        distribution.marginalize(distribution.delta((0,), 2), 0)
        assert False
    except error.MismatchError:
        pass


def test_validation():
    bad = distribution.Dist(2, 1, {(0,): Fraction(3, 2), (1,): -HALF}, check=False)
    rules = [v.rule for v in bad.violations()]
    assert rules == ["negative mass"]
    short = distribution.Dist(2, 1, {(0,): HALF}, check=False)
    assert [v.rule for v in short.violations()] == ["not normalized"]
    try:
        distribution.Dist(2, 1, {(0,): HALF})
        assert False
    except error.ValidationError:
        pass
    try:
        distribution.Dist(2, 2, {(0,): 1})
        assert False
    except error.MismatchError:
        pass


def test_outcomes_reduce_mod_m():
    P = distribution.Dist(3, 2, {(4, -1): 1})
    assert P.support() == [(1, 2)]


def test_mix():
    plus = distribution.average_power(2, 0)
    minus = distribution.average_power(2, 1)
    assert distribution.mix([HALF, HALF], [plus, minus]) == distribution.uniform(2, 2)
    try:
        distribution.mix([HALF, HALF], [plus, distribution.uniform(3, 2)])
        assert False
    except error.MismatchError:
        pass


def test_push_forward():
    total = distribution.push_forward(distribution.uniform(2, 2), lambda y: ((y[0] + y[1]) % 2,), 1)
    assert total == distribution.uniform(2, 1)
    plus = distribution.average_power(2, 0)
    assert distribution.push_forward(plus, lambda y: ((y[0] + y[1]) % 2,), 1) == distribution.delta((0,), 2)


def test_partition_split():
    masses = {"a": Fraction(1, 4), "b": Fraction(1, 4), "c": HALF}
    split = distribution.partition_split(masses, [["a", "b"], ["c"], ["d"]])
    assert split[0] == (HALF, {"a": HALF, "b": HALF})
    assert split[1] == (HALF, {"c": 1})
    assert split[2] == (0, None)
    assert distribution.reassemble(split) == masses


def test_join_convex():
    first = [(Fraction(1), "x"), (Fraction(0), None)]
    second = [(Fraction(0), None), (Fraction(1), "y")]
    joined = distribution.join_convex([Fraction(1, 3), Fraction(2, 3)], [first, second],
                                      lambda weights, comps: list(zip(weights, comps)))
    assert joined == [(Fraction(1, 3), [(1, "x")]), (Fraction(2, 3), [(1, "y")])]
    # a zero weight kills the component
    only = distribution.join_convex([1, 0], [first, second], lambda weights, comps: comps)
    assert only[1] == (0, None)


def test_all():
    test_average_powers()
    test_convolution()
    test_delta_and_uniform()
    test_marginals()
    test_validation()
    test_outcomes_reduce_mod_m()
    test_mix()
    test_push_forward()
    test_partition_split()
    test_join_convex()


if __name__ == '__main__':
    test_all()
