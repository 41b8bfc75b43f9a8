from fractions import Fraction

from sctx import distribution, error, scenario, sdist

HALF = Fraction(1, 2)


def chsh():
    return scenario.build_cycle(4)


def test_deterministic():
    x = chsh()
    labelings = sdist.enumerate_deterministic(x, 2)
    assert len(labelings) == 16
    phi = sdist.DeterministicMap(x, {"v1": 0, "v2": 1, "v3": 1, "v4": 0}, 2)
    assert phi.on("s1") == (0, 1)
    assert phi.on("s4") == (0, 0)
    p = sdist.deterministic_sdist(phi)
    assert sdist.validate_sdist(p) == []
    assert sdist.is_deterministic(p) == phi
    assert sdist.is_deterministic(sdist.pr_box(x)) is None


def test_unlabeled_vertex():
    try:
        sdist.DeterministicMap(chsh(), {"v1": 0}, 2)
        assert False
    except error.ValidationError as e:
        assert sorted(v.subject for v in e.violations) == ["v2", "v3", "v4"]


def test_cap():
    try:
        sdist.enumerate_deterministic(chsh(), 2, cap=10)
        assert False
    except error.CapExceededError as e:
        assert e.size == 16
        assert e.cap == 10


def test_marginal_mismatch():
    x = chsh()
    dists = {g: distribution.delta((0, 0), 2) for g in x.generators()}
    dists["s2"] = distribution.delta((1, 1), 2)
    p = sdist.SDist(x, 2, dists, check=False)
    rules = {(v.subject, v.rule) for v in sdist.validate_sdist(p)}
    assert ("v2", "marginal mismatch") in rules
    assert ("v3", "marginal mismatch") in rules
    try:
        sdist.SDist(x, 2, dists)
        assert False
    except error.ValidationError:
        pass


def test_missing_and_extra():
    x = chsh()
    dists = {g: distribution.average_power(2, 0) for g in ["s1", "s2", "s3"]}
    dists["zz"] = distribution.average_power(2, 0)
    p = sdist.SDist(x, 2, dists, check=False)
    rules = {(v.subject, v.rule) for v in sdist.validate_sdist(p)}
    assert rules == {("zz", "not a generator"), ("s4", "missing distribution")}


def test_pr_boxes():
    x = chsh()
    boxes = sdist.pr_boxes(x)
    assert len(boxes) == 8
    assert len(set(boxes)) == 8
    assert sdist.pr_box(x) in boxes
    for box in boxes:
        assert sdist.validate_sdist(box) == []
    # p_+ on s1, p_- elsewhere
    assert sdist.pr_box(x).at("s1") == distribution.average_power(2, 0)
    assert sdist.pr_box(x).at("v3") == distribution.uniform(2, 1)


def test_theta():
    x = chsh()
    labelings = sdist.enumerate_deterministic(x, 2)
    Q = {phi: Fraction(1, 16) for phi in labelings}
    assert sdist.theta(Q) == sdist.uniform_sdist(x, 2)
    phi = labelings[5]
    assert sdist.theta({phi: 1}) == sdist.deterministic_sdist(phi)
    try:
        sdist.theta({phi: HALF})
        assert False
    except error.ValidationError:
        pass


def test_group():
    x = chsh()
    labelings = sdist.enumerate_deterministic(x, 2)
    zero = sdist.constant_map(x, 2)
    phi, psi = labelings[3], labelings[10]
    assert sdist.add(phi, zero) == phi
    assert sdist.add(phi, sdist.negate(phi)) == zero
    q = sdist.pr_box(x)
    assert sdist.act(zero, q) == q
    assert sdist.act(sdist.add(phi, psi), q) == sdist.act(phi, sdist.act(psi, q))
    assert sdist.act(phi, sdist.deterministic_sdist(psi)) == sdist.deterministic_sdist(sdist.add(phi, psi))
    # the group permutes the PR boxes
    assert set(sdist.act(phi, b) for b in sdist.pr_boxes(x)) == set(sdist.pr_boxes(x))


def test_act_mismatch():
    x = chsh()
    phi = sdist.constant_map(scenario.build_cycle(3), 2)
    try:
        sdist.act(phi, sdist.pr_box(x))
        assert False
    except error.MismatchError:
        pass


def test_product_and_preceq():
    x = chsh()
    labelings = sdist.enumerate_deterministic(x, 2)
    p = sdist.mix([HALF, HALF], [sdist.deterministic_sdist(labelings[0]), sdist.deterministic_sdist(labelings[15])])
    q = sdist.deterministic_sdist(labelings[0])
    assert sdist.preceq(q, p)
    assert not sdist.preceq(p, q)
    assert sdist.preceq(q, sdist.uniform_sdist(x, 2))
    assert sdist.product(q, sdist.pr_box(x)) == sdist.act(labelings[0], sdist.pr_box(x))
    r = sdist.pr_box(x)
    assert sdist.preceq(sdist.product(q, r), sdist.product(p, r))


def test_restrict():
    x = chsh()
    sub = scenario.line_in(x, scenario.LineSpec(["s1", "s2"]))
    r = sdist.restrict(sdist.pr_box(x), sub)
    assert r.scenario is sub
    assert r["s2"] == distribution.average_power(2, 1)
    phi = sdist.enumerate_deterministic(x, 2)[7]
    assert sdist.is_deterministic(sdist.restrict(sdist.deterministic_sdist(phi), sub)) == sdist.restrict_labeling(phi, sub)
    try:
        sdist.restrict(sdist.pr_box(x), scenario.build_cycle(3))
        assert False
    except error.MismatchError:
        pass


def test_mixture_helpers():
    x = chsh()
    uniform = sdist.uniform_mixture(sdist.pr_boxes(x))
    assert uniform == sdist.uniform_sdist(x, 2)
    assert sdist.mixture_violations({sdist.constant_map(x, 2): Fraction(-1)}) != []


def test_all():
    test_deterministic()
    test_unlabeled_vertex()
    test_cap()
    test_marginal_mismatch()
    test_missing_and_extra()
    test_pr_boxes()
    test_theta()
    test_group()
    test_act_mismatch()
    test_product_and_preceq()
    test_restrict()
    test_mixture_helpers()


if __name__ == '__main__':
    test_all()
