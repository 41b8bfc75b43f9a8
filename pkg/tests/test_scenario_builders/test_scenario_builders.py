from sctx import error, scenario


def test_cycle():
    x = scenario.build_cycle(4)
    assert x.vertices() == ["v1", "v2", "v3", "v4"]
    assert x.edges() == ["s1", "s2", "s3", "s4"]
    assert x.generators() == ["s1", "s2", "s3", "s4"]
    assert x.faces("s1") == ("v2", "v1")
    assert x.faces("s4") == ("v1", "v4")
    assert x.vertices_of("s1") == ["v1", "v2"]
    assert x.vertices_of("s4") == ["v4", "v1"]
    assert scenario.validate_scenario(x) == []


def test_cycle_too_short():
    refused = False
    try:
        scenario.build_cycle(2)
    except error.ValidationError as e:
        refused = True
        assert e.violations[0].rule == "too short"
    assert refused


def test_line_and_point():
    line = scenario.build_line(3)
    assert line.vertices() == ["v1", "v2", "v3", "v4"]
    assert line.faces("s3") == ("v4", "v3")
    assert scenario.validate_scenario(line) == []
    p = scenario.point()
    assert p.vertices() == ["v"]
    assert p.generators() == ["v"]
    assert p.max_dim() == 0


def test_occurrences():
    x = scenario.build_cycle(4)
    occ = x.occurrences()
    assert occ["v1"] == [("s1", (0,)), ("s4", (1,))]
    assert x.canonical_parent("v1") == ("s1", (0,))
    assert occ["s2"] == [("s2", (0, 1))]


def test_cone():
    x = scenario.build_cycle(4)
    cx = scenario.cone(x)
    assert scenario.validate_scenario(cx) == []
    assert cx.generators() == ["(c,s1)", "(c,s2)", "(c,s3)", "(c,s4)"]
    assert cx.faces("(c,s1)") == ("s1", "(c,v2)", "(c,v1)")
    assert cx.faces("(c,v1)") == ("v1", "c")
    assert cx.vertices_of("(c,s1)") == ["c", "v1", "v2"]
    assert scenario.cone_point(cx) == "c"
    assert cx.base is x
    assert cx.cones["c"]["s3"] == "(c,s3)"


def test_cone_name_collision():
    x = scenario.point(vertex="c")
    try:
        scenario.cone(x)
        assert False
    except error.ValidationError as e:
        assert e.violations[0].rule == "name collision"


def test_suspension():
    x = scenario.build_cycle(4)
    sx = scenario.suspension(x)
    assert scenario.validate_scenario(sx) == []
    assert len(sx.generators()) == 8
    assert set(sx.cones) == {scenario.UP, scenario.DOWN}
    assert sx.vertices_of(sx.cones[scenario.DOWN]["s2"]) == [scenario.DOWN, "v2", "v3"]
    leg = scenario.suspension_leg(sx, scenario.UP)
    cx = scenario.cone(x)
    assert len(set(leg.values())) == len(cx)
    for s in cx.order:
        assert sx.faces(leg[s]) == tuple(leg[f] for f in cx.faces(s))


def test_dangling_face():
    x = scenario.Scenario("bad", [("v1", 0, ()), ("s1", 1, ("v9", "v1"))])
    try:
        scenario.validate_scenario(x)
        assert False
    except error.DanglingFaceError as e:
        assert e.simplex == "s1"
        assert e.face == "v9"


def test_face_count_and_dimension():
    x = scenario.Scenario("bad", [("v1", 0, ()), ("v2", 0, ()), ("s1", 1, ("v1",)),
                                  ("s2", 1, ("v1", "v2")), ("t", 2, ("s2", "v1", "s2"))])
    rules = {(v.subject, v.rule) for v in scenario.validate_scenario(x)}
    assert ("s1", "face count") in rules
    assert ("t", "face dimension") in rules


def test_simplicial_identity():
    simplices = [
        ("a", 0, ()), ("b", 0, ()), ("c", 0, ()),
        ("e01", 1, ("b", "a")), ("e12", 1, ("c", "b")), ("e02", 1, ("c", "a")),
    ]
    good = scenario.Scenario("triangle", simplices + [("t", 2, ("e12", "e02", "e01"))])
    assert scenario.validate_scenario(good) == []
    assert good.vertices_of("t") == ["a", "b", "c"]
    bad = scenario.Scenario("twisted", simplices + [("t", 2, ("e12", "e01", "e02"))])
    rules = [v.rule for v in scenario.validate_scenario(bad)]
    assert any(rule.startswith("d_") for rule in rules)


def test_duplicate_id():
    x = scenario.Scenario("dup", [("v", 0, ()), ("v", 0, ())])
    assert [v.rule for v in scenario.validate_scenario(x)] == ["duplicate id"]


def test_lines():
    x = scenario.build_cycle(4)
    sub = scenario.line_in(x, scenario.LineSpec(["s1", "s2", "s3"]))
    assert sorted(sub.vertices()) == ["v1", "v2", "v3", "v4"]
    assert sub.generators() == ["s1", "s2", "s3"]
    assert scenario.is_embedded(sub, x)

    try:
        scenario.line_in(x, scenario.LineSpec(["s1", "s3"]))
        assert False
    except error.ValidationError as e:
        assert e.violations[0].rule == "line gluing"

    spec = scenario.find_line(x, "v1", "v3")
    assert spec == scenario.LineSpec(["s1", "s2"], [0, 0])
    back = scenario.find_line(x, "v1", "v4")
    assert back == scenario.LineSpec(["s4"], [1])
    assert back.line_vertices(x) == ["v1", "v4"]
    assert back.oriented(0, (0, 1)) == (1, 0)


def test_connectivity():
    x = scenario.build_cycle(3)
    assert scenario.is_connected(x)
    two = scenario.disjoint_union(x, scenario.build_cycle(3))
    assert "0:v1" in two and "1:s3" in two
    assert not scenario.is_connected(two)
    assert scenario.find_line(two, "0:v1", "1:v1") is None
    try:
        scenario.require_connected(two)
        assert False
    except error.ConnectivityError:
        pass


def test_faces_closure():
    x = scenario.cone(scenario.build_cycle(4))
    sub = scenario.faces_closure(x, ["(c,s1)"])
    assert sorted(sub.vertices()) == ["c", "v1", "v2"]
    assert len(sub) == 7


def test_all():
    test_cycle()
    test_cycle_too_short()
    test_line_and_point()
    test_occurrences()
    test_cone()
    test_cone_name_collision()
    test_suspension()
    test_dangling_face()
    test_face_count_and_dimension()
    test_simplicial_identity()
    test_duplicate_id()
    test_lines()
    test_connectivity()
    test_faces_closure()


if __name__ == '__main__':
    test_all()
