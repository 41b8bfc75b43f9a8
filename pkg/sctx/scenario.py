"""
*** SCTX: simplicial distributions and contextuality ***
License GNU GPL version 3 (See LICENSE)

scenario.py: measurement spaces as Delta-sets

only nondegenerate simplices are stored. a simplex of dimension n >= 1 has
an ordered list of n+1 face ids, the i-th entry being d_i. generators are
computed: every simplex that is not a face of another simplex.

constructions: point, cycle, line, disjoint union, cone, suspension.

"""
import collections
import logging

from . import error

logger = logging.getLogger("sctx.scenario")


class Scenario:
    """finitely generated measurement space

    name: str
    order: list of simplex ids, in insertion order
    base: Scenario the space was coned or suspended from (or None)
    cones: dict cone point -> {base simplex id: coned simplex id}
    """

    def __init__(self, name, simplices=()):
        self.name = name
        self.order = []
        self._dim = {}
        self._faces = {}
        self._duplicates = []
        self.base = None
        self.cones = {}
        for (ident, dim, faces) in simplices:
            self.add(ident, dim, faces)
        self._generators = None
        self._occurrences = None

    def add(self, ident, dim, faces=()):
        if ident in self._dim:
            self._duplicates.append(ident)
            return
        self.order.append(ident)
        self._dim[ident] = dim
        self._faces[ident] = tuple(faces)
        self._generators = None
        self._occurrences = None

    def __contains__(self, ident):
        return ident in self._dim

    def __len__(self):
        return len(self.order)

    def __iter__(self):
        return iter(self.order)

    def __repr__(self):
        counts = collections.Counter(self._dim[s] for s in self.order)
        shape = ", ".join(f"{counts[d]}x{d}" for d in sorted(counts))
        return f"Scenario({self.name!r}, {shape})"

    def dim(self, ident):
        return self._dim[ident]

    def faces(self, ident):
        return self._faces[ident]

    def face(self, ident, i):
        return self._faces[ident][i]

    def simplices(self, dim=None):
        if dim is None:
            return list(self.order)
        return [s for s in self.order if self._dim[s] == dim]

    def vertices(self):
        return self.simplices(0)

    def edges(self):
        return self.simplices(1)

    def max_dim(self):
        return max((self._dim[s] for s in self.order), default=-1)

    def generators(self):
        if self._generators is None:
            is_face = set()
            for s in self.order:
                is_face.update(self._faces[s])
            self._generators = [s for s in self.order if s not in is_face]
        return self._generators

    def vertices_of(self, ident):
        """ordered vertices: vertex i of an n-simplex is the vertex left after
        deleting every position except i"""
        faces = self._faces[ident]
        if not faces:
            return [ident]
        n = len(faces) - 1
        return self.vertices_of(faces[n]) + [self.vertices_of(faces[0])[-1]]

    def occurrences(self):
        """simplex -> list of (generator, kept vertex positions)

        every way a simplex arises as an iterated face of a generator, in
        discovery order; the first entry is the canonical parent.
        """
        if self._occurrences is None:
            occ = {s: [] for s in self.order}
            seen = set()

            def walk(gen, ident, kept):
                if (gen, ident, kept) in seen:
                    return
                seen.add((gen, ident, kept))
                occ[ident].append((gen, kept))
                for i, face in enumerate(self._faces[ident]):
                    walk(gen, face, kept[:i] + kept[i + 1:])

            for gen in self.generators():
                walk(gen, gen, tuple(range(self._dim[gen] + 1)))
            self._occurrences = occ
        return self._occurrences

    def canonical_parent(self, ident):
        return self.occurrences()[ident][0]

    def same_as(self, other):
        """equal presentations (ids, dims and faces)"""
        return (
            set(self.order) == set(other.order)
            and all(
                self._dim[s] == other._dim[s] and self._faces[s] == other._faces[s]
                for s in self.order
            )
        )


class LineSpec:
    """edges sigma_1..sigma_n with orientation bits i_1..i_n

    the line runs d_{1-i_k}(sigma_k) -> d_{i_k}(sigma_k); bit 0 follows the
    edge's own vertex order.
    """

    def __init__(self, edges, bits=None):
        self.edges = list(edges)
        self.bits = list(bits) if bits is not None else [0] * len(self.edges)
        if len(self.bits) != len(self.edges):
            raise ValueError("one orientation bit per edge")

    def __len__(self):
        return len(self.edges)

    def __eq__(self, other):
        return isinstance(other, LineSpec) and (self.edges, self.bits) == (other.edges, other.bits)

    def __repr__(self):
        return f"LineSpec({self.edges!r}, {self.bits!r})"

    def start(self, x, k):
        return x.face(self.edges[k], 1 - self.bits[k])

    def end(self, x, k):
        return x.face(self.edges[k], self.bits[k])

    def line_vertices(self, x):
        if not self.edges:
            return []
        return [self.start(x, 0)] + [self.end(x, k) for k in range(len(self.edges))]

    def oriented(self, k, pair):
        """read an edge outcome pair in line direction"""
        a, b = pair
        return (b, a) if self.bits[k] else (a, b)


# --- validation


def validate_scenario(s):
    """list of Violation records, empty when the scenario is well formed"""
    violations = []
    for ident in s._duplicates:
        violations.append(error.Violation(ident, "duplicate id"))

    for ident in s.order:
        for face in s.faces(ident):
            if face not in s:
                raise error.DanglingFaceError(ident, face)

    for ident in s.order:
        dim = s.dim(ident)
        faces = s.faces(ident)
        if dim < 0:
            violations.append(error.Violation(ident, "negative dimension"))
            continue
        expected = dim + 1 if dim >= 1 else 0
        if len(faces) != expected:
            violations.append(error.Violation(
                ident, "face count", f"dim {dim} needs {expected} faces, got {len(faces)}"))
            continue
        for i, face in enumerate(faces):
            if s.dim(face) != dim - 1:
                violations.append(error.Violation(
                    ident, "face dimension", f"d_{i} = {face} has dim {s.dim(face)}"))
        if any(v.subject == ident for v in violations):
            continue
        if dim >= 2:
            for j in range(dim + 1):
                for i in range(j):
                    left = s.face(s.face(ident, j), i)
                    right = s.face(s.face(ident, i), j - 1)
                    if left != right:
                        violations.append(error.Violation(
                            ident, f"d_{i} d_{j} = d_{j - 1} d_{i}", f"{left} != {right}"))

    if not violations:
        reached = {ident for ident, occ in s.occurrences().items() if occ}
        for ident in s.order:
            if ident not in reached:
                violations.append(error.Violation(ident, "unreachable"))
    return violations


def validate_or_raise(s):
    error.raise_if(validate_scenario(s), what=f"scenario {s.name}")
    return s


# --- builders


def point(name="point", vertex="v"):
    return Scenario(name, [(vertex, 0, ())])


def build_cycle(n, name=None):
    if n < 3:
        raise error.ValidationError(
            [error.Violation(f"cycle-{n}", "too short", "a cycle needs n >= 3")], what="build_cycle")
    s = Scenario(name or f"cycle-{n}")
    for k in range(1, n + 1):
        s.add(f"v{k}", 0)
    for k in range(1, n + 1):
        s.add(f"s{k}", 1, (f"v{k % n + 1}", f"v{k}"))
    return s


def build_line(n, name=None):
    if n < 1:
        raise error.ValidationError(
            [error.Violation(f"line-{n}", "too short", "a line needs n >= 1")], what="build_line")
    s = Scenario(name or f"line-{n}")
    for k in range(1, n + 2):
        s.add(f"v{k}", 0)
    for k in range(1, n + 1):
        s.add(f"s{k}", 1, (f"v{k + 1}", f"v{k}"))
    return s


def disjoint_union(x, y, name=None):
    s = Scenario(name or f"{x.name}+{y.name}")
    for tag, part in (("0", x), ("1", y)):
        for ident in part.order:
            s.add(f"{tag}:{ident}", part.dim(ident), [f"{tag}:{f}" for f in part.faces(ident)])
    return s


def coned_id(cone_point, ident):
    return f"({cone_point},{ident})"


def _add_cone(s, x, cone_point):
    if cone_point in x:
        raise error.ValidationError(
            [error.Violation(cone_point, "name collision", "cone point already in scenario")],
            what="cone")
    s.add(cone_point, 0)
    mapping = {}
    for ident in x.order:
        new = coned_id(cone_point, ident)
        if new in x:
            raise error.ValidationError(
                [error.Violation(new, "name collision", "coned id already in scenario")],
                what="cone")
        faces = x.faces(ident)
        if not faces:
            coned_faces = (ident, cone_point)
        else:
            coned_faces = (ident,) + tuple(coned_id(cone_point, f) for f in faces)
        s.add(new, x.dim(ident) + 1, coned_faces)
        mapping[ident] = new
    return mapping


def cone(x, cone_point="c", name=None):
    """CX: the base, a cone point c and a simplex (c,sigma) per simplex of x

    d_0(c,sigma) = sigma, d_i(c,sigma) = (c,d_{i-1} sigma), d_1(c,v) = c.
    the cone point is vertex 0 of every coned simplex.
    """
    s = Scenario(name or f"cone({x.name})")
    for ident in x.order:
        s.add(ident, x.dim(ident), x.faces(ident))
    s.cones[cone_point] = _add_cone(s, x, cone_point)
    s.base = x
    return s


UP = "c+"
DOWN = "c-"


def suspension(x, name=None):
    """two cones on x glued along x; up is s_1 (c+), down is s_2 (c-)"""
    s = Scenario(name or f"susp({x.name})")
    for ident in x.order:
        s.add(ident, x.dim(ident), x.faces(ident))
    s.cones[UP] = _add_cone(s, x, UP)
    s.cones[DOWN] = _add_cone(s, x, DOWN)
    s.base = x
    return s


def cone_point(cx):
    if len(cx.cones) != 1:
        raise error.MismatchError(f"{cx.name} is not a cone")
    return next(iter(cx.cones))


def suspension_leg(sx, side, cone_point="c"):
    """the map CX -> SX for side c+ (s_1) or c- (s_2), as an id mapping"""
    x = sx.base
    leg = {ident: ident for ident in x.order}
    leg[cone_point] = side
    for ident, new in sx.cones[side].items():
        leg[coned_id(cone_point, ident)] = new
    return leg


def faces_closure(x, ids, name=None):
    """sub-scenario generated by the given simplices"""
    keep = set()
    stack = list(ids)
    while stack:
        ident = stack.pop()
        if ident in keep:
            continue
        if ident not in x:
            raise error.MismatchError(f"{ident} not in {x.name}")
        keep.add(ident)
        stack.extend(x.faces(ident))
    s = Scenario(name or f"{x.name}|sub")
    for ident in x.order:
        if ident in keep:
            s.add(ident, x.dim(ident), x.faces(ident))
    return s


def is_embedded(sub, host):
    return all(
        ident in host and host.dim(ident) == sub.dim(ident) and host.faces(ident) == sub.faces(ident)
        for ident in sub.order
    )


def commutes(x, y, mapping):
    """mapping is a bijection x -> y commuting with every d_i"""
    if len(mapping) != len(x) or len(set(mapping.values())) != len(y):
        return False
    for ident in x.order:
        target = mapping.get(ident)
        if target not in y or x.dim(ident) != y.dim(target):
            return False
        if tuple(mapping[f] for f in x.faces(ident)) != y.faces(target):
            return False
    return True


def line_in(x, spec, name=None):
    violations = []
    if len(set(spec.edges)) != len(spec.edges):
        violations.append(error.Violation("line", "edges not pairwise distinct"))
    for ident in spec.edges:
        if ident not in x or x.dim(ident) != 1:
            violations.append(error.Violation(ident, "not an edge"))
    if not violations:
        for k in range(len(spec) - 1):
            end = spec.end(x, k)
            start = spec.start(x, k + 1)
            if end != start:
                violations.append(error.Violation(
                    spec.edges[k], "line gluing", f"{end} != {start} ({spec.edges[k + 1]})"))
    error.raise_if(violations, what="line")
    return faces_closure(x, spec.edges, name=name or f"{x.name}|line")


def _vertex_graph(x):
    adjacent = {v: [] for v in x.vertices()}
    for e in x.edges():
        d0, d1 = x.faces(e)
        adjacent[d1].append((d0, e, 0))
        adjacent[d0].append((d1, e, 1))
    return adjacent


def find_line(x, u, v):
    """LineSpec from u to v through the edge graph (shortest), or None"""
    adjacent = _vertex_graph(x)
    previous = {u: None}
    queue = collections.deque([u])
    while queue:
        w = queue.popleft()
        if w == v:
            break
        for (nxt, edge, bit) in adjacent[w]:
            if nxt not in previous:
                previous[nxt] = (w, edge, bit)
                queue.append(nxt)
    if v not in previous:
        return None
    edges, bits = [], []
    w = v
    while previous[w] is not None:
        (w, edge, bit) = previous[w]
        edges.append(edge)
        bits.append(bit)
    return LineSpec(reversed(edges), reversed(bits))


def is_connected(x):
    vertices = x.vertices()
    if not vertices:
        raise error.ConnectivityError(f"{x.name}: empty scenario")
    adjacent = _vertex_graph(x)
    seen = {vertices[0]}
    stack = [vertices[0]]
    while stack:
        w = stack.pop()
        for (nxt, _, _) in adjacent[w]:
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    connected = len(seen) == len(vertices)
    logger.debug("%s connected: %s", x.name, connected)
    return connected


def require_connected(x):
    if not is_connected(x):
        raise error.ConnectivityError(f"{x.name} is not connected")
