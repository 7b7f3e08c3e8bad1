"""Core data model: rotation-system planar maps with crossing annotations.

A drawing is stored combinatorially as its planarization: a connected
genus-0 combinatorial map whose vertices are either *true* (original) or
*fake* (degree-4 crossing vertices).  Every edge of the original graph is
either a single segment of the map or a pair of segments through one fake
vertex.  All structures are immutable after validation and safe to share.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property


class VertexKind(Enum):
    TRUE = "true"
    FAKE = "fake"


class FaceClass(Enum):
    TRUE = "true"   # face of a planarization touching no fake vertex
    FAKE = "fake"   # face of a planarization touching a fake vertex
    BLUE = "blue"   # skeleton face equal to a true face
    RED = "red"     # skeleton face merged from fake faces


# ---------------------------------------------------------------------------
# Errors
# ---------------------------------------------------------------------------

class DrawingError(Exception):
    """Base class for all errors raised by this package."""

    code = "ERROR"


@dataclass(frozen=True)
class Violation:
    code: str
    detail: str

    def __str__(self) -> str:
        return f"{self.code}: {self.detail}"


class ValidationError(DrawingError):
    """Raised by validate(); carries every violated invariant, not just one."""

    code = "VALIDATION_FAILED"

    def __init__(self, violations):
        self.violations = tuple(violations)
        super().__init__("; ".join(str(v) for v in self.violations))

    def codes(self):
        return {v.code for v in self.violations}


class OperationError(DrawingError):
    """An operation was applied outside its precondition."""

    def __init__(self, code: str, message: str):
        self.code = code
        super().__init__(f"{code}: {message}")


# ---------------------------------------------------------------------------
# Planar map
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PlanarMap:
    """A connected combinatorial map on the sphere.

    ``rotations[v]`` lists the darts leaving ``v`` in cyclic (clockwise)
    order; ``opposite`` is the fixed-point-free involution pairing the two
    darts of each segment.  Faces are the orbits of
    ``d -> rotation-successor of opposite[d]``.
    """

    kinds: tuple[VertexKind, ...]
    rotations: tuple[tuple[int, ...], ...]
    opposite: tuple[int, ...]

    @property
    def n_vertices(self) -> int:
        return len(self.kinds)

    @property
    def n_darts(self) -> int:
        return len(self.opposite)

    @property
    def n_segments(self) -> int:
        return len(self.opposite) // 2

    @cached_property
    def dart_vertex(self) -> tuple[int, ...]:
        owner = [-1] * self.n_darts
        for v, rot in enumerate(self.rotations):
            for d in rot:
                owner[d] = v
        return tuple(owner)

    @cached_property
    def _rot_next(self) -> tuple[int, ...]:
        nxt = [-1] * self.n_darts
        for rot in self.rotations:
            m = len(rot)
            for i, d in enumerate(rot):
                nxt[d] = rot[(i + 1) % m]
        return tuple(nxt)

    def rotation_successor(self, d: int) -> int:
        return self._rot_next[d]

    def face_next(self, d: int) -> int:
        """Next dart along the face walk containing ``d``."""
        return self._rot_next[self.opposite[d]]

    @cached_property
    def face_walks(self) -> tuple[tuple[int, ...], ...]:
        """Canonical face walks: each starts at its minimum dart, faces
        ordered by that dart."""
        seen = [False] * self.n_darts
        walks = []
        for d0 in range(self.n_darts):
            if seen[d0]:
                continue
            walk = []
            d = d0
            while not seen[d]:
                seen[d] = True
                walk.append(d)
                d = self.face_next(d)
            walks.append(tuple(walk))
        return tuple(walks)

    @cached_property
    def face_of_dart(self) -> tuple[int, ...]:
        owner = [-1] * self.n_darts
        for i, walk in enumerate(self.face_walks):
            for d in walk:
                owner[d] = i
        return tuple(owner)

    def degree(self, v: int) -> int:
        return len(self.rotations[v])

    def is_fake(self, v: int) -> bool:
        return self.kinds[v] is VertexKind.FAKE

    @cached_property
    def fake_vertices(self) -> tuple[int, ...]:
        return tuple(v for v, k in enumerate(self.kinds) if k is VertexKind.FAKE)

    @cached_property
    def true_vertices(self) -> tuple[int, ...]:
        return tuple(v for v, k in enumerate(self.kinds) if k is VertexKind.TRUE)

    def is_connected(self) -> bool:
        n = self.n_vertices
        if n == 0:
            return False
        seen = [False] * n
        stack = [0]
        seen[0] = True
        count = 1
        while stack:
            v = stack.pop()
            for d in self.rotations[v]:
                w = self.dart_vertex[self.opposite[d]]
                if not seen[w]:
                    seen[w] = True
                    count += 1
                    stack.append(w)
        return count == n

    def euler_characteristic(self) -> int:
        return self.n_vertices - self.n_segments + len(self.face_walks)


# ---------------------------------------------------------------------------
# Faces
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Face:
    index: int
    darts: tuple[int, ...]
    vertices: tuple[int, ...]          # vertex of each walk dart, in walk order
    classification: FaceClass

    @property
    def boundary(self) -> frozenset[int]:
        """The set of vertices visited by the boundary walk."""
        return frozenset(self.vertices)

    @property
    def size(self) -> int:
        return len(self.darts)

    def is_triangle(self) -> bool:
        return len(self.darts) == 3 and len(self.boundary) == 3

    def is_quadrangle(self) -> bool:
        return len(self.darts) == 4 and len(self.boundary) == 4


@dataclass(frozen=True)
class FaceSet:
    faces: tuple[Face, ...]
    face_of_dart: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.faces)

    def __iter__(self):
        return iter(self.faces)

    def __getitem__(self, i: int) -> Face:
        return self.faces[i]

    def of_class(self, cls: FaceClass) -> tuple[Face, ...]:
        return tuple(f for f in self.faces if f.classification is cls)

    def adjacent_faces(self, pmap: PlanarMap, i: int) -> tuple[int, ...]:
        """Distinct faces sharing at least one segment with face ``i``."""
        out = set()
        for d in self.faces[i].darts:
            j = self.face_of_dart[pmap.opposite[d]]
            if j != i:
                out.add(j)
        return tuple(sorted(out))


# ---------------------------------------------------------------------------
# One-plane graphs
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class EdgeRec:
    u: int
    v: int
    crossing: int | None = None     # fake vertex id, when the edge is crossed

    @property
    def ends(self) -> tuple[int, int]:
        return (self.u, self.v)


@dataclass(frozen=True)
class OnePlaneGraph:
    """A validated 1-plane drawing: planarization plus edge table."""

    map: PlanarMap
    edges: tuple[EdgeRec, ...]
    dart_edge: tuple[int, ...]

    # -- basic counts -------------------------------------------------------

    @property
    def n(self) -> int:
        """Number of true vertices (the order of the underlying graph)."""
        return len(self.map.true_vertices)

    @property
    def size(self) -> int:
        """Number of edges of the underlying graph."""
        return len(self.edges)

    @property
    def crossing_count(self) -> int:
        return len(self.map.fake_vertices)

    @cached_property
    def edge_darts(self) -> tuple[tuple[int, ...], ...]:
        buckets: list[list[int]] = [[] for _ in self.edges]
        for d, e in enumerate(self.dart_edge):
            buckets[e].append(d)
        return tuple(tuple(b) for b in buckets)

    @cached_property
    def crossing_pairs(self) -> tuple[tuple[int, int, int], ...]:
        """(fake vertex, edge a, edge b) per crossing, with a < b."""
        by_fake: dict[int, list[int]] = {}
        for e, rec in enumerate(self.edges):
            if rec.crossing is not None:
                by_fake.setdefault(rec.crossing, []).append(e)
        return tuple(
            (c, min(pair), max(pair)) for c, pair in sorted(by_fake.items())
        )

    def crossing_partner(self, e: int) -> int | None:
        c = self.edges[e].crossing
        if c is None:
            return None
        a, b = self.edges_at_crossing(c)
        return b if e == a else a

    def edges_at_crossing(self, fake: int) -> tuple[int, int]:
        for c, a, b in self.crossing_pairs:
            if c == fake:
                return (a, b)
        raise OperationError("UNKNOWN_VERTEX", f"no crossing at vertex {fake}")

    @cached_property
    def adjacency(self) -> dict[int, frozenset[int]]:
        adj: dict[int, set[int]] = {v: set() for v in self.map.true_vertices}
        for rec in self.edges:
            adj[rec.u].add(rec.v)
            adj[rec.v].add(rec.u)
        return {v: frozenset(s) for v, s in adj.items()}

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency.get(u, frozenset())

    # -- segments -----------------------------------------------------------

    def segment_half(self, d: int) -> str:
        """Which half of its edge the segment of dart ``d`` is: 'u', 'v' or
        'whole'."""
        rec = self.edges[self.dart_edge[d]]
        if rec.crossing is None:
            return "whole"
        ends = {self.map.dart_vertex[d], self.map.dart_vertex[self.map.opposite[d]]}
        return "u" if rec.u in ends else "v"

    # -- face view ----------------------------------------------------------

    @cached_property
    def face_set(self) -> FaceSet:
        return faces(self)


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------

def faces(g: OnePlaneGraph) -> FaceSet:
    """Face walks of the planarization, classified FAKE/TRUE.

    A face is FAKE iff its boundary walk visits at least one fake vertex.
    """
    pmap = g.map
    out = []
    for i, walk in enumerate(pmap.face_walks):
        verts = tuple(pmap.dart_vertex[d] for d in walk)
        cls = FaceClass.FAKE if any(pmap.is_fake(v) for v in verts) else FaceClass.TRUE
        out.append(Face(i, walk, verts, cls))
    return FaceSet(tuple(out), pmap.face_of_dart)


def crossing_count(g: OnePlaneGraph) -> int:
    """cr_x of the drawing: the number of fake vertices."""
    return g.crossing_count


def degree(g: OnePlaneGraph, v: int) -> int:
    """Degree of a true vertex in the underlying graph."""
    _require_true_vertex(g, v)
    return g.map.degree(v)


def c_of(g: OnePlaneGraph, v: int) -> int:
    """Number of crossing (crossed) edges incident with ``v``."""
    _require_true_vertex(g, v)
    count = 0
    seen = set()
    for d in g.map.rotations[v]:
        e = g.dart_edge[d]
        if e not in seen:
            seen.add(e)
            if g.edges[e].crossing is not None:
                count += 1
    return count


def _require_true_vertex(g: OnePlaneGraph, v: int) -> None:
    if not (0 <= v < g.map.n_vertices) or g.map.is_fake(v):
        raise OperationError("UNKNOWN_VERTEX", f"no true vertex {v}")


# ---------------------------------------------------------------------------
# Underlying abstract graph
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SimpleGraph:
    """Plain adjacency structure over an arbitrary (sorted) vertex id set."""

    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]

    @cached_property
    def _index(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        adj: list[set[int]] = [set() for _ in self.vertices]
        idx = self._index
        for u, v in self.edges:
            adj[idx[u]].add(v)
            adj[idx[v]].add(u)
        return tuple(frozenset(s) for s in adj)

    @property
    def order(self) -> int:
        return len(self.vertices)

    @property
    def size(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[self._index[v]]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighbors(u)

    def without(self, removed) -> "SimpleGraph":
        gone = set(removed)
        verts = tuple(v for v in self.vertices if v not in gone)
        edges = tuple(
            (u, v) for u, v in self.edges if u not in gone and v not in gone
        )
        return SimpleGraph(verts, edges)

    def is_connected(self) -> bool:
        if not self.vertices:
            return False
        seen = {self.vertices[0]}
        stack = [self.vertices[0]]
        while stack:
            v = stack.pop()
            for w in self.neighbors(v):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.order


def underlying(g: OnePlaneGraph) -> SimpleGraph:
    """The abstract simple graph of the drawing (true vertices only)."""
    edges = tuple(
        sorted((min(r.u, r.v), max(r.u, r.v)) for r in g.edges)
    )
    return SimpleGraph(tuple(g.map.true_vertices), edges)


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------

def validate(kinds, rotations, opposite, edges, dart_edge) -> OnePlaneGraph:
    """Check every type invariant of a candidate drawing.

    Returns the validated OnePlaneGraph, or raises ValidationError listing
    all violated invariants (not just the first) so fuzzing failures are
    fully diagnosable.
    """
    violations = check(kinds, rotations, opposite, edges, dart_edge)
    if violations:
        raise ValidationError(violations)
    return OnePlaneGraph(
        map=PlanarMap(tuple(kinds), tuple(tuple(r) for r in rotations), tuple(opposite)),
        edges=tuple(edges),
        dart_edge=tuple(dart_edge),
    )


def check(kinds, rotations, opposite, edges, dart_edge) -> list[Violation]:
    """Non-raising validation: the full list of violations (see validate)."""
    violations: list[Violation] = []
    bad = violations.append

    kinds = tuple(kinds)
    rotations = tuple(tuple(r) for r in rotations)
    opposite = tuple(opposite)
    edges = tuple(edges)
    dart_edge = tuple(dart_edge)

    n_darts = len(opposite)
    if len(kinds) != len(rotations):
        bad(Violation("BAD_INVOLUTION", "vertex kind/rotation tables differ in length"))
        return violations

    # Dart partition: every dart id appears once across all rotations.
    seen = [0] * n_darts
    structurally_ok = True
    for rot in rotations:
        for d in rot:
            if not (0 <= d < n_darts):
                bad(Violation("BAD_INVOLUTION", f"dart id {d} out of range"))
                structurally_ok = False
            else:
                seen[d] += 1
    if structurally_ok and any(c != 1 for c in seen):
        dups = [d for d, c in enumerate(seen) if c != 1]
        bad(Violation("BAD_INVOLUTION",
                      f"darts must appear in exactly one rotation: {dups[:8]}"))
        structurally_ok = False

    # Fixed-point-free involution.
    if structurally_ok:
        for d, o in enumerate(opposite):
            if not (0 <= o < n_darts) or opposite[o] != d or o == d:
                bad(Violation("BAD_INVOLUTION",
                              f"opposite is not a fixed-point-free involution at dart {d}"))
                structurally_ok = False
                break

    if not structurally_ok:
        return violations

    pmap = PlanarMap(kinds, rotations, opposite)

    if not pmap.is_connected():
        bad(Violation("NOT_CONNECTED", "the map is not connected"))
        return violations

    if pmap.euler_characteristic() != 2:
        bad(Violation("POSITIVE_GENUS",
                      f"V-E+F = {pmap.euler_characteristic()}, expected 2"))
        return violations

    # Edge table against segments.
    if len(dart_edge) != n_darts:
        bad(Violation("BAD_EDGE_TABLE", "dart-to-edge table has wrong length"))
        return violations
    buckets: list[list[int]] = [[] for _ in edges]
    for d, e in enumerate(dart_edge):
        if not (0 <= e < len(edges)):
            bad(Violation("BAD_EDGE_TABLE", f"dart {d} maps to unknown edge {e}"))
            return violations
        buckets[e].append(d)

    for e, rec in enumerate(edges):
        for w in (rec.u, rec.v):
            if not (0 <= w < len(kinds)) or kinds[w] is VertexKind.FAKE:
                bad(Violation("BAD_EDGE_TABLE",
                              f"edge {e} endpoint {w} is not a true vertex"))
                continue
        darts = buckets[e]
        segs = _segments_of(pmap, darts, opposite)
        if segs is None:
            bad(Violation("BAD_EDGE_TABLE",
                          f"edge {e} darts are not whole segments"))
            continue
        endsets = [frozenset((pmap.dart_vertex[d], pmap.dart_vertex[opposite[d]]))
                   for d in segs]
        if rec.crossing is None:
            if len(segs) != 1 or endsets[0] != frozenset((rec.u, rec.v)):
                bad(Violation("BAD_EDGE_TABLE",
                              f"uncrossed edge {e} must be one segment {rec.u}-{rec.v}"))
        else:
            c = rec.crossing
            if not (0 <= c < len(kinds)) or kinds[c] is not VertexKind.FAKE:
                bad(Violation("BAD_EDGE_TABLE",
                              f"edge {e} crossing {c} is not a fake vertex"))
                continue
            want = {frozenset((rec.u, c)), frozenset((rec.v, c))}
            if len(segs) != 2 or set(endsets) != want:
                bad(Violation("BAD_EDGE_TABLE",
                              f"crossed edge {e} must be two segments through {c}"))

    # Fake vertices: degree 4, two edges, alternating, no shared endpoint.
    pair_seen: dict[frozenset[int], int] = {}
    for c in pmap.fake_vertices:
        rot = rotations[c]
        if len(rot) != 4:
            bad(Violation("FAKE_DEGREE_NOT_4",
                          f"fake vertex {c} has degree {len(rot)}"))
            continue
        around = [dart_edge[d] for d in rot]
        if len(set(around)) != 2 or around[0] != around[2] or around[1] != around[3]:
            bad(Violation("BAD_CROSSING",
                          f"segments at fake vertex {c} do not alternate "
                          f"between two edges: {around}"))
            continue
        e1, e2 = sorted(set(around))
        r1, r2 = edges[e1], edges[e2]
        if r1.crossing != c or r2.crossing != c:
            bad(Violation("BAD_CROSSING",
                          f"edges {e1},{e2} meet at {c} but do not record it"))
        if {r1.u, r1.v} & {r2.u, r2.v}:
            bad(Violation("ADJACENT_EDGES_CROSS",
                          f"edges {e1} and {e2} share an endpoint and cross at {c}"))
        key = frozenset((e1, e2))
        if key in pair_seen:
            bad(Violation("EDGE_MULTICROSSED",
                          f"edges {e1} and {e2} cross more than once"))
        pair_seen[key] = c

    # Simplicity of the underlying graph.
    ends_seen: set[frozenset[int]] = set()
    for e, rec in enumerate(edges):
        if rec.u == rec.v:
            bad(Violation("NOT_SIMPLE", f"edge {e} is a loop at {rec.u}"))
            continue
        key = frozenset((rec.u, rec.v))
        if key in ends_seen:
            bad(Violation("NOT_SIMPLE", f"parallel edge {e} between {rec.u},{rec.v}"))
        ends_seen.add(key)

    # The four faces around any crossing are pairwise distinct.
    for c in pmap.fake_vertices:
        rot = rotations[c]
        if len(rot) != 4:
            continue
        incident = {pmap.face_of_dart[d] for d in rot}
        if len(incident) != 4:
            bad(Violation("CROSSING_FACES_NOT_DISTINCT",
                          f"fake vertex {c} touches faces {sorted(incident)}"))

    return violations


def _segments_of(pmap: PlanarMap, darts, opposite):
    """Group an edge's darts into whole segments; None if they don't pair up."""
    dset = set(darts)
    segs = []
    while dset:
        d = min(dset)
        o = opposite[d]
        if o not in dset:
            return None
        dset.discard(d)
        dset.discard(o)
        segs.append(d)
    return segs
