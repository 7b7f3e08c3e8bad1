"""Derived objects of a drawing: the plain planarization, the skeleton
obtained by removing one edge from each crossing pair, and the colored dual
of the skeleton."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property

from .build import DrawingBuilder
from .core import (
    Face,
    FaceClass,
    FaceSet,
    OnePlaneGraph,
    OperationError,
    PlanarMap,
)


@dataclass(frozen=True)
class Planarization:
    """The plane graph G-cross: the drawing's own map, with a triangulation
    flag (every face a triangle on three distinct vertices)."""

    map: PlanarMap
    faces: FaceSet
    is_triangulation: bool


def planarization(g: OnePlaneGraph) -> Planarization:
    fs = g.face_set
    flag = all(f.is_triangle() for f in fs)
    return Planarization(map=g.map, faces=fs, is_triangulation=flag)


class RemovalStrategy(Enum):
    LEX_MAX = "lex-max"   # drop the larger edge id of each crossing pair
    LEX_MIN = "lex-min"
    EXPLICIT = "explicit"


@dataclass(frozen=True)
class Skeleton:
    """A plane subdrawing keeping one edge per crossing pair.

    ``vertex_ids``/``edge_ids`` map skeleton ids back to the source drawing;
    ``removed`` records (removed edge, kept partner) per crossing; red faces
    carry the set of source fake-face ids they merge."""

    graph: OnePlaneGraph             # crossing-free
    vertex_ids: tuple[int, ...]
    edge_ids: tuple[int, ...]
    removed: tuple[tuple[int, int], ...]
    faces: FaceSet                   # RED/BLUE classified
    face_members: tuple[frozenset[int], ...]   # source planarization face ids

    @property
    def map(self) -> PlanarMap:
        return self.graph.map


def skeleton(g: OnePlaneGraph, strategy: RemovalStrategy = RemovalStrategy.LEX_MAX,
             explicit=None) -> Skeleton:
    """Remove one edge from each crossing pair of the drawing.

    The result is a plane drawing on the true vertices; its faces are BLUE
    when they coincide with a true face of the planarization and RED when
    they merge at least two adjacent fake faces.
    """
    removed_edges = _select_removals(g, strategy, explicit)

    # Merge planarization faces across every removed segment.
    src_faces = g.face_set
    parent = list(range(len(src_faces)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[ry] = rx

    for e in removed_edges:
        for d in g.edge_darts[e]:
            union(src_faces.face_of_dart[d], src_faces.face_of_dart[g.map.opposite[d]])

    b = DrawingBuilder.from_graph(g)
    for e in removed_edges:
        b.delete_edge(e)
    res = b.finish()
    sk = res.graph

    inv_dart = {new: old for old, new in res.dart_map.items()}
    members: list[set[int]] = [set() for _ in sk.map.face_walks]
    for new_face, walk in enumerate(sk.map.face_walks):
        for d in walk:
            members[new_face].add(find(src_faces.face_of_dart[inv_dart[d]]))
    # every merge class is hit by a surviving dart, so classes and skeleton
    # faces correspond one to one
    full_members = []
    class_faces: dict[int, set[int]] = {}
    for i in range(len(src_faces)):
        class_faces.setdefault(find(i), set()).add(i)
    classified = []
    for new_face, reps in enumerate(members):
        assert len(reps) == 1, "skeleton face maps to several merge classes"
        ids = frozenset(class_faces[next(iter(reps))])
        full_members.append(ids)
        if len(ids) == 1 and src_faces[next(iter(ids))].classification is FaceClass.TRUE:
            classified.append(FaceClass.BLUE)
        else:
            assert len(ids) >= 2, "red face must merge at least two fake faces"
            assert all(src_faces[i].classification is FaceClass.FAKE for i in ids)
            classified.append(FaceClass.RED)

    base = sk.face_set
    colored = FaceSet(
        tuple(
            Face(f.index, f.darts, f.vertices, classified[f.index])
            for f in base
        ),
        base.face_of_dart,
    )

    inv_vertex = {new: old for old, new in res.vertex_map.items()}
    inv_edge = {new: old for old, new in res.edge_map.items()}
    removed_pairs = tuple(sorted(
        (e, _partner(g, e)) for e in removed_edges
    ))
    return Skeleton(
        graph=sk,
        vertex_ids=tuple(inv_vertex[v] for v in range(sk.map.n_vertices)),
        edge_ids=tuple(inv_edge[e] for e in range(sk.size)),
        removed=removed_pairs,
        faces=colored,
        face_members=tuple(full_members),
    )


def _partner(g: OnePlaneGraph, e: int) -> int:
    p = g.crossing_partner(e)
    assert p is not None
    return p


def _select_removals(g: OnePlaneGraph, strategy: RemovalStrategy, explicit):
    pairs = [(a, b) for _, a, b in g.crossing_pairs]
    if strategy is RemovalStrategy.LEX_MAX:
        return [max(p) for p in pairs]
    if strategy is RemovalStrategy.LEX_MIN:
        return [min(p) for p in pairs]
    if strategy is not RemovalStrategy.EXPLICIT:
        raise OperationError("BAD_PARAMETER", f"unknown strategy {strategy}")
    chosen = set(explicit or ())
    out = []
    for a, b in pairs:
        hit = chosen & {a, b}
        if len(hit) != 1:
            raise OperationError(
                "BAD_EXPLICIT_SELECTION",
                f"crossing pair ({a},{b}) needs exactly one removed edge")
        out.append(hit.pop())
    if chosen - {e for e in out}:
        raise OperationError(
            "BAD_EXPLICIT_SELECTION",
            f"edges {sorted(chosen - set(out))} are not part of any crossing pair")
    return out


# ---------------------------------------------------------------------------
# Dual
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DualMap:
    """Dual of a skeleton: one vertex per face (colored), one edge per
    skeleton edge, multi-adjacency preserved."""

    colors: tuple[FaceClass, ...]
    edges: tuple[tuple[int, int], ...]

    @property
    def n(self) -> int:
        return len(self.colors)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        deg = [0] * self.n
        for a, b in self.edges:
            deg[a] += 1
            deg[b] += 1
        return tuple(deg)

    @cached_property
    def neighbor_sets(self) -> tuple[frozenset[int], ...]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for a, b in self.edges:
            if a != b:
                adj[a].add(b)
                adj[b].add(a)
        return tuple(frozenset(s) for s in adj)

    def vertices_of_color(self, color: FaceClass) -> tuple[int, ...]:
        return tuple(i for i, c in enumerate(self.colors) if c is color)

    def is_regular(self, k: int) -> bool:
        return all(d == k for d in self.degrees)


def dual(s: Skeleton) -> DualMap:
    """The colored dual of a skeleton; dual degrees equal face boundary
    lengths by construction (one dual edge per primal segment)."""
    pmap = s.map
    fod = pmap.face_of_dart
    edges = []
    for d in range(pmap.n_darts):
        o = pmap.opposite[d]
        if d < o:
            edges.append((fod[d], fod[o]))
    colors = tuple(f.classification for f in s.faces)
    dm = DualMap(colors=colors, edges=tuple(sorted(edges)))
    assert dm.degrees == tuple(f.size for f in s.faces)
    return dm
