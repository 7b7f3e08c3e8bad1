"""Connectivity, degree statistics, structural checks and exact
bound certification.

All inequalities are evaluated in exact rational arithmetic; nothing here
compares floats.  Checks that have preconditions report NOT_APPLICABLE
instead of silently passing.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from . import maximality
from .core import (
    DrawingError,
    FaceClass,
    OnePlaneGraph,
    OperationError,
    PlanarMap,
    SimpleGraph,
    c_of,
    underlying,
)
from .transform import DualMap, Skeleton, dual, planarization, skeleton


# ---------------------------------------------------------------------------
# Vertex connectivity (exact, Menger via unit-capacity max-flow)
# ---------------------------------------------------------------------------

def vertex_connectivity(sg: SimpleGraph) -> int:
    """Exact vertex connectivity; n-1 for complete graphs.

    Standard scheme: fix a minimum-degree vertex s, take the minimum local
    connectivity from s to every non-neighbor and between non-adjacent
    pairs of neighbors of s.  Any minimum cut either misses s (first batch
    finds it) or contains s (second batch does).
    """
    n = sg.order
    if n < 2:
        raise OperationError("BAD_PARAMETER", "connectivity needs at least 2 vertices")
    if not sg.is_connected():
        raise OperationError("DISCONNECTED", "graph is not connected")

    s = min(sg.vertices, key=lambda v: (sg.degree(v), v))
    best = n - 1
    nb = sg.neighbors(s)
    for t in sg.vertices:
        if t != s and t not in nb:
            best = min(best, _local_connectivity(sg, s, t, best))
    nbl = sorted(nb)
    for i, x in enumerate(nbl):
        for y in nbl[i + 1:]:
            if not sg.has_edge(x, y):
                best = min(best, _local_connectivity(sg, x, y, best))
    return best


def connectivity_at_least(sg: SimpleGraph, k: int) -> bool:
    if k <= 0:
        return sg.order > 0
    if sg.order < 2 or not sg.is_connected():
        return False
    return vertex_connectivity(sg) >= k


def _local_connectivity(sg: SimpleGraph, s: int, t: int, cap: int) -> int:
    """Max number of internally disjoint s-t paths (s,t non-adjacent),
    computed by augmenting unit flows in the vertex-split digraph.  Stops
    early once the running minimum ``cap`` is matched."""
    idx = {v: i for i, v in enumerate(sg.vertices)}
    n = sg.order
    # node 2i = v_in, 2i+1 = v_out
    graph: list[list[list[int]]] = [[] for _ in range(2 * n)]   # [to, cap, rev]

    def arc(a, b, c):
        graph[a].append([b, c, len(graph[b])])
        graph[b].append([a, 0, len(graph[a]) - 1])

    big = n
    for v in sg.vertices:
        i = idx[v]
        arc(2 * i, 2 * i + 1, 1 if v not in (s, t) else big)
    for u, v in sg.edges:
        arc(2 * idx[u] + 1, 2 * idx[v], big)
        arc(2 * idx[v] + 1, 2 * idx[u], big)

    src, dst = 2 * idx[s] + 1, 2 * idx[t]
    flow = 0
    while flow < cap:
        parent: list[tuple[int, int] | None] = [None] * (2 * n)
        parent[src] = (src, -1)
        q = deque([src])
        while q and parent[dst] is None:
            a = q.popleft()
            for j, (b, c, _r) in enumerate(graph[a]):
                if c > 0 and parent[b] is None:
                    parent[b] = (a, j)
                    q.append(b)
        if parent[dst] is None:
            break
        b = dst
        while b != src:
            a, j = parent[b]
            graph[a][j][1] -= 1
            rev = graph[a][j][2]
            graph[b][rev][1] += 1
            b = a
        flow += 1
    return flow


def map_graph(pmap: PlanarMap) -> SimpleGraph:
    """Adjacency structure of a plane map (parallel segments collapse)."""
    edges = set()
    for d in range(pmap.n_darts):
        o = pmap.opposite[d]
        if d < o:
            u, v = pmap.dart_vertex[d], pmap.dart_vertex[o]
            edges.add((min(u, v), max(u, v)))
    return SimpleGraph(tuple(range(pmap.n_vertices)), tuple(sorted(edges)))


# ---------------------------------------------------------------------------
# Degree statistics
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DegreeProfile:
    histogram: dict[int, int]      # omega(k)
    min_degree: int                # d_p
    lambda1: int                   # degree-2 vertices
    lambda2: int                   # degree-4 vertices
    lambda3: int                   # odd-degree w with deg<=9 or G-w 2-connected

    def omega(self, k: int) -> int:
        return self.histogram.get(k, 0)


def degree_profile(sg: SimpleGraph) -> DegreeProfile:
    hist: dict[int, int] = {}
    for v in sg.vertices:
        hist[sg.degree(v)] = hist.get(sg.degree(v), 0) + 1
    lam3 = 0
    for w in sg.vertices:
        d = sg.degree(w)
        if d % 2 == 1 and (d <= 9 or connectivity_at_least(sg.without([w]), 2)):
            lam3 += 1
    return DegreeProfile(
        histogram=dict(sorted(hist.items())),
        min_degree=min(hist) if hist else 0,
        lambda1=hist.get(2, 0),
        lambda2=hist.get(4, 0),
        lambda3=lam3,
    )


# ---------------------------------------------------------------------------
# Triangulation utilities
# ---------------------------------------------------------------------------

def is_triangulation(pmap: PlanarMap) -> bool:
    """True iff every face walk is a triangle on three distinct vertices."""
    for walk in pmap.face_walks:
        if len(walk) != 3:
            return False
        if len({pmap.dart_vertex[d] for d in walk}) != 3:
            return False
    return True


def is_separating_cycle(pmap: PlanarMap, subset) -> bool:
    """True iff the subset induces a cycle and disconnects the map."""
    s = set(subset)
    if len(s) < 3:
        return False
    sg = map_graph(pmap)
    inside = {v: [w for w in sg.neighbors(v) if w in s] for v in s}
    if any(len(ns) != 2 for ns in inside.values()):
        return False
    # the induced 2-regular graph must be one cycle
    start = next(iter(s))
    seen = {start}
    prev, cur = None, start
    while True:
        nxt = [w for w in inside[cur] if w != prev]
        if not nxt:
            break
        prev, cur = cur, nxt[0]
        if cur == start:
            break
        if cur in seen:
            return False
        seen.add(cur)
    if seen != s:
        return False
    rest = sg.without(s)
    return rest.order > 0 and not rest.is_connected()


@dataclass(frozen=True)
class RegularityReport:
    is_56_regular: bool            # implies 5-connected
    hakimi_condition: bool         # floor(7*omega(4)/3)+omega(5) < 14, d_p >= 4
    min_degree: int
    omega4: int
    omega5: int
    kappa: int
    implied_connectivity: int      # 0 when neither criterion fires


def regularity_checks(pmap: PlanarMap) -> RegularityReport:
    """Degree-based connectivity criteria for a plane triangulation.

    When a criterion fires, the implied lower bound is cross-checked
    against the exact connectivity; a contradiction would mean a bug and
    raises.
    """
    if not is_triangulation(pmap):
        raise OperationError("NOT_TRIANGULATION",
                             "regularity criteria need a triangulation")
    sg = map_graph(pmap)
    degs = [sg.degree(v) for v in sg.vertices]
    prof_hist: dict[int, int] = {}
    for d in degs:
        prof_hist[d] = prof_hist.get(d, 0) + 1
    dp = min(degs)
    w4, w5 = prof_hist.get(4, 0), prof_hist.get(5, 0)
    is56 = all(d in (5, 6) for d in degs)
    hakimi = dp >= 4 and (7 * w4) // 3 + w5 < 14
    implied = 0
    if is56:
        implied = max(implied, 5)
    if hakimi:
        implied = max(implied, dp)
    kappa = vertex_connectivity(sg)
    if kappa < implied:
        raise DrawingError(
            f"connectivity criterion contradicted: kappa={kappa} < {implied}")
    return RegularityReport(is56, hakimi, dp, w4, w5, kappa, implied)


# ---------------------------------------------------------------------------
# Near-optimal predicate
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class NearOptimalReport:
    is_near_optimal: bool
    violations: tuple[str, ...]


def is_near_optimal(g: OnePlaneGraph) -> NearOptimalReport:
    """Near-optimal conditions on the non-crossing-edge subgraph:
    (i) every face triangular or quadrangular, (ii) every quadrangular face
    holds exactly the crossing of its two diagonals, (iii) no edge shared
    by two distinct triangular faces."""
    from .build import DrawingBuilder

    bad: list[str] = []
    crossed = [e for e, r in enumerate(g.edges) if r.crossing is not None]

    # containment of each crossing: merge planarization faces across every
    # segment of a crossed edge; each merge class is one face of H
    src = g.face_set
    parent = list(range(len(src)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in crossed:
        for d in g.edge_darts[e]:
            a, b = src.face_of_dart[d], src.face_of_dart[g.map.opposite[d]]
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[rb] = ra

    b = DrawingBuilder.from_graph(g)
    for e in crossed:
        b.delete_edge(e)
    if not b.is_connected():
        return NearOptimalReport(False, ("non-crossing subgraph is disconnected",))
    res = b.finish()
    h = res.graph
    inv_dart = {new: old for old, new in res.dart_map.items()}
    inv_vertex = {new: old for old, new in res.vertex_map.items()}

    class_of_face: dict[int, int] = {}
    for i, walk in enumerate(h.map.face_walks):
        reps = {find(src.face_of_dart[inv_dart[d]]) for d in walk}
        assert len(reps) == 1
        class_of_face[i] = reps.pop()

    crossing_home: dict[int, list[int]] = {}
    for c in g.map.fake_vertices:
        reps = {find(src.face_of_dart[d]) for d in g.map.rotations[c]}
        assert len(reps) == 1
        crossing_home.setdefault(reps.pop(), []).append(c)

    hf = h.face_set
    for f in hf:
        orig = tuple(inv_vertex[v] for v in f.vertices)
        if f.is_triangle():
            if crossing_home.get(class_of_face[f.index]):
                bad.append(f"triangular face {orig} contains a crossing")
            continue
        if not f.is_quadrangle():
            bad.append(f"face {orig} is neither triangular nor quadrangular")
            continue
        inside = crossing_home.get(class_of_face[f.index], [])
        if len(inside) != 1:
            bad.append(f"quadrangular face {orig} holds {len(inside)} crossings")
            continue
        v0, v1, v2, v3 = orig
        want = {frozenset((v0, v2)), frozenset((v1, v3))}
        e1, e2 = g.edges_at_crossing(inside[0])
        got = {frozenset(g.edges[e1].ends), frozenset(g.edges[e2].ends)}
        if got != want:
            bad.append(f"crossing in face {orig} is not of its diagonals")

    for e in range(h.size):
        d = h.edge_darts[e][0]
        f1 = hf.face_of_dart[d]
        f2 = hf.face_of_dart[h.map.opposite[d]]
        if f1 != f2 and hf[f1].is_triangle() and hf[f2].is_triangle():
            u, v = h.edges[e].ends
            bad.append(
                f"edge {inv_vertex[u]}-{inv_vertex[v]} shared by two triangles")

    return NearOptimalReport(not bad, tuple(bad))


# ---------------------------------------------------------------------------
# Structural checks of maximal drawings
# ---------------------------------------------------------------------------

class CheckStatus(Enum):
    PASS = "pass"
    FAIL = "fail"
    NOT_APPLICABLE = "not-applicable"


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: CheckStatus
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.status is CheckStatus.PASS

    @property
    def failed(self) -> bool:
        return self.status is CheckStatus.FAIL


def check_face_adjacency(g: OnePlaneGraph) -> CheckResult:
    """Faces of a maximal drawing: boundary has >= 2 vertices and all true
    boundary vertices are pairwise adjacent."""
    name = "face-adjacency"
    if not maximality.is_maximal(g).is_maximal:
        return CheckResult(name, CheckStatus.NOT_APPLICABLE, "drawing not maximal")
    for f in g.face_set:
        if len(f.boundary) < 2:
            return CheckResult(name, CheckStatus.FAIL,
                               f"face {f.index} has boundary {set(f.boundary)}")
        tv = sorted(v for v in f.boundary if not g.map.is_fake(v))
        for i, u in enumerate(tv):
            for v in tv[i + 1:]:
                if not g.has_edge(u, v):
                    return CheckResult(
                        name, CheckStatus.FAIL,
                        f"true vertices {u},{v} share face {f.index} but are "
                        f"not adjacent")
    return CheckResult(name, CheckStatus.PASS)


def check_crossing_cliques(g: OnePlaneGraph) -> CheckResult:
    """Every crossing pair of a maximal drawing induces a K4."""
    name = "crossing-cliques"
    if not maximality.is_maximal(g).is_maximal:
        return CheckResult(name, CheckStatus.NOT_APPLICABLE, "drawing not maximal")
    for c, e1, e2 in g.crossing_pairs:
        quad = (*g.edges[e1].ends, *g.edges[e2].ends)
        for i in range(4):
            for j in range(i + 1, 4):
                if not g.has_edge(quad[i], quad[j]):
                    return CheckResult(
                        name, CheckStatus.FAIL,
                        f"crossing {c}: {quad[i]},{quad[j]} not adjacent")
    return CheckResult(name, CheckStatus.PASS)


def check_true_face_neighbors(g: OnePlaneGraph, k: int, *, kappa: int | None = None) -> CheckResult:
    """True faces of G-cross are adjacent to at most 5-k true faces,
    for k-connected maximal drawings (immovable when k=3)."""
    name = f"true-face-neighbors(k={k})"
    na = _g_k_applicability(g, k, kappa)
    if na:
        return CheckResult(name, CheckStatus.NOT_APPLICABLE, na)
    fs = g.face_set
    if not all(f.is_triangle() for f in fs):
        return CheckResult(name, CheckStatus.FAIL,
                           "planarization is not a triangulation")
    for f in fs:
        if f.classification is not FaceClass.TRUE:
            continue
        true_adj = [
            j for j in fs.adjacent_faces(g.map, f.index)
            if fs[j].classification is FaceClass.TRUE
        ]
        if len(true_adj) > 5 - k:
            return CheckResult(
                name, CheckStatus.FAIL,
                f"true face {f.index} adjacent to true faces {true_adj}")
    return CheckResult(name, CheckStatus.PASS)


def check_blue_neighbors(dm: DualMap, k: int) -> CheckResult:
    """Blue dual vertices have at most 5-k distinct blue neighbors."""
    name = f"blue-neighbors(k={k})"
    if not 3 <= k <= 5:
        return CheckResult(name, CheckStatus.NOT_APPLICABLE, f"k={k} out of range")
    for v in dm.vertices_of_color(FaceClass.BLUE):
        blue = [w for w in dm.neighbor_sets[v]
                if dm.colors[w] is FaceClass.BLUE]
        if len(blue) > 5 - k:
            return CheckResult(name, CheckStatus.FAIL,
                               f"blue vertex {v} has blue neighbors {sorted(blue)}")
    return CheckResult(name, CheckStatus.PASS)


def check_crossing_share(g: OnePlaneGraph, *, kappa: int | None = None) -> CheckResult:
    """ceil(deg/3) <= c(v) <= floor(deg/2) for 5-connected maximal drawings."""
    name = "crossing-share"
    if not maximality.is_maximal(g).is_maximal:
        return CheckResult(name, CheckStatus.NOT_APPLICABLE, "drawing not maximal")
    if kappa is None:
        kappa = vertex_connectivity(underlying(g))
    if kappa < 5:
        return CheckResult(name, CheckStatus.NOT_APPLICABLE, f"kappa={kappa} < 5")
    for v in g.map.true_vertices:
        d = g.map.degree(v)
        c = c_of(g, v)
        if not (-(-d // 3) <= c <= d // 2):
            return CheckResult(name, CheckStatus.FAIL,
                               f"vertex {v}: deg={d}, c={c}")
    return CheckResult(name, CheckStatus.PASS)


def _g_k_applicability(g: OnePlaneGraph, k: int, kappa: int | None) -> str:
    """Empty string when g qualifies for the G_k statements at level k."""
    if not 3 <= k <= 5:
        return f"k={k} out of range [3,5]"
    if g.n < 5 or (k >= 4 and g.n < 6):
        return f"n={g.n} below threshold"
    if not maximality.is_maximal(g).is_maximal:
        return "drawing not maximal"
    if kappa is None:
        kappa = vertex_connectivity(underlying(g))
    if kappa < k:
        return f"kappa={kappa} < {k}"
    if k == 3 and not maximality.is_immovable(g).is_immovable:
        return "k=3 requires an immovable drawing"
    return ""


# ---------------------------------------------------------------------------
# Red/blue counting identities
# ---------------------------------------------------------------------------

def check_color_identities(g: OnePlaneGraph, sk: Skeleton | None = None) -> list[str]:
    """Red/blue counting identities of a maximal drawing; the triangulation
    identities are included when the planarization is triangulated.
    Returns violation strings (empty = all hold)."""
    bad: list[str] = []
    if sk is None:
        sk = skeleton(g)
    dm = dual(sk)
    fs = g.face_set
    n_fake = len(fs.of_class(FaceClass.FAKE))
    n_true = len(fs.of_class(FaceClass.TRUE))
    red = dm.vertices_of_color(FaceClass.RED)
    blue = dm.vertices_of_color(FaceClass.BLUE)

    if 2 * len(red) > n_fake:
        bad.append(f"|V_rd|={len(red)} exceeds half of {n_fake} fake faces")
    if len(blue) != n_true:
        bad.append(f"|V_bl|={len(blue)} != |F_tr|={n_true}")
    for v in red:
        if not any(dm.colors[w] is FaceClass.RED for w in dm.neighbor_sets[v]):
            bad.append(f"red vertex {v} has no red neighbor")

    n = g.n
    cr = g.crossing_count
    if planarization(g).is_triangulation:
        if not is_triangulation(sk.map):
            bad.append("skeleton of a triangulated planarization is not a triangulation")
        if sk.graph.size != 3 * n - 6:
            bad.append(f"skeleton has {sk.graph.size} edges, expected {3 * n - 6}")
        if len(sk.faces) != 2 * n - 4:
            bad.append(f"skeleton has {len(sk.faces)} faces, expected {2 * n - 4}")
        if dm.n != 2 * n - 4 or not dm.is_regular(3):
            bad.append("dual is not 3-regular on 2n-4 vertices")
        if len(dm.edges) != 3 * n - 6:
            bad.append(f"dual has {len(dm.edges)} edges, expected {3 * n - 6}")
        if 2 * cr != len(red):
            bad.append(f"cr={cr} but |V_rd|={len(red)}")
        if g.size != 3 * n - 6 + cr:
            bad.append(f"|E|={g.size} != 3n-6+cr={3 * n - 6 + cr}")
    return bad


# ---------------------------------------------------------------------------
# Bound certification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BoundEntry:
    bound_id: str
    applicable: bool
    lhs: Fraction
    op: str             # ">=" or "<="
    rhs: Fraction
    passed: bool | None  # None when not applicable

    def line(self) -> str:
        status = "NOT_APPLICABLE" if not self.applicable else (
            "PASS" if self.passed else "FAIL")
        return f"{self.bound_id} {self.lhs} {self.op} {self.rhs} {status}"


@dataclass(frozen=True)
class BoundReport:
    n: int
    crossings: int
    size: int
    kappa: int
    triangulated: bool
    immovable: bool
    profile: DegreeProfile
    entries: tuple[BoundEntry, ...]

    @property
    def all_pass(self) -> bool:
        return all(e.passed for e in self.entries if e.applicable)

    def lines(self) -> list[str]:
        return [e.line() for e in self.entries]


def verify_bounds(g: OnePlaneGraph) -> BoundReport:
    """Evaluate every applicable crossing-number and size inequality for a
    maximal drawing.  A FAIL marks an implementation bug: every inequality
    is proven on its applicability domain."""
    if not maximality.is_maximal(g).is_maximal:
        raise OperationError("NOT_MAXIMAL", "bound certification needs a maximal drawing")

    n = Fraction(g.n)
    cr = Fraction(g.crossing_count)
    m = Fraction(g.size)
    kappa = vertex_connectivity(underlying(g))
    immovable = maximality.is_immovable(g).is_immovable
    tri = planarization(g).is_triangulation
    prof = degree_profile(underlying(g))

    in_g3 = kappa >= 3 and immovable and g.n >= 5
    entries = [
        _entry("cr-k3", in_g3, cr, ">=", (n - 2) / 3),
        _entry("cr-k4", kappa >= 4 and g.n >= 6, cr, ">=", (n - 2) / 2),
        _entry("cr-k56", kappa >= 5, cr, ">=", (3 * n - 6) / 5),
        _entry("cr-k7", kappa >= 7, cr, ">=", 3 * n / 4),
        _entry("size-k3", in_g3, m, ">=", Fraction(10, 3) * (n - 2)),
        _entry("size-k4", kappa >= 4 and g.n >= 6, m, ">=", Fraction(7, 2) * (n - 2)),
        _entry("size-k56", kappa >= 5, m, ">=", Fraction(18, 5) * (n - 2)),
        _entry("size-k7", kappa >= 7, m, ">=", Fraction(15, 4) * (n - 2) + Fraction(3, 2)),
        _entry("size-min", g.n >= 5, m, ">=", Fraction(-(-7 * g.n // 3) - 3)),
        _entry("cr-max", g.n >= 3, cr, "<=", n - 2),
        _entry("cr-max-slack", g.n >= 3, cr, "<=",
               n - 2 - Fraction(2 * prof.lambda1 + 2 * prof.lambda2 + prof.lambda3, 6)),
    ]
    return BoundReport(
        n=g.n, crossings=g.crossing_count, size=g.size, kappa=kappa,
        triangulated=tri, immovable=immovable, profile=prof,
        entries=tuple(entries),
    )


def _entry(bound_id: str, applicable: bool, lhs: Fraction, op: str,
           rhs: Fraction) -> BoundEntry:
    ok = None
    if applicable:
        ok = lhs >= rhs if op == ">=" else lhs <= rhs
    return BoundEntry(bound_id, applicable, lhs, op, rhs, ok)


# ---------------------------------------------------------------------------
# Aggregate property suite (shared by the fuzzer and the acceptance tests)
# ---------------------------------------------------------------------------

def property_suite(g: OnePlaneGraph) -> list[str]:
    """Every required invariant of a saturated drawing; returns the
    list of violations (empty means the instance is clean)."""
    bad: list[str] = []
    if not maximality.is_maximal(g).is_maximal:
        bad.append("saturated drawing is not maximal")
        return bad

    n = g.n
    cr = g.crossing_count
    ug = underlying(g)
    kappa = vertex_connectivity(ug)
    tri = planarization(g).is_triangulation

    if n >= 5 and g.size < -(-7 * n // 3) - 3:
        bad.append(f"TC bound violated: |E|={g.size} < ceil(7n/3)-3 for n={n}")

    if kappa >= 4 and not tri:
        bad.append(f"kappa={kappa} >= 4 but planarization is not a triangulation")

    immovable = maximality.is_immovable(g).is_immovable
    if kappa == 3 and immovable and not tri:
        bad.append("kappa=3 immovable drawing without triangulated planarization")

    if 3 <= kappa:
        k = min(kappa, 5)
        r9 = check_true_face_neighbors(g, k, kappa=kappa)
        if r9.failed:
            bad.append(f"{r9.name}: {r9.detail}")
        if r9.passed:
            r10 = check_blue_neighbors(dual(skeleton(g)), k)
            if r10.failed:
                bad.append(f"{r10.name}: {r10.detail}")

    for res in (check_face_adjacency(g), check_crossing_cliques(g),
                check_crossing_share(g, kappa=kappa)):
        if res.failed:
            bad.append(f"{res.name}: {res.detail}")

    if tri:
        bad.extend(check_color_identities(g))

    if n >= 3:
        if cr > n - 2:
            bad.append(f"cr={cr} exceeds n-2")
        # The degree-slack bound limits the minimum crossing number of a
        # maximal graph; it constrains this drawing's own count only when
        # the two coincide, i.e. when the planarization is a triangulation.
        # (Maximal drawings of non-maximal graphs can exceed it otherwise.)
        if tri:
            prof = degree_profile(ug)
            slack = Fraction(2 * prof.lambda1 + 2 * prof.lambda2 + prof.lambda3, 6)
            if Fraction(cr) > n - 2 - slack:
                bad.append(f"cr={cr} exceeds n-2-(2l1+2l2+l3)/6 = {n - 2 - slack}")
    return bad
