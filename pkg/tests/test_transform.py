import pytest

from oneplane.core import FaceClass, OperationError
from oneplane.build import plane_graph
from oneplane.transform import RemovalStrategy, dual, planarization, skeleton
from oneplane.analyze import is_triangulation
from oneplane.generators import gen_HH, gen_M, gen_XH, gen_XM, gen_YH


def test_planarization_flags():
    assert planarization(gen_YH(1)).is_triangulation
    assert not planarization(gen_HH(1)).is_triangulation
    assert planarization(gen_XM(2)).is_triangulation
    p = planarization(gen_YH(1))
    # V=26, E=72 forces F=48 triangles
    assert len(p.faces) == 48


def test_skeleton_counts_xh1():
    sk = skeleton(gen_XH(1))
    assert sk.graph.size == 30               # 3n-6 with n=12
    assert len(sk.faces) == 20               # 2n-4
    assert len(sk.faces.of_class(FaceClass.BLUE)) == 8
    assert is_triangulation(sk.map)
    for face, members in zip(sk.faces, sk.face_members):
        if face.classification is FaceClass.RED:
            assert len(members) >= 2
        else:
            assert len(members) == 1


def test_skeleton_of_crossing_free_drawing_is_identity():
    g = plane_graph([[3, 1], [0, 2], [1, 3], [2, 0]])
    sk = skeleton(g)
    assert sk.graph == g
    assert all(f.classification is FaceClass.BLUE for f in sk.faces)
    assert sk.removed == ()


def test_dual_xh1():
    dm = dual(skeleton(gen_XH(1)))
    assert dm.n == 20
    assert len(dm.vertices_of_color(FaceClass.RED)) == 12
    assert len(dm.vertices_of_color(FaceClass.BLUE)) == 8
    assert dm.is_regular(3)
    assert len(dm.edges) == 30


def test_dual_yh1():
    dm = dual(skeleton(gen_YH(1)))
    assert dm.n == 36
    assert len(dm.vertices_of_color(FaceClass.RED)) == 12
    assert len(dm.vertices_of_color(FaceClass.BLUE)) == 24


@pytest.mark.parametrize("gen,k", [(gen_XH, 1), (gen_XH, 2), (gen_YH, 1), (gen_XM, 2)])
def test_every_red_vertex_has_a_red_neighbor(gen, k):
    dm = dual(skeleton(gen(k)))
    for v in dm.vertices_of_color(FaceClass.RED):
        assert any(dm.colors[w] is FaceClass.RED for w in dm.neighbor_sets[v])


@pytest.mark.parametrize("gen,k", [(gen_XH, 1), (gen_YH, 1), (gen_XM, 3)])
def test_strategy_independent_counts(gen, k):
    g = gen(k)
    a = skeleton(g, RemovalStrategy.LEX_MAX)
    b = skeleton(g, RemovalStrategy.LEX_MIN)
    for s in (a, b):
        assert s.graph.size == 3 * g.n - 6
    assert len(a.faces) == len(b.faces)
    assert (len(a.faces.of_class(FaceClass.RED))
            == len(b.faces.of_class(FaceClass.RED)))
    assert (len(a.faces.of_class(FaceClass.BLUE))
            == len(b.faces.of_class(FaceClass.BLUE)))
    # only provenance differs
    assert {frozenset(p) for p in a.removed} != {frozenset((x, x)) for x, _ in a.removed}


def test_explicit_strategy():
    g = gen_XH(1)
    removals = [min(a, b) for _, a, b in g.crossing_pairs]
    sk = skeleton(g, RemovalStrategy.EXPLICIT, explicit=removals)
    assert sk.graph.size == 30
    with pytest.raises(OperationError) as exc:
        skeleton(g, RemovalStrategy.EXPLICIT, explicit=[])
    assert exc.value.code == "BAD_EXPLICIT_SELECTION"
    with pytest.raises(OperationError):
        # both edges of one pair listed
        pair = g.crossing_pairs[0]
        skeleton(g, RemovalStrategy.EXPLICIT,
                 explicit=[pair[1], pair[2]] + removals[1:])


def test_dual_degrees_match_boundary_lengths():
    # double counting: dual degree equals primal face length
    for g in (gen_XH(1), gen_M(3), gen_XM(2)):
        sk = skeleton(g)
        dm = dual(sk)
        assert dm.degrees == tuple(f.size for f in sk.faces)
        assert sum(dm.degrees) == 2 * len(dm.edges)


def test_red_blue_partition_of_fake_true_faces():
    g = gen_YH(2)
    sk = skeleton(g)
    fs = g.face_set
    n_true = len(fs.of_class(FaceClass.TRUE))
    n_fake = len(fs.of_class(FaceClass.FAKE))
    blue = sk.faces.of_class(FaceClass.BLUE)
    red = sk.faces.of_class(FaceClass.RED)
    assert len(blue) == n_true
    assert 2 * len(red) <= n_fake
    covered = set()
    for members in sk.face_members:
        covered |= members
    assert covered == set(range(len(fs)))
