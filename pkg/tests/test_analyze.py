from fractions import Fraction

import pytest

from oneplane.core import SimpleGraph, OperationError, underlying
from oneplane.build import plane_graph
from oneplane.analyze import (
    CheckStatus,
    check_blue_neighbors,
    check_color_identities,
    check_crossing_cliques,
    check_crossing_share,
    check_face_adjacency,
    check_true_face_neighbors,
    connectivity_at_least,
    degree_profile,
    is_near_optimal,
    is_separating_cycle,
    is_triangulation,
    map_graph,
    regularity_checks,
    verify_bounds,
    vertex_connectivity,
)
from oneplane.transform import dual, skeleton
from oneplane.maximality import saturate
from oneplane.generators import (
    gen_HH,
    gen_M,
    gen_M_triangulated,
    gen_XH,
    gen_XM,
    gen_YH,
    gen_random_seed,
    load_fixture,
    fixture_path,
)
from .oracles import brute_force_connectivity




def test_connectivity_families():
    assert vertex_connectivity(underlying(gen_YH(1))) == 3
    assert vertex_connectivity(underlying(gen_XH(1))) == 6
    assert vertex_connectivity(underlying(gen_XM(2))) == 4


def test_connectivity_basics():
    k4 = SimpleGraph((0, 1, 2, 3), ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)))
    assert vertex_connectivity(k4) == 3          # complete: n-1
    path = SimpleGraph((0, 1, 2), ((0, 1), (1, 2)))
    assert vertex_connectivity(path) == 1
    disconnected = SimpleGraph((0, 1, 2), ((0, 1),))
    with pytest.raises(OperationError) as exc:
        vertex_connectivity(disconnected)
    assert exc.value.code == "DISCONNECTED"


def test_connectivity_matches_brute_force_on_small_instances():
    graphs = [underlying(gen_XM(1)), underlying(gen_XH(1)),
              underlying(gen_M(2)), underlying(gen_M(3))]
    for seed in range(12):
        graphs.append(underlying(gen_random_seed(5 + seed % 8, seed)))
    for sg in graphs:
        if sg.order <= 12:
            assert vertex_connectivity(sg) == brute_force_connectivity(sg)


def test_degree_profile():
    prof = degree_profile(underlying(gen_YH(1)))
    assert sum(prof.histogram.values()) == 20
    assert sum(k * v for k, v in prof.histogram.items()) == 2 * 60
    assert prof.min_degree == 3
    assert prof.lambda1 == 0 and prof.lambda2 == 0
    # degree-3 vertices are odd and small; they all count toward lambda3
    assert prof.lambda3 == 8


def test_is_triangulation_and_separating_cycle():
    sk = skeleton(gen_XM(1))
    assert is_triangulation(sk.map)
    assert not is_triangulation(gen_M(2).map)

    p = skeleton(gen_XH(1))
    sg = map_graph(p.map)
    deg5 = [v for v in sg.vertices if sg.degree(v) == 5]
    assert deg5
    s = sorted(sg.neighbors(deg5[0]))
    assert is_separating_cycle(p.map, s)
    assert not is_separating_cycle(p.map, [0])
    assert not is_separating_cycle(p.map, [0, 1])


def test_regularity_checks():
    rep = regularity_checks(skeleton(gen_XH(2)).map)
    assert rep.is_56_regular
    assert rep.kappa >= 5

    rep = regularity_checks(gen_M_triangulated(3).map)
    assert (rep.omega4, rep.omega5) == (4, 4)
    assert rep.hakimi_condition
    assert rep.kappa >= rep.min_degree == 4

    k4 = saturate(plane_graph([[3, 1], [0, 2], [1, 3], [2, 0]]))
    rep = regularity_checks(k4.map)
    assert not rep.is_56_regular               # all degrees 3

    with pytest.raises(OperationError) as exc:
        regularity_checks(gen_M(2).map)
    assert exc.value.code == "NOT_TRIANGULATION"


def test_near_optimal():
    assert is_near_optimal(gen_XH(1)).is_near_optimal
    rep = is_near_optimal(gen_HH(1))
    assert not rep.is_near_optimal
    assert any("holds 0 crossings" in v for v in rep.violations)
    rep = is_near_optimal(gen_YH(1))
    assert not rep.is_near_optimal
    assert any("two triangles" in v for v in rep.violations)


def test_face_adjacency_and_crossing_cliques():
    assert check_face_adjacency(gen_XH(1)).passed
    assert check_crossing_cliques(gen_XH(1)).passed
    assert check_crossing_cliques(gen_YH(2)).passed
    # not maximal -> not applicable, never a silent pass
    r = check_crossing_cliques(gen_HH(1))
    assert r.status is CheckStatus.NOT_APPLICABLE


def test_true_face_and_blue_neighbor_bounds():
    assert check_true_face_neighbors(gen_YH(1), 3).passed
    assert check_true_face_neighbors(gen_XH(1), 5, kappa=6).passed
    r = check_true_face_neighbors(gen_YH(1), 4)     # kappa=3 < 4
    assert r.status is CheckStatus.NOT_APPLICABLE
    r = check_true_face_neighbors(gen_XM(1), 4)     # n=6 but not maximal
    assert r.status is CheckStatus.NOT_APPLICABLE

    assert check_blue_neighbors(dual(skeleton(gen_YH(1))), 3).passed
    assert check_blue_neighbors(dual(skeleton(gen_XH(1))), 5).passed
    assert check_blue_neighbors(dual(skeleton(gen_YH(1))), 6).status is CheckStatus.NOT_APPLICABLE


def test_crossing_share():
    assert check_crossing_share(gen_XH(1)).passed
    r = check_crossing_share(gen_YH(1))       # kappa = 3
    assert r.status is CheckStatus.NOT_APPLICABLE


def test_color_identities_on_families():
    for g in (gen_XH(1), gen_YH(1), gen_XM(2), gen_XM(3)):
        assert check_color_identities(g) == []


def test_verify_bounds_tight_rows():
    rep = verify_bounds(gen_YH(1))
    assert rep.all_pass and rep.kappa == 3 and rep.immovable
    k3 = next(e for e in rep.entries if e.bound_id == "cr-k3")
    assert k3.applicable and k3.lhs == k3.rhs == 6

    rep = verify_bounds(gen_XM(3))
    assert rep.all_pass and rep.kappa == 4
    k4 = next(e for e in rep.entries if e.bound_id == "cr-k4")
    assert k4.applicable and k4.lhs == k4.rhs == 10

    t1 = load_fixture(fixture_path("t1"))
    rep = verify_bounds(t1)
    assert rep.all_pass and rep.kappa == 7
    k7 = next(e for e in rep.entries if e.bound_id == "cr-k7")
    assert k7.applicable and k7.lhs == k7.rhs == 18
    e7 = next(e for e in rep.entries if e.bound_id == "size-k7")
    assert e7.lhs == e7.rhs == Fraction(15, 4) * 22 + Fraction(3, 2) == 84

    with pytest.raises(OperationError) as exc:
        verify_bounds(gen_HH(1))
    assert exc.value.code == "NOT_MAXIMAL"


def test_bounds_report_lines_are_exact():
    rep = verify_bounds(gen_XH(1))
    lines = rep.lines()
    assert "cr-k56 6 >= 6 PASS" in lines
    assert "size-k56 36 >= 36 PASS" in lines


def test_degree_criteria_never_contradict_connectivity():
    # regularity_checks raises internally on contradiction; these must not
    for pm in (skeleton(gen_XH(2)).map, gen_M_triangulated(2).map,
               gen_M_triangulated(4).map, skeleton(gen_XM(3)).map):
        if is_triangulation(pm):
            regularity_checks(pm)


def test_connectivity_at_least_handles_tiny_graphs():
    k2 = SimpleGraph((0, 1), ((0, 1),))
    assert connectivity_at_least(k2, 1)
    assert not connectivity_at_least(k2, 2)
    single = SimpleGraph((7,), ())
    assert not connectivity_at_least(single, 1)
