import pytest

from morsematch.verify import (default_suite, verify_cone_contiguity,
                               verify_conjecture_evidence,
                               verify_euler_obstruction_n4,
                               verify_gm_structure, verify_inclusion_full,
                               verify_layer_counts, verify_les_example,
                               verify_pair_splitting, verify_reference_tables,
                               verify_restriction_fibers, verify_spanning_tree,
                               verify_top_facet_bijection, N4_F_VECTOR)


def test_top_facet_bijection():
    r = verify_top_facet_bijection(2)
    assert r.passed and r.details["count"] == 9
    r = verify_top_facet_bijection(3)
    assert r.passed and r.details["count"] == 256


def test_top_facet_bijection_rejects_n1():
    assert verify_top_facet_bijection(1).status == "fail"


def test_layer_counts():
    assert verify_layer_counts(2).passed
    r = verify_layer_counts(3)
    assert r.passed and r.details == {"count": 256, "profile": [3, 3, 1]}


def test_spanning_tree():
    r = verify_spanning_tree(3)
    assert r.passed
    assert r.details == {"count": 64, "distinct_trees": 16}


def test_spanning_tree_specific_matching():
    # the star matching at vertex 0 of the K4 graph leaves critical edges
    # whose facet-graph edges all meet at the facet opposite vertex 0
    from morsematch.complexes import build_simplex, skeleton
    from morsematch.hasse import build_hasse, critical_faces
    from morsematch.verify import _facet_graph_edge
    sk = skeleton(build_simplex(3), 1)
    H = build_hasse(sk)
    pairs = [((1,), (0, 1)), ((2,), (0, 2)), ((3,), (0, 3))]
    mask = 0
    for lo, up in pairs:
        for e in range(H.edge_count):
            if H.edge_faces(e) == (lo, up):
                mask |= 1 << e
    crit = critical_faces(H, mask)
    assert crit.by_dim[0] == [(0,)]
    edges = [_facet_graph_edge(u, 3) for u in crit.by_dim[1]]
    assert edges == [(0, 3), (0, 2), (0, 1)]  # a star centered at F_0
    assert len({v for e in edges for v in e}) == 4


def test_facet_graph_is_complete():
    # the codimension-2 faces of the n-simplex biject with the vertex pairs
    # of the facet graph, labeling the edges of a complete graph
    from itertools import combinations
    from morsematch.complexes import build_simplex
    from morsematch.verify import _facet_graph_edge
    for n in (3, 4):
        K = build_simplex(n)
        edges = [_facet_graph_edge(u, n) for u in K.faces_by_dim[n - 2]]
        assert sorted(edges) == list(combinations(range(n + 1), 2))


def test_restriction_fibers_n3():
    r = verify_restriction_fibers(3)
    assert r.passed
    assert r.details == {"count": 256, "skeleton_count": 64, "fiber_size": 4}


def test_restriction_fiber_of_star_matching():
    # the fiber over the star matching has one extension per root facet
    from morsematch.complexes import build_simplex, skeleton
    from morsematch.hasse import build_hasse
    from morsematch.layers import enumerate_optimal
    from morsematch.morse import induced_inclusion
    d3 = build_simplex(3)
    sk = skeleton(d3, 1)
    HK = build_hasse(d3)
    Hs = build_hasse(sk)
    star = 0
    for lo, up in [((1,), (0, 1)), ((2,), (0, 2)), ((3,), (0, 3))]:
        for e in range(Hs.edge_count):
            if Hs.edge_faces(e) == (lo, up):
                star |= 1 << e
    sk_to_k = induced_inclusion(sk, d3)
    k_to_sk = {ke: se for se, ke in enumerate(sk_to_k)}
    fiber = []
    def collect(mask, card):
        rho = 0
        for e in HK.edges_from_mask(mask):
            se = k_to_sk.get(e)
            if se is not None and HK.layer_of[e] == 0:
                rho |= 1 << se
        if rho == star:
            fiber.append(mask)
    enumerate_optimal(HK, visitor=collect)
    assert len(fiber) == 4


def test_cone_contiguity():
    for spec in ("simplex:1", "boundary:2", "simplex:2"):
        r = verify_cone_contiguity(spec)
        assert r.passed, r.details
    # face counts: two for the edge, the full matching complex otherwise
    assert verify_cone_contiguity("simplex:1").details["faces_checked"] == 2


def test_pair_splitting():
    r = verify_pair_splitting([("simplex:2", "simplex:1"),
                               ("simplex:3", "simplex:2")])
    assert r.passed, r.details


def test_pair_splitting_degenerate_base():
    # the base complex of the edge is a point, whose matching complex is
    # void; the splitting identity still holds with the void conventions
    r = verify_pair_splitting([("simplex:1", "simplex:0")])
    assert r.passed, r.details


def test_pair_splitting_rejects_non_cone():
    with pytest.raises(ValueError):
        verify_pair_splitting([("simplex:3", "simplex:1")])


def test_les_example():
    r = verify_les_example()
    assert r.passed
    assert r.details["sequence"] == [24, 99, 96, 21]
    assert 24 - 99 + 96 - 21 == 0


def test_inclusion_full():
    for k_spec, l_spec in [("boundary:3", "simplex:3"),
                           ("simplex:2", "simplex:3"),
                           ("simplex:2", "simplex:2")]:
        r = verify_inclusion_full(k_spec, l_spec)
        assert r.passed, (k_spec, l_spec, r.details)


def test_gm_structure():
    r2 = verify_gm_structure(2)
    assert r2.passed and r2.details["link_f_vector"] == [4, 3]
    r3 = verify_gm_structure(3)
    assert r3.passed
    assert r3.details["link_f_vector"] == [21, 162, 570, 924, 612, 116]


def test_gm_structure_out_of_range():
    assert verify_gm_structure(4).status == "fail"


def test_reference_tables():
    r = verify_reference_tables()
    assert r.passed
    assert r.details["optimal_counts"] == {1: 2, 2: 9, 3: 256}


def test_conjecture_evidence():
    for variant in ("MP", "GM"):
        for n in (2, 3):
            r = verify_conjecture_evidence(variant, n)
            assert r.passed
            assert "evidence" in r.details["label"]


def test_euler_obstruction_requires_data_or_flag():
    r = verify_euler_obstruction_n4(None, allow_long=False)
    assert r.status == "skipped-budget"
    r = verify_euler_obstruction_n4(list(N4_F_VECTOR), allow_long=False)
    assert r.passed
    assert r.details["euler_characteristic"] == 212457
    assert r.details["reduced_euler_characteristic"] == 212456


def test_budget_skip():
    r = verify_top_facet_bijection(3, budget=10)
    assert r.status == "skipped-budget"


def test_default_suite_all_pass():
    reports = default_suite(max_n=2)
    assert reports
    assert all(r.status == "pass" for r in reports), \
        [(r.name, r.status, r.details) for r in reports if not r.passed]


def test_default_suite_unknown_name():
    with pytest.raises(ValueError):
        default_suite(only="no-such-check")
