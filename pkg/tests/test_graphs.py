import pytest

from hyperk import (
    INFINITY,
    BoundaryPoint,
    GraphAutomorphism,
    LinkCheckResult,
    Q,
    automorphisms,
    build_graph,
    induced_permutation,
    isometry_matching,
    isometry_realizing,
    link_preserving_check,
    make_geodesic,
    make_horocycle,
)
from hyperk.errors import InvalidInputError

F = BoundaryPoint.finite


def designed_horocycles():
    return [
        make_horocycle(F(0), Q(1, 2)),
        make_horocycle(F(1), Q(1, 2)),
        make_horocycle(F(2), Q(1, 2)),
        make_horocycle(INFINITY, 2),
    ]


class TestBuildGraph:
    def test_designed_edges(self):
        g = build_graph(designed_horocycles())
        assert set(g.edges()) == {(0, 2), (0, 3), (1, 3), (2, 3)}

    def test_mixed_kinds_rejected_by_default(self):
        curves = [make_geodesic(F(0), F(1)), make_horocycle(F(5), 1)]
        with pytest.raises(InvalidInputError):
            build_graph(curves)
        g = build_graph(curves, allow_mixed=True)
        assert len(g.curves) == 2

    def test_path_graph_geodesics(self):
        gs = [
            make_geodesic(F(0), F(1)),
            make_geodesic(F(2), F(3)),
            make_geodesic(F(4), F(5)),
        ]
        g = build_graph(gs)
        assert set(g.edges()) == {(0, 1), (0, 2), (1, 2)}


class TestAutomorphisms:
    def test_designed_graph_has_two(self):
        g = build_graph(designed_horocycles())
        autos = automorphisms(g)
        assert sorted(a.perm for a in autos) == [(0, 1, 2, 3), (2, 1, 0, 3)]

    def test_compose_and_inverse(self):
        a = GraphAutomorphism((2, 1, 0, 3))
        assert a.compose(a).perm == (0, 1, 2, 3)
        assert a.inverse().perm == (2, 1, 0, 3)


class TestRealization:
    def test_swap_realized(self):
        g = build_graph(designed_horocycles())
        iso = isometry_realizing(g, GraphAutomorphism((2, 1, 0, 3)))
        assert iso is not None
        assert iso.apply_boundary(F(0)) == F(2)
        assert iso.apply_boundary(F(2)) == F(0)
        assert iso.apply_boundary(INFINITY) == INFINITY

    def test_induced_permutation_roundtrip(self):
        g = build_graph(designed_horocycles())
        iso = isometry_realizing(g, GraphAutomorphism((2, 1, 0, 3)))
        perm = induced_permutation(g, iso)
        assert perm.perm == (2, 1, 0, 3)

    def test_relabeled_geodesics_admit_no_isometry(self):
        gs1 = [
            make_geodesic(F(-1), F(1)),
            make_geodesic(F(-3), F(-2)),
            make_geodesic(F(2), F(3)),
        ]
        gs2 = [
            make_geodesic(F(-2), F(1)),
            make_geodesic(F(-6), F(-4)),
            make_geodesic(F(2), F(3)),
        ]
        assert isometry_matching(gs1, gs2) is None


class TestLinkChecks:
    def test_monotone_map_preserves_links(self):
        pts = [F(-2), F(-1), F(0), F(1), F(2)]
        imgs = [F(v.value ** 3) for v in pts]
        res = link_preserving_check(pts, imgs)
        assert res.preserved

    def test_swap_breaks_links_with_witness(self):
        pts = [F(0), F(1), F(2), F(3)]
        imgs = [F(1), F(0), F(2), F(3)]
        res = link_preserving_check(pts, imgs)
        assert not res.preserved
        assert res.witness is not None
