import pytest

from hyperk import (
    INFINITY,
    HorocycleOrder,
    BoundaryPoint,
    HypercyclePairType,
    Q,
    UHPPoint,
    between_tangent,
    curve_from_coeffs,
    geodesics_linked,
    horocycle_leq,
    hypercycle_pair_type,
    intersection_pattern,
    linked,
    make_geodesic,
    make_horocycle,
    make_hypercycle,
    same_endpoints,
)

F = BoundaryPoint.finite


class TestIntersectionPattern:
    def test_crossing_geodesics(self):
        p = intersection_pattern(
            make_geodesic(F(-1), F(1)), make_geodesic(F(0), INFINITY)
        )
        assert p.interior_count == 1 and not p.tangent

    def test_disjoint_geodesics(self):
        p = intersection_pattern(
            make_geodesic(F(-2), F(-1)), make_geodesic(F(1), F(2))
        )
        assert p.interior_count == 0

    def test_tangent_horocycles(self):
        h1 = make_horocycle(F(0), Q(1, 2))
        h2 = make_horocycle(F(1), Q(1, 2))
        p = intersection_pattern(h1, h2)
        assert p.tangent and p.interior_count == 1

    def test_shared_endpoint_counted(self):
        p = intersection_pattern(
            make_geodesic(F(0), F(1)), make_geodesic(F(0), F(2))
        )
        assert p.shared_endpoints == 1 and p.interior_count == 0

    def test_equal_curves(self):
        g = make_geodesic(F(-3), F(3))
        assert intersection_pattern(g, g).equal

    def test_exact_on_rational_inputs(self):
        # hairline near-tangency that floats would misclassify
        h1 = make_horocycle(F(0), Q(1, 2))
        h2 = make_horocycle(F(Q(10**9 + 1, 10**9)), Q(1, 2))
        p = intersection_pattern(h1, h2)
        assert not p.tangent and p.interior_count == 0


class TestHorocycleOrder:
    def test_same_center_nested(self):
        small = make_horocycle(F(0), Q(1, 4))
        big = make_horocycle(F(0), Q(1, 2))
        assert horocycle_leq(small, big) is HorocycleOrder.LESS_OR_EQUAL
        assert horocycle_leq(big, small) is HorocycleOrder.GREATER_OR_EQUAL

    def test_infinity_center_reversed_by_height(self):
        hi = make_horocycle(INFINITY, 3)
        lo = make_horocycle(INFINITY, 1)
        assert horocycle_leq(hi, lo) is not HorocycleOrder.INCOMPARABLE

    def test_different_centers_incomparable(self):
        h1 = make_horocycle(F(0), 1)
        h2 = make_horocycle(F(5), 1)
        assert horocycle_leq(h1, h2) is HorocycleOrder.INCOMPARABLE


class TestLinks:
    def test_interleaved_pairs_linked(self):
        assert linked((F(0), F(2)), (F(1), F(3)))

    def test_nested_pairs_not_linked(self):
        assert not linked((F(0), F(3)), (F(1), F(2)))

    def test_pair_with_infinity(self):
        assert linked((F(0), INFINITY), (F(-1), F(1)))

    def test_linked_iff_geodesics_cross(self):
        pairs = [
            ((F(0), F(2)), (F(1), F(3))),
            ((F(0), F(3)), (F(1), F(2))),
            ((F(-1), F(1)), (F(0), INFINITY)),
        ]
        for p1, p2 in pairs:
            g1, g2 = make_geodesic(*p1), make_geodesic(*p2)
            assert linked(p1, p2) == geodesics_linked(g1, g2)


class TestHypercyclePairTypes:
    def test_type1_tangent(self):
        c1 = curve_from_coeffs(1, 0, -1, Q(1, 2) - 1)  # tangent pencil at i
        c2 = curve_from_coeffs(1, 0, 2, -3)
        # construct from a known tangent pencil instead: r=3/2 and r=3
        c1 = curve_from_coeffs(1, 0, 2 * Q(3, 2) - 2, 1 - 2 * Q(3, 2))
        c2 = curve_from_coeffs(1, 0, 2 * Q(3) - 2, 1 - 2 * Q(3))
        assert hypercycle_pair_type(c1, c2) is HypercyclePairType.TYPE1

    def test_type2_shared_endpoint_crossing(self):
        c1 = make_hypercycle(F(0), F(4), UHPPoint(2, 3))
        c2 = make_hypercycle(F(0), F(2), UHPPoint(1, 2))
        t = hypercycle_pair_type(c1, c2)
        p = intersection_pattern(c1, c2)
        if p.interior_count == 1 and p.shared_endpoints == 1:
            assert t is HypercyclePairType.TYPE2

    def test_type4_two_crossings(self):
        c1 = make_hypercycle(F(-2), F(2), UHPPoint(0, 3))
        c2 = make_hypercycle(F(-1), F(1), UHPPoint(0, Q(5, 2)))
        p = intersection_pattern(c1, c2)
        if p.interior_count == 2:
            assert hypercycle_pair_type(c1, c2) is HypercyclePairType.TYPE4


class TestBetweenness:
    def test_median_curvature_is_middle(self):
        def pencil(r):
            if r is None:
                return curve_from_coeffs(0, 0, 1, -1)
            return curve_from_coeffs(1, 0, 2 * r - 2, 1 - 2 * r)

        # curvatures: line 0, circle of radius r has curvature 1/r
        curves = [pencil(None), pencil(Q(1)), pencil(Q(1, 2))]
        # curvatures 0, 1, 2 -> middle is index 1
        assert between_tangent(*curves) == 1


class TestSameEndpoints:
    def test_geodesic_vs_hypercycle(self):
        g = make_geodesic(F(-1), F(1))
        c = make_hypercycle(F(-1), F(1), UHPPoint(0, 2))
        assert same_endpoints(g, c)
        assert not same_endpoints(g, make_geodesic(F(-1), F(2)))
