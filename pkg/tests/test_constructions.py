import pytest

from hyperk import (
    INFINITY,
    BoundaryPoint,
    FoliatesComponent,
    HorocycleLimit,
    HypercycleOrGeodesicLimit,
    Q,
    UHPPoint,
    classify_family_limit,
    disj_family,
    dyadic_family,
    fixed_endpoint_family,
    four_geodesic_config,
    hyp1_witness,
    intersection_pattern,
    make_geodesic,
    make_horocycle,
    make_hypercycle,
    pinch_pair,
    ray_family,
    sigma_center_swap,
    witness_family_search,
)
from hyperk.errors import InvalidInputError

F = BoundaryPoint.finite


class TestDyadicFamily:
    def test_members_tangent_to_line(self):
        fam = dyadic_family(0, -2, 2)
        line = make_horocycle(INFINITY, 1)
        for h in fam.horocycles:
            assert intersection_pattern(h, line).tangent

    def test_consecutive_tangency_points(self):
        fam = dyadic_family(1, 0, 3)
        for i, pt in enumerate(fam.tangency_points):
            n = fam.n_min + i
            assert pt == UHPPoint(
                (Q(n, 2) + Q(n + 1, 2)) / 2, Q(1, 4)
            )


class TestPinchPair:
    def test_tangent_to_both(self):
        h0 = make_horocycle(F(0), 1)
        h = make_horocycle(F(6), 1)
        a, b = pinch_pair(h0, h)
        for w in (a, b):
            assert intersection_pattern(w, h0).tangent
            assert intersection_pattern(w, h).tangent


class TestWitnesses:
    def test_crossing_pair_certifies_separation(self):
        c1 = make_hypercycle(F(-2), F(2), UHPPoint(0, 3))
        c2 = make_hypercycle(F(-1), F(3), UHPPoint(1, 3))
        if intersection_pattern(c1, c2).interior_count >= 1:
            w, cert = witness_family_search(c1, c2)
            assert w is None
            assert "separated_pair" in cert
            pos, neg = cert["separated_pair"]
            assert c2.circle.evaluate(pos.x, pos.y) > 0
            assert c2.circle.evaluate(neg.x, neg.y) < 0


class TestFamilies:
    def test_disj_family_members_disjoint_from_horocycle(self):
        h = make_horocycle(F(0), 1)
        hp = make_hypercycle(F(4), F(8), UHPPoint(5, 2))
        fam = disj_family(h, hp)
        for t in fam.grid[:5]:
            m = fam.curve_at(t)
            pat = intersection_pattern(m, h)
            assert pat.interior_count == 0

    def test_disj_family_limit_is_horocycle(self):
        h = make_horocycle(F(0), 1)
        hp = make_hypercycle(F(4), F(8), UHPPoint(5, 2))
        res = classify_family_limit(disj_family(h, hp), [])
        assert isinstance(res, HorocycleLimit)
        assert res.curve == h

    def test_ray_family_foliates(self):
        probe = make_geodesic(F(0), INFINITY)
        res = classify_family_limit(ray_family(), [probe])
        assert isinstance(res, FoliatesComponent)

    def test_fixed_endpoint_family_limit(self):
        fam = fixed_endpoint_family(3.0, 1.5)
        res = classify_family_limit(fam, [fam.declared_limit.curve])
        assert isinstance(res, HypercycleOrGeodesicLimit)


class TestFourGeodesics:
    def test_valid_cyclic_order(self):
        cfg = four_geodesic_config(F(0), F(1), F(2), F(3))
        assert cfg is not None

    def test_rejects_bad_order(self):
        with pytest.raises(InvalidInputError):
            four_geodesic_config(F(0), F(2), F(1), F(3))


class TestCenterSwap:
    def test_swaps_and_fixes(self):
        sigma = sigma_center_swap(F(0), F(4))
        h0 = make_horocycle(F(0), 1)
        h4 = make_horocycle(F(4), 1)
        h7 = make_horocycle(F(7), 1)
        assert sigma(h0).center == F(4)
        assert sigma(h4).center == F(0)
        assert sigma(h7).center == F(7)

    def test_breaks_tangency(self):
        sigma = sigma_center_swap(F(0), F(4))
        w1 = make_horocycle(F(0), Q(1, 2))
        w2 = make_horocycle(F(1), Q(1, 2))
        assert intersection_pattern(w1, w2).tangent
        assert not intersection_pattern(sigma(w1), sigma(w2)).tangent
