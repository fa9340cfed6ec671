import re

from hyperk import (
    INFINITY,
    BoundaryPoint,
    Q,
    SvgScene,
    UHPPoint,
    make_geodesic,
    make_horocycle,
    render_panels,
    render_scene,
)

F = BoundaryPoint.finite


def test_deterministic_output():
    scene = SvgScene()
    scene.add(make_geodesic(F(-1), F(1)), make_horocycle(F(0), Q(1, 2)))
    assert render_scene(scene) == render_scene(scene)


def test_six_decimal_coordinates():
    scene = SvgScene()
    scene.add(make_geodesic(F(-1), F(1)))
    svg = render_scene(scene)
    for num in re.findall(r'[xy][12]?="(-?\d+\.\d+)"', svg):
        assert len(num.split(".")[1]) == 6


def test_axis_always_present():
    svg = render_scene(SvgScene())
    assert "<line" in svg


def test_clip_to_upper_half_plane():
    svg = render_scene(SvgScene())
    assert "clipPath" in svg


def test_panels():
    s1, s2 = SvgScene(), SvgScene()
    s1.add(make_geodesic(F(0), INFINITY))
    s2.add(make_horocycle(INFINITY, 1))
    svg = render_panels([s1, s2])
    assert svg.count("<svg") == 1  # one document
    assert "translate" in svg


def test_marked_points_rendered():
    scene = SvgScene()
    scene.mark(UHPPoint(0, 1))
    svg = render_scene(scene)
    assert "circle" in svg
