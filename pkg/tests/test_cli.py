import json
import os

import pytest

from hyperk.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestClassify:
    def test_horocycle_example(self, capsys):
        code, out, _ = run(capsys, "classify", "--coeffs", "1,0,-1,0")
        assert code == 0
        assert "Horocycle center 0 radius 1/2" in out

    def test_geodesic_canonical_form(self, capsys):
        code, out, _ = run(capsys, "classify", "--geodesic", "-1,1")
        assert code == 0
        assert "a=1 b=0 c=0 d=-1" in out

    def test_degenerate_exit_3(self, capsys):
        code, _, err = run(capsys, "classify", "--coeffs", "0,0,0,1")
        assert code == 3
        assert "degenerate" in err

    def test_parse_error_exit_2(self, capsys):
        code, _, _ = run(capsys, "classify", "--coeffs", "1,0,banana,0")
        assert code == 2

    def test_float_requires_inexact(self, capsys):
        code, _, err = run(capsys, "classify", "--horocycle", "0,0.5")
        assert code == 2
        assert "--inexact" in err

    def test_inexact_banner(self, capsys):
        code, out, _ = run(capsys, "--inexact", "classify", "--horocycle", "0,0.5")
        assert code == 0
        assert "exact-predicate guarantees disabled" in out

    def test_records_format(self, capsys):
        code, out, _ = run(
            capsys, "--format", "records", "classify", "--geodesic", "0,oo"
        )
        assert code == 0
        rec = json.loads(out.strip().splitlines()[-1])
        assert rec["kind"] == "geodesic"


class TestIntersect:
    def test_crossing_geodesics(self, capsys):
        code, out, _ = run(
            capsys,
            "intersect",
            "--first-geodesic", "-1,1",
            "--second-geodesic", "0,oo",
        )
        assert code == 0
        assert "interior_count=1" in out


class TestEarthquakeCommand:
    def test_apply(self, capsys):
        code, out, _ = run(
            capsys, "earthquake", "--fault", "0,oo", "--shear", "2",
            "apply", "-1", "1", "oo",
        )
        assert code == 0
        assert "-1 -> -2" in out
        assert "1 -> 1" in out

    def test_certify_prints_unsat_message(self, capsys):
        code, out, _ = run(
            capsys, "earthquake", "--fault", "0,oo", "--shear", "2", "certify"
        )
        assert code == 0
        assert "1 ≠ 4·(3/2)·(2/3)" in out


class TestVerifyCommand:
    def test_dyadic_passes(self, capsys):
        code, out, _ = run(capsys, "verify", "dyadic", "--depth", "6")
        assert code == 0
        assert "[pass]" in out

    def test_unknown_suite_exit_2(self, capsys):
        code, _, _ = run(capsys, "verify", "nosuchsuite")
        assert code == 2

    def test_seed_env_override(self, capsys, monkeypatch):
        monkeypatch.setenv("HYPERK_SEED", "12345")
        code, out, _ = run(capsys, "verify", "order", "--seed", "1")
        assert code == 0


class TestRenderCommand:
    def test_render_preset_deterministic(self, capsys, tmp_path):
        p1, p2 = tmp_path / "a.svg", tmp_path / "b.svg"
        assert run(capsys, "render", "--preset", "dyadic", "-o", str(p1))[0] == 0
        assert run(capsys, "render", "--preset", "dyadic", "-o", str(p2))[0] == 0
        assert p1.read_bytes() == p2.read_bytes()

    def test_unwritable_exit_4(self, capsys):
        code, _, err = run(
            capsys, "render", "--preset", "empty", "-o", "/nonexistent/dir/x.svg"
        )
        assert code == 4

    def test_empty_scene_has_axis(self, capsys, tmp_path):
        p = tmp_path / "empty.svg"
        run(capsys, "render", "--preset", "empty", "-o", str(p))
        svg = p.read_text()
        assert "<line" in svg and "<svg" in svg


class TestFamilyCommand:
    def test_ray_preset(self, capsys):
        code, out, _ = run(capsys, "family", "--preset", "ray")
        assert code == 0
        assert "foliates" in out

    def test_disjoint_pair(self, capsys):
        code, out, _ = run(
            capsys, "family", "--horocycle", "0,1", "--hypercycle", "4,8,5,2"
        )
        assert code == 0
        assert "limit: horocycle" in out


class TestGraphCommand:
    def test_graph_file(self, capsys, tmp_path):
        f = tmp_path / "curves.txt"
        f.write_text(
            "horocycle a=1 b=0 c=-1 d=0\n"
            "horocycle a=1 b=-2 c=-1 d=1\n"
            "horocycle a=1 b=-4 c=-1 d=4\n"
            "horocycle a=0 b=0 c=1 d=-2\n"
        )
        code, out, _ = run(capsys, "graph", "--curves", str(f), "--autos")
        assert code == 0
        assert "2 automorphisms" in out
