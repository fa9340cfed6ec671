"""Command-line front end.

Subcommands: classify, construct, intersect, graph, earthquake, family,
verify, render.  Rational inputs are `p/q` strings; floats are accepted
only with --inexact, which disables the exact-predicate guarantees and says
so in the output banner.  Exit codes: 0 success, 2 parse/usage error,
3 degenerate geometry, 4 unwritable output path.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from typing import List, Optional

from ._rational import Q, q_from_str, q_str
from .errors import (
    DegenerateResultError,
    HyperkError,
    IndeterminateLimitError,
    InvalidInputError,
    NoSolutionError,
)
from .model import (
    INFINITY,
    BoundaryPoint,
    Curve,
    CurveKind,
    Isometry,
    UHPPoint,
    curve_from_coeffs,
    equidistant_pair,
    make_geodesic,
    make_horocycle,
    make_hypercycle,
    parse_curve_text,
)
from .predicates import (
    hypercycle_pair_type,
    intersection_pattern,
    pair_type_from_pattern,
)
from .constructions import (
    FoliatesComponent,
    HorocycleLimit,
    HypercycleOrGeodesicLimit,
    classify_family_limit,
    disj_family,
    dyadic_family,
    fixed_endpoint_family,
    pinch_pair,
    ray_family,
)
from .earthquake import (
    EarthquakeMap,
    Satisfiable,
    Unsatisfiable,
    eq_apply,
    eq_geodesic_image,
    instance_from_horocycles,
    pointwise_image_is_curve,
    tangency_realizability,
)
from .graphs import (
    GraphAutomorphism,
    automorphisms,
    build_graph,
    isometry_realizing,
)
from .render import SvgScene, render_panels, render_scene, write_svg
from .verify import SUITES, figure_one_configuration, figure_one_images, run_suite

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_DEGENERATE = 3
EXIT_UNWRITABLE = 4


class _Output:
    def __init__(self, fmt: str, inexact: bool):
        self.fmt = fmt
        self.records: List[dict] = []
        if inexact and fmt == "text":
            print("note: --inexact inputs; exact-predicate guarantees disabled")

    def emit(self, text: str, record: Optional[dict] = None):
        if self.fmt == "records":
            self.records.append(record if record is not None else {"text": text})
        else:
            print(text)

    def flush(self):
        if self.fmt == "records":
            for rec in self.records:
                print(json.dumps(rec, sort_keys=True))


def _parse_boundary(text: str) -> BoundaryPoint:
    return BoundaryPoint.parse(text)


_RATIONAL_RE = re.compile(r"^-?\d+(/\d+)?$")


def _parse_number(text: str, inexact: bool):
    text = text.strip()
    if _RATIONAL_RE.match(text):
        return q_from_str(text)
    if inexact:
        return float(text)
    raise InvalidInputError(
        f"{text!r} is not a rational p/q; pass --inexact to allow floats"
    )


def _curve_from_args(args, out_inexact: bool) -> Curve:
    chosen = [
        name
        for name in ("coeffs", "geodesic", "horocycle", "hypercycle", "curve")
        if getattr(args, name, None)
    ]
    if len(chosen) != 1:
        raise InvalidInputError(
            "specify exactly one of --coeffs/--geodesic/--horocycle/--hypercycle/--curve"
        )
    kind = chosen[0]
    if kind == "curve":
        return parse_curve_text(args.curve)
    parts = [p for p in getattr(args, kind).split(",") if p.strip()]
    if kind == "coeffs":
        if len(parts) != 4:
            raise InvalidInputError("--coeffs needs a,b,c,d")
        vals = [_parse_number(p, out_inexact) for p in parts]
        return curve_from_coeffs(*vals)
    if kind == "geodesic":
        if len(parts) != 2:
            raise InvalidInputError("--geodesic needs p,q")
        return make_geodesic(_parse_boundary(parts[0]), _parse_boundary(parts[1]))
    if kind == "horocycle":
        if len(parts) != 2:
            raise InvalidInputError("--horocycle needs center,size")
        return make_horocycle(
            _parse_boundary(parts[0]), _parse_number(parts[1], out_inexact)
        )
    if len(parts) != 4:
        raise InvalidInputError("--hypercycle needs p,q,x,y (a point on the curve)")
    return make_hypercycle(
        _parse_boundary(parts[0]),
        _parse_boundary(parts[1]),
        UHPPoint(
            _parse_number(parts[2], out_inexact), _parse_number(parts[3], out_inexact)
        ),
    )


def _describe_curve(c: Curve) -> str:
    if c.kind is CurveKind.HOROCYCLE:
        if c.center.is_infinity:
            return f"Horocycle center oo height {q_str(Q(c.size)) if c.exact else c.size}"
        return (
            f"Horocycle center {c.center!r} radius "
            f"{q_str(Q(c.size)) if c.exact else c.size}"
        )
    name = c.kind.value.capitalize()
    if c.has_exact_endpoints:
        eps = ", ".join(repr(p) for p in c.endpoints)
        return f"{name} endpoints {eps}"
    return f"{name} endpoints ~{c.endpoint_floats()}"


def _add_curve_flags(p: argparse.ArgumentParser, prefix: str = ""):
    p.add_argument(f"--{prefix}coeffs", dest=f"{prefix}coeffs".replace("-", "_"))
    p.add_argument(f"--{prefix}geodesic", dest=f"{prefix}geodesic".replace("-", "_"))
    p.add_argument(f"--{prefix}horocycle", dest=f"{prefix}horocycle".replace("-", "_"))
    p.add_argument(f"--{prefix}hypercycle", dest=f"{prefix}hypercycle".replace("-", "_"))
    p.add_argument(f"--{prefix}curve", dest=f"{prefix}curve".replace("-", "_"))


def cmd_classify(args, out: _Output) -> int:
    c = _curve_from_args(args, args.inexact)
    if c.exact:
        out.emit(
            f"{_describe_curve(c)}\ncanonical {c.to_text()}",
            {"describe": _describe_curve(c), **c.to_record()},
        )
    else:
        a, b, cc, d = c.circle.coeffs()
        out.emit(
            f"{_describe_curve(c)}\nunit-norm a={a} b={b} c={cc} d={d}",
            {
                "describe": _describe_curve(c),
                "kind": c.kind.value,
                "a": a, "b": b, "c": cc, "d": d,
            },
        )
    return EXIT_OK


def cmd_construct(args, out: _Output) -> int:
    what = args.what
    if what == "dyadic":
        fam = dyadic_family(args.level, args.n_min, args.n_max)
        for h in fam.horocycles:
            out.emit(h.to_text(), h.to_record())
        for pt in fam.tangency_points:
            out.emit(
                f"tangency {q_str(Q(pt.x))} + i*{q_str(Q(pt.y))}",
                {"tangency": [q_str(Q(pt.x)), q_str(Q(pt.y))]},
            )
        return EXIT_OK
    if what == "pinch":
        h0 = make_horocycle(
            _parse_boundary(args.first.split(",")[0]),
            _parse_number(args.first.split(",")[1], args.inexact),
        )
        h1 = make_horocycle(
            _parse_boundary(args.second.split(",")[0]),
            _parse_number(args.second.split(",")[1], args.inexact),
        )
        a, b = pinch_pair(h0, h1)
        for w in (a, b):
            out.emit(w.to_text(), w.to_record())
        return EXIT_OK
    if what == "equidistant":
        g = make_geodesic(
            _parse_boundary(args.first.split(",")[0]),
            _parse_boundary(args.first.split(",")[1]),
        )
        lo, hi = equidistant_pair(g, float(args.distance))
        for w in (lo, hi):
            out.emit(w.to_text(), w.to_record())
        return EXIT_OK
    raise InvalidInputError(f"unknown construction {what!r}")


def cmd_intersect(args, out: _Output) -> int:
    class _Args:
        pass

    first, second = _Args(), _Args()
    for name in ("coeffs", "geodesic", "horocycle", "hypercycle", "curve"):
        setattr(first, name, getattr(args, f"first_{name}", None))
        setattr(second, name, getattr(args, f"second_{name}", None))
    first.inexact = second.inexact = args.inexact
    c1 = _curve_from_args(first, args.inexact)
    c2 = _curve_from_args(second, args.inexact)
    pat = intersection_pattern(c1, c2)
    ptype = pair_type_from_pattern(c1, c2)
    out.emit(
        f"{pat.describe()}\npair type {ptype.name}",
        {"pattern": pat.to_record(), "pair_type": ptype.name},
    )
    return EXIT_OK


def _read_curves(path: str) -> List[Curve]:
    with open(path, "r", encoding="utf-8") as f:
        lines = [ln.strip() for ln in f if ln.strip() and not ln.startswith("#")]
    return [parse_curve_text(ln) for ln in lines]


def cmd_graph(args, out: _Output) -> int:
    curves = _read_curves(args.curves)
    g = build_graph(curves, allow_mixed=args.mixed)
    out.emit(g.to_text(), g.to_record())
    if args.autos:
        autos = automorphisms(g, cap=args.cap)
        for a in autos:
            out.emit(f"automorphism {list(a.perm)}", a.to_record())
        out.emit(f"{len(autos)} automorphisms", {"automorphism_count": len(autos)})
    if args.realize:
        perm = GraphAutomorphism(tuple(int(x) for x in args.realize.split(",")))
        iso = isometry_realizing(g, perm)
        if iso is None:
            out.emit("no realizing isometry", {"realizing": None})
        else:
            out.emit(f"realizing isometry {iso!r}", {"realizing": repr(iso)})
    return EXIT_OK


def cmd_earthquake(args, out: _Output) -> int:
    p, q = (s.strip() for s in args.fault.split(","))
    fault = make_geodesic(_parse_boundary(p), _parse_boundary(q))
    e = EarthquakeMap(fault, q_from_str(args.shear), args.side)
    action = args.action
    if action == "apply":
        for token in args.values:
            if "," in token:
                x, y = token.split(",")
                z = UHPPoint(
                    _parse_number(x, args.inexact), _parse_number(y, args.inexact)
                )
                w = eq_apply(e, z)
                out.emit(
                    f"{token} -> {w.x},{w.y}",
                    {"input": token, "image": [str(w.x), str(w.y)]},
                )
            else:
                b = _parse_boundary(token)
                w = eq_apply(e, b)
                out.emit(f"{token} -> {w!r}", {"input": token, "image": repr(w)})
        return EXIT_OK
    if action == "image":
        for token in args.values:
            a, b = token.split(",")
            g = make_geodesic(_parse_boundary(a), _parse_boundary(b))
            img = eq_geodesic_image(e, g)
            out.emit(f"{g.to_text()} -> {img.to_text()}", img.to_record())
        return EXIT_OK
    if action == "certify":
        if args.curves:
            hs = _read_curves(args.curves)
        else:
            hs = figure_one_configuration()
        images = [eq_apply(e, h.center) for h in hs]
        inst = instance_from_horocycles(hs, images)
        res = tangency_realizability(inst)
        if isinstance(res, Satisfiable):
            radii = ", ".join(str(r) for r in res.radii)
            out.emit(f"satisfiable: radii {radii}", res.to_record())
        else:
            out.emit(f"unsatisfiable: {res.message}", res.to_record())
            for con in res.cycle:
                out.emit(f"  constraint: {con.text}", con.to_record())
        return EXIT_OK
    raise InvalidInputError(f"unknown earthquake action {action!r}")


def cmd_family(args, out: _Output) -> int:
    if args.preset == "ray":
        fam = ray_family()
        probes = [make_geodesic(BoundaryPoint.finite(0), INFINITY)]
    elif args.preset == "fixed-endpoint":
        fam = fixed_endpoint_family(3.0, 1.5)
        probes = [fam.declared_limit.curve]
    else:
        hc, hs = args.horocycle.split(",")
        h = make_horocycle(_parse_boundary(hc), q_from_str(hs))
        hp_parts = args.hypercycle.split(",")
        hp = make_hypercycle(
            _parse_boundary(hp_parts[0]),
            _parse_boundary(hp_parts[1]),
            UHPPoint(q_from_str(hp_parts[2]), q_from_str(hp_parts[3])),
        )
        fam = disj_family(h, hp)
        probes = []
    res = classify_family_limit(fam, probes)
    if isinstance(res, FoliatesComponent):
        out.emit("limit: foliates its component", {"limit": "foliates"})
        return EXIT_OK
    label = "horocycle" if isinstance(res, HorocycleLimit) else "hypercycle-or-geodesic"
    if res.curve.exact:
        out.emit(
            f"limit: {label} {res.curve.to_text()}",
            {"limit": label, **res.curve.to_record()},
        )
    else:
        out.emit(f"limit: {label} {res.curve!r}", {"limit": label, "curve": repr(res.curve)})
    return EXIT_OK


def cmd_verify(args, out: _Output) -> int:
    seed = args.seed
    env_seed = os.environ.get("HYPERK_SEED")
    if env_seed is not None:
        seed = int(env_seed)
    results = run_suite(args.suite, seed=seed, scale=args.scale, depth=args.depth)
    failed = 0
    for r in results:
        out.emit(
            r.line(),
            {"suite": r.suite, "property": r.name, "passed": r.passed, "detail": r.detail},
        )
        if not r.passed:
            failed += 1
    out.emit(
        f"{len(results) - failed}/{len(results)} properties passed",
        {"passed": len(results) - failed, "total": len(results)},
    )
    return EXIT_OK if failed == 0 else 1


def _scene_from_preset(name: str) -> List[SvgScene]:
    from ._rational import Q as _Q

    if name == "dyadic":
        fam = dyadic_family(0, -2, 2)
        scene = SvgScene(x_min=-2.5, x_max=2.5, height=2.0)
        scene.add(make_horocycle(INFINITY, 1))
        scene.add(*fam.horocycles)
        scene.mark(*fam.tangency_points)
        return [scene]
    if name == "figure-one":
        hs = figure_one_configuration()
        before = SvgScene(x_min=-3.0, x_max=3.0, height=2.5)
        before.add(*hs)
        fault = make_geodesic(BoundaryPoint.finite(0), INFINITY)
        e = EarthquakeMap(fault, 2, "left")
        after = SvgScene(x_min=-3.0, x_max=3.0, height=2.5)
        for h in hs:
            after.add(make_horocycle(eq_apply(e, h.center), h.size))
        after.add(fault)
        return [before, after]
    if name == "empty":
        return [SvgScene()]
    raise InvalidInputError(f"unknown preset {name!r}")


def cmd_render(args, out: _Output) -> int:
    if args.preset:
        scenes = _scene_from_preset(args.preset)
    elif args.curves:
        scene = SvgScene(x_min=args.x_min, x_max=args.x_max, height=args.height)
        scene.add(*_read_curves(args.curves))
        scenes = [scene]
    else:
        scenes = [SvgScene(x_min=args.x_min, x_max=args.x_max, height=args.height)]
    svg = render_scene(scenes[0]) if len(scenes) == 1 else render_panels(scenes)
    try:
        write_svg(svg, args.output)
    except OSError as exc:
        print(f"error: cannot write {args.output!r}: {exc}", file=sys.stderr)
        return EXIT_UNWRITABLE
    out.emit(f"wrote {args.output}", {"output": args.output})
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="hyperk",
        description="Exact geodesic/horocycle/hypercycle kernel for the "
        "upper half-plane",
    )
    ap.add_argument("--format", choices=("text", "records"), default="text")
    ap.add_argument(
        "--inexact",
        action="store_true",
        help="accept float inputs (disables exact-predicate guarantees)",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify a curve and print its canonical form")
    _add_curve_flags(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("construct", help="build named constructions")
    p.add_argument("what", choices=("dyadic", "pinch", "equidistant"))
    p.add_argument("--level", type=int, default=0)
    p.add_argument("--n-min", type=int, default=-2)
    p.add_argument("--n-max", type=int, default=2)
    p.add_argument("--first", help="horocycle center,size or geodesic p,q")
    p.add_argument("--second", help="horocycle center,size")
    p.add_argument("--distance", default="1.0")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("intersect", help="intersection pattern of two curves")
    _add_curve_flags(p, "first-")
    _add_curve_flags(p, "second-")
    p.set_defaults(func=cmd_intersect)

    p = sub.add_parser("graph", help="disjointness graph of a curve file")
    p.add_argument("--curves", required=True, help="file of curve text lines")
    p.add_argument("--mixed", action="store_true")
    p.add_argument("--autos", action="store_true", help="list automorphisms")
    p.add_argument("--cap", type=int, default=10000)
    p.add_argument("--realize", help="comma permutation to realize by an isometry")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("earthquake", help="apply/certify a simple earthquake")
    p.add_argument("--fault", required=True, help="p,q boundary endpoints")
    p.add_argument("--shear", required=True, help="rational shear != 1")
    p.add_argument("--side", choices=("left", "right"), default="left")
    p.add_argument("action", choices=("apply", "image", "certify"))
    p.add_argument("values", nargs="*", help="points x,y / boundary values / endpoint pairs")
    p.add_argument("--curves", help="horocycle file for certify")
    p.set_defaults(func=cmd_earthquake)

    p = sub.add_parser("family", help="classify a continuous family's limit")
    p.add_argument("--preset", choices=("ray", "fixed-endpoint"))
    p.add_argument("--horocycle", help="center,size")
    p.add_argument("--hypercycle", help="p,q,x,y")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("verify", help="run a property suite")
    p.add_argument("suite", choices=tuple(SUITES) + ("all",))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--scale", choices=("small", "full"), default="small")
    p.add_argument("--depth", type=int, default=6)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", help="emit a deterministic SVG scene")
    p.add_argument("--preset", choices=("dyadic", "figure-one", "empty"))
    p.add_argument("--curves", help="file of curve text lines")
    p.add_argument("--x-min", type=float, default=-3.0)
    p.add_argument("--x-max", type=float, default=3.0)
    p.add_argument("--height", type=float, default=3.0)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_render)

    # let values like "-1,1" or "-3/2" pass as option arguments
    neg = re.compile(r"^-\d")
    ap._negative_number_matcher = neg
    for action in sub.choices.values():
        action._negative_number_matcher = neg

    return ap


def main(argv: Optional[List[str]] = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code not in (0, None) else 0
    out = _Output(args.format, args.inexact)
    try:
        code = args.func(args, out)
    except DegenerateResultError as exc:
        print(f"degenerate: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except (InvalidInputError, NoSolutionError, IndeterminateLimitError, HyperkError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    out.flush()
    return code


if __name__ == "__main__":
    sys.exit(main())
