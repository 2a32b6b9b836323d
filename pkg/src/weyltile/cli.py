"""Command-line interface: ``weyltile {verify,project-cell,patch,facets}``."""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .lattice import format_compact
from .permutohedron import (
    face_center,
    face_census,
    face_counts,
    face_type,
    face_words,
    faces_of_dimension,
    facet_center_orbit_generators,
    facet_center_orbits,
    word_string,
)
from .render import RenderStyle, patch_to_svg, write_atomic
from .tiling import (
    DEFAULT_GAMMA,
    SYMMETRIC_GAMMA,
    NonGenericError,
    klotz_patch,
    parse_point,
    patch_statistics,
    patch_to_json,
    shadow_tiling_of_cell,
)
from .verify import MAX_RANK, report
from .weyl import weyl_orbit


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _rank(text: str) -> int:
    n = int(text)
    if not 1 <= n <= MAX_RANK:
        raise argparse.ArgumentTypeError(f"n must be in 1..{MAX_RANK}")
    return n


def _rational(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc
    if value < 0:
        raise argparse.ArgumentTypeError("radius must be non-negative")
    return value


def _point(text: str):
    if text.strip().lower() == "symmetric":
        return SYMMETRIC_GAMMA
    try:
        return parse_point(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _emit(text: str, path: str | None) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        write_atomic(path, text)


def _census_json(patch) -> dict:
    return {t.value: c for t, (c, _) in patch_statistics(patch).items()}


# commands

def cmd_verify(args) -> int:
    rep = report(args.n)
    if args.format == "json" or args.json:
        _emit(dumps(rep), args.json)
    if args.format == "table" and args.json != "-":
        for c in rep["checks"]:
            mark = "PASS" if c["pass"] else "FAIL"
            line = f"{mark}  {c['name']}"
            if not c["pass"]:
                line += f"  expected={c['expected']!r} actual={c['actual']!r}"
            print(line)
        print(f"n={args.n}: {'PASS' if rep['passed'] else 'FAIL'} ({len(rep['checks'])} checks)")
    return 0 if rep["passed"] else 1


def cmd_project_cell(args) -> int:
    patch = shadow_tiling_of_cell(4, args.w)
    if args.types_only:
        _emit(dumps(_census_json(patch)), args.json)
        return 0
    if args.out is None and args.json is None:
        raise SystemExit("project-cell: give --out and/or --json (or --types-only)")
    if args.out:
        write_atomic(args.out, patch_to_svg(patch, _style(args), "projected Voronoi cell of A4*"))
    if args.json:
        _emit(dumps(patch_to_json(patch)), args.json)
    return 0


def cmd_patch(args) -> int:
    patch = klotz_patch(4, args.gamma, args.radius, args.center)
    if args.types_only:
        _emit(dumps(_census_json(patch)), args.json)
        return 0
    if args.out is None and args.json is None:
        raise SystemExit("patch: give --out and/or --json (or --types-only)")
    if args.out:
        write_atomic(args.out, patch_to_svg(patch, _style(args), "A4* Klotz patch"))
    if args.json:
        _emit(dumps(patch_to_json(patch)), args.json)
    return 0


def facets_report(n: int) -> dict:
    out: dict = {"n": n, "face_counts": face_counts(n), "census": face_census(n)}
    if n == 4:
        orbits = facet_center_orbits(4)
        gens = facet_center_orbit_generators(4)
        out["center_orbits"] = {
            label: {
                "generators": [{"label": name, "k_coefficients": [str(c) for c in v.coeffs],
                                "orbit_size": len(weyl_orbit(v))} for name, v in gens[label]],
                "size": len(orbits[label]),
                "centers": [format_compact(v) for v in orbits[label]],
            }
            for label in sorted(orbits)
        }
        rows = []
        for d in (2, 3):
            for f in faces_of_dimension(4, d):
                rows.append({
                    "blocks": [list(b) for b in f.blocks],
                    "type": face_type(f),
                    "vertex_words": [word_string(w) for w in face_words(f)],
                    "center": format_compact(face_center(f)),
                    "center_k_coefficients": [str(c) for c in face_center(f).coeffs],
                })
        out["faces"] = rows
    return out


def cmd_facets(args) -> int:
    rep = facets_report(args.n)
    if args.format == "json":
        _emit(dumps(rep), args.json)
        return 0
    print(f"n = {args.n}")
    print(f"{'dim':>3}  {'blocks':<12} {'count':>7}")
    for row in rep["census"]:
        sizes = "+".join(map(str, row["block_sizes"]))
        print(f"{row['dimension']:>3}  {sizes:<12} {row['count']:>7}")
    print("face counts N_0..N_{n-1}: " + ", ".join(map(str, rep["face_counts"])))
    if args.n == 4:
        for label, orb in rep["center_orbits"].items():
            gens = ", ".join(f"{g['label']} ({g['orbit_size']})" for g in orb["generators"])
            print(f"{label}: {orb['size']} centers, orbits of {gens}")
        for row in rep["faces"]:
            if row["blocks"] in ([[1, 2, 3], [4], [5]], [[1, 2, 3], [4, 5]]):
                print(f"  {row['type']} {row['blocks']}: center {row['center']}, words {' '.join(row['vertex_words'])}")
    if args.json:
        _emit(dumps(rep), args.json)
    return 0


def _style(args) -> RenderStyle:
    return RenderStyle(colored=not args.no_color)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="weyltile", description="Voronoi cell of A_n* and its Coxeter-plane tilings")
    p.add_argument("--version", action="version", version=f"weyltile {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run the verification battery")
    v.add_argument("--n", type=_rank, default=4)
    v.add_argument("--format", choices=("table", "json"), default="table")
    v.add_argument("--json", metavar="PATH", help="also write the JSON report ('-' for stdout)")
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("project-cell", help="shadow tiling of the projected Voronoi cell (n = 4)")
    c.add_argument("--n", type=int, choices=(4,), default=4)
    c.add_argument("--out", metavar="SVG")
    c.add_argument("--json", metavar="PATH")
    c.add_argument("--w", type=_point, default=None, help="direction: window x,y or five k-coefficients")
    c.add_argument("--no-color", action="store_true")
    c.add_argument("--types-only", action="store_true", help="print the tile census only")
    c.set_defaults(func=cmd_project_cell)

    t = sub.add_parser("patch", help="Klotz patch of the projected Voronoi tessellation (n = 4)")
    t.add_argument("--n", type=int, choices=(4,), default=4)
    t.add_argument("--gamma", type=_point, default=DEFAULT_GAMMA,
                   help="window point: x,y, five k-coefficients or 'symmetric'")
    t.add_argument("--radius", type=_rational, default=Fraction(9), help="squared lattice radius p/q")
    t.add_argument("--center", type=_point, default=None, help="ball center (default: gamma)")
    t.add_argument("--out", metavar="SVG")
    t.add_argument("--json", metavar="PATH")
    t.add_argument("--no-color", action="store_true")
    t.add_argument("--types-only", action="store_true")
    t.set_defaults(func=cmd_patch)

    f = sub.add_parser("facets", help="face census and face centers")
    f.add_argument("--n", type=_rank, default=4)
    f.add_argument("--format", choices=("table", "json"), default="table")
    f.add_argument("--json", metavar="PATH")
    f.set_defaults(func=cmd_facets)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NonGenericError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
