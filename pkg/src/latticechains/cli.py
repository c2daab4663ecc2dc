"""Command-line surface: verify, enumerate, simulate, explore, render.

Exit codes: 0 all checks pass, 1 a mathematical check failed (the report
says which), 2 usage or configuration error. All output is deterministic:
identical arguments give byte-identical stdout and files.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction

from .enumeration import enumerate_polygons
from .geometry import ChainPolygon, LatticePoint, TriangleSpec, polygon_stats, triangle_interior_points
from .montecarlo import SimulationConfig, compare, simulate
from .explorer import SearchCapExceeded, match_signature, search_unit_multisets, triangle_signature
from .verification import polygon_term_doubled_exponent, verify_all

CSV_COLUMNS = ["k", "vCount", "iP", "bP", "area2", "u", "exponentDoubled", "vertices"]


@dataclass(frozen=True)
class PolygonRecord:
    """Serialized polygon plus its statistics; every field is recomputable."""

    vertices: tuple
    k: int
    v_count: int
    i_p: int
    b_p: int
    area2: int
    u: int
    exponent_doubled: int

    @classmethod
    def from_polygon(cls, p: ChainPolygon) -> "PolygonRecord":
        s = polygon_stats(p)
        return cls(
            vertices=tuple((v.x, v.y) for v in p.vertices),
            k=s.k,
            v_count=s.v_count,
            i_p=s.interior,
            b_p=s.boundary,
            area2=s.area2,
            u=s.u,
            exponent_doubled=polygon_term_doubled_exponent(s.k, s.interior, s.boundary),
        )

    def to_json_obj(self) -> dict:
        return {
            "vertices": [list(v) for v in self.vertices],
            "k": self.k,
            "vCount": self.v_count,
            "iP": self.i_p,
            "bP": self.b_p,
            "area2": self.area2,
            "u": self.u,
            "exponentDoubled": self.exponent_doubled,
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> "PolygonRecord":
        return cls(
            vertices=tuple((int(x), int(y)) for x, y in obj["vertices"]),
            k=int(obj["k"]),
            v_count=int(obj["vCount"]),
            i_p=int(obj["iP"]),
            b_p=int(obj["bP"]),
            area2=int(obj["area2"]),
            u=int(obj["u"]),
            exponent_doubled=int(obj["exponentDoubled"]),
        )

    def validate(self) -> None:
        """Recompute everything from the vertices; mismatch means corruption."""
        last = self.vertices[-1]
        spec = TriangleSpec(last[0], last[1])
        poly = ChainPolygon(tuple(LatticePoint(x, y) for x, y in self.vertices), spec)
        if PolygonRecord.from_polygon(poly) != self:
            raise ValueError(f"record fields disagree with recomputation: {self}")


def records_for(spec: TriangleSpec) -> list:
    return [PolygonRecord.from_polygon(p) for p in enumerate_polygons(spec)]


def records_to_json(records) -> str:
    return json.dumps([r.to_json_obj() for r in records], indent=2) + "\n"


def records_from_json(text: str) -> list:
    records = [PolygonRecord.from_json_obj(obj) for obj in json.loads(text)]
    for r in records:
        r.validate()
    return records


def records_to_csv(records) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in records:
        writer.writerow([
            r.k, r.v_count, r.i_p, r.b_p, r.area2, r.u, r.exponent_doubled,
            json.dumps([list(v) for v in r.vertices], separators=(",", ":")),
        ])
    return out.getvalue()


def records_from_csv(text: str) -> list:
    rows = list(csv.reader(io.StringIO(text)))
    if not rows or rows[0] != CSV_COLUMNS:
        raise ValueError(f"expected header {','.join(CSV_COLUMNS)}")
    records = []
    for row in rows[1:]:
        k, v_count, i_p, b_p, area2, u, exp2 = (int(c) for c in row[:7])
        verts = tuple((int(x), int(y)) for x, y in json.loads(row[7]))
        rec = PolygonRecord(verts, k, v_count, i_p, b_p, area2, u, exp2)
        rec.validate()
        records.append(rec)
    return records


def format_signature(sig) -> str:
    inner = ",".join(f"({a},{b})" for a, b in sorted(sig.pairs, reverse=True))
    return "{" + inner + "}"


def format_vertices(p: ChainPolygon) -> str:
    return "-".join(f"({v.x},{v.y})" for v in p.vertices)


# ---------------------------------------------------------------- commands

def cmd_verify(args) -> int:
    if args.all_up_to is not None:
        if args.i is not None or args.n is not None:
            print("--all-up-to cannot be combined with --i/--n", file=sys.stderr)
            return 2
        pairs = [(i, n) for n in range(2, args.all_up_to + 1) for i in range(1, n)]
    else:
        if args.i is None or args.n is None:
            print("need either --i and --n, or --all-up-to", file=sys.stderr)
            return 2
        if not 1 <= args.i < args.n:
            print(f"need 1 <= i < n, got i={args.i}, n={args.n}", file=sys.stderr)
            return 2
        pairs = [(args.i, args.n)]

    failures = 0
    for i, n in pairs:
        report = verify_all(i, n)
        verdict = "PASS" if report.all_passed else "FAIL"
        print(f"i={i} n={n}: lhs = {report.lhs.render()}, rhs = {report.rhs.render()}  {verdict}")
        if not report.all_passed:
            failures += 1
            print(f"  first failed check: {report.failed_check}")
            for name, ok in report.checks:
                print(f"  {name}: {'pass' if ok else 'FAIL'}")
            print("  term ledger (steps, k, doubled exponent):")
            for element, doubled, k in report.per_term_ledger:
                print(f"    {element.steps} k={k} exp2={doubled}")
    if len(pairs) > 1:
        print(f"{len(pairs) - failures}/{len(pairs)} pairs pass")
    return 1 if failures else 0


def cmd_enumerate(args) -> int:
    records = records_for(TriangleSpec(args.i, args.j))
    if args.format == "json":
        sys.stdout.write(records_to_json(records))
    else:
        sys.stdout.write(records_to_csv(records))
    return 0


def cmd_simulate(args) -> int:
    try:
        config = SimulationConfig(TriangleSpec(args.i, args.j), args.x, args.trials, args.seed)
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    table = simulate(config, jobs=args.jobs)
    report = compare(table, config, z_threshold=args.z_threshold)

    print(f"triangle ({args.i},{args.j}), x = {config.x}, trials = {config.trials}, seed = {config.seed}")
    print(f"{'polygon':<36} {'count':>9} {'empirical':>10} {'exact':>10} {'z':>8}")
    for row in report.rows:
        name = format_vertices(row.polygon)
        flag = "  <-- |z| above threshold" if row.flagged else ""
        print(f"{name:<36} {row.count:>9} {row.empirical:>10.6f} {str(row.exact):>10} {row.z:>+8.3f}{flag}")
    print(f"exact probabilities sum to 1: {'yes' if report.exact_total == 1 else 'NO (' + str(report.exact_total) + ')'}")
    if report.ok:
        print(f"no |z| above threshold {report.z_threshold}")
        return 0
    print(f"{len(report.flagged_rows)} polygon(s) beyond |z| = {report.z_threshold}")
    return 1


def cmd_explore(args) -> int:
    try:
        found = search_unit_multisets(args.max_a, args.max_b, args.max_size,
                                      node_cap=args.node_cap)
    except SearchCapExceeded as exc:
        print(f"search cap hit: {exc}; raise --node-cap to finish the search",
              file=sys.stderr)
        return 2
    if args.collapse_sets:
        seen = []
        for sig in found:
            collapsed = sig.as_set()
            if collapsed not in seen:
                seen.append(collapsed)
        found = seen
    print(f"search bounds: a <= {args.max_a}, b <= {args.max_b}, size <= {args.max_size}")
    print(f"found {len(found)} unit multiset(s)")
    for sig in found:
        if args.collapse_sets:
            matches = [
                (m, n)
                for m in range(1, args.max_m + 1)
                for n in range(1, args.max_n + 1)
                if triangle_signature(m, n).as_set() == sig
            ]
        else:
            matches = match_signature(sig, args.max_m, args.max_n)
        shown = ", ".join(f"({m},{n})" for m, n in matches) if matches else "none"
        print(f"{format_signature(sig)}")
        print(f"  triangles up to ({args.max_m},{args.max_n}): {shown}")
    return 0


SCALE = 32
PAD = 16


def render_svg(p: ChainPolygon, spec: TriangleSpec) -> str:
    width = spec.i * SCALE + 2 * PAD
    height = spec.j * SCALE + 2 * PAD

    def sx(x: int) -> int:
        return PAD + x * SCALE

    def sy(y: int) -> int:
        return PAD + (spec.j - y) * SCALE

    tri = " ".join(f"{sx(c.x)},{sy(c.y)}" for c in spec.corners)
    chain_pts = " ".join(f"{sx(v.x)},{sy(v.y)}" for v in p.vertices)

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'  <rect width="{width}" height="{height}" fill="white"/>',
        f'  <polygon points="{tri}" fill="none" stroke="#555555" stroke-width="1.5"/>',
        f'  <line x1="{sx(0)}" y1="{sy(0)}" x2="{sx(spec.i)}" y2="{sy(spec.j)}" '
        f'stroke="#2b6cb0" stroke-width="3"/>',
        f'  <polygon points="{chain_pts}" fill="#f6c345" fill-opacity="0.25" stroke="none"/>',
        f'  <polyline points="{chain_pts}" fill="none" stroke="#b7791f" stroke-width="2.5"/>',
    ]
    for pt in triangle_interior_points(spec):
        lines.append(f'  <circle cx="{sx(pt.x)}" cy="{sy(pt.y)}" r="3" fill="#333333"/>')
    for v in p.vertices:
        lines.append(f'  <circle cx="{sx(v.x)}" cy="{sy(v.y)}" r="4" fill="#b7791f"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def cmd_render(args) -> int:
    spec = TriangleSpec(args.i, args.j)
    try:
        os.makedirs(args.out_dir, exist_ok=True)
        for index, p in enumerate(enumerate_polygons(spec)):
            path = os.path.join(args.out_dir, f"poly_{index}.svg")
            with open(path, "w") as fh:
                fh.write(render_svg(p, spec))
            print(f"wrote {path}")
    except OSError as exc:
        print(f"cannot write under {args.out_dir}: {exc}", file=sys.stderr)
        return 1
    return 0


# ---------------------------------------------------------------- arg plumbing

def positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def nonnegative_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return value


def unit_fraction(text: str) -> Fraction:
    try:
        num, den = text.split("/")
        value = Fraction(int(num), int(den))
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected a fraction like 1/2, got {text!r}")
    if not 0 < value < 1:
        raise argparse.ArgumentTypeError(f"x must lie strictly between 0 and 1, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="latticechains",
        description="Exact verification of the convex chain identity and its process form.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="check the identity for one (i,n) or a sweep")
    p_verify.add_argument("--i", type=positive_int)
    p_verify.add_argument("--n", type=positive_int)
    p_verify.add_argument("--all-up-to", type=positive_int, metavar="N")
    p_verify.set_defaults(func=cmd_verify)

    p_enum = sub.add_parser("enumerate", help="list the polygon family with statistics")
    p_enum.add_argument("--i", type=positive_int, required=True)
    p_enum.add_argument("--j", type=positive_int, required=True)
    p_enum.add_argument("--format", choices=["json", "csv"], default="json")
    p_enum.set_defaults(func=cmd_enumerate)

    p_sim = sub.add_parser("simulate", help="run the point-selection process and compare")
    p_sim.add_argument("--i", type=positive_int, required=True)
    p_sim.add_argument("--j", type=positive_int, required=True)
    p_sim.add_argument("--x", type=unit_fraction, required=True, metavar="P/Q")
    p_sim.add_argument("--trials", type=positive_int, required=True)
    p_sim.add_argument("--seed", type=nonnegative_int, default=0)
    p_sim.add_argument("--jobs", type=positive_int, default=1)
    p_sim.add_argument("--z-threshold", type=float, default=4.0)
    p_sim.set_defaults(func=cmd_simulate)

    p_explore = sub.add_parser("explore", help="search exponent multisets summing to 1")
    p_explore.add_argument("--max-a", type=nonnegative_int, required=True)
    p_explore.add_argument("--max-b", type=nonnegative_int, required=True)
    p_explore.add_argument("--max-size", type=positive_int, required=True)
    p_explore.add_argument("--max-m", type=positive_int, default=8)
    p_explore.add_argument("--max-n", type=positive_int, default=8)
    p_explore.add_argument("--node-cap", type=positive_int, default=200_000)
    p_explore.add_argument("--collapse-sets", action="store_true",
                           help="compare signatures with multiplicities dropped")
    p_explore.set_defaults(func=cmd_explore)

    p_render = sub.add_parser("render", help="write one SVG figure per polygon")
    p_render.add_argument("--i", type=positive_int, required=True)
    p_render.add_argument("--j", type=positive_int, required=True)
    p_render.add_argument("--out-dir", required=True)
    p_render.set_defaults(func=cmd_render)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
