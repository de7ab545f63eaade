"""Command-line interface: classify, untwist, ecf, transform, track, distance,
graph, and verify subcommands.

Machine-readable output is behind ``--json`` (stable field names, byte-stable
across runs).  Twist words are printed in application order — the first
letter listed acts first — with ``tc-``/``td-`` for the inverse generators;
read as a group element the composition runs right to left.

Exit codes: 0 success, 2 usage error, 3 input is not an essential curve (or
not coprime), 4 verification failure, 5 resource limit hit.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass

from .actions import Generator, TrackFamily, track_of
from .coords import CurveTag, curve_kind, dynnikov_to_torus, torus_to_dynnikov
from .ecf import ecf_expand
from .oracle import (
    DYNNIKOV_SEEDS,
    TORUS_SEEDS,
    CayleySpec,
    Plane,
    bfs_distances,
    run_verification,
    torus_orbit_label,
)
from .untwist import classify, conjugation_length, untwist

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NOT_ESSENTIAL = 3
EXIT_VERIFY_FAILED = 4
EXIT_RESOURCE = 5


@dataclass(frozen=True)
class OutputRecord:
    """Full classification record for one essential curve."""

    input: tuple[int, int]
    kind: str
    multiplicity: int
    curve_class: str
    length: int
    word: tuple[str, ...]
    terminal: tuple[int, int]
    torus_lift: tuple[int, int]
    ecf_quotients: tuple[int, ...]
    ecf_trailing_one: bool

    def to_dict(self) -> dict:
        d = asdict(self)
        d["class"] = d.pop("curve_class")
        # Keep the documented field order stable.
        order = ("input", "kind", "multiplicity", "class", "length", "word",
                 "terminal", "torus_lift", "ecf_quotients", "ecf_trailing_one")
        return {k: list(d[k]) if isinstance(d[k], tuple) else d[k] for k in order}

    @classmethod
    def from_dict(cls, d: dict) -> "OutputRecord":
        return cls(
            input=tuple(d["input"]),
            kind=d["kind"],
            multiplicity=d["multiplicity"],
            curve_class=d["class"],
            length=d["length"],
            word=tuple(d["word"]),
            terminal=tuple(d["terminal"]),
            torus_lift=tuple(d["torus_lift"]),
            ecf_quotients=tuple(d["ecf_quotients"]),
            ecf_trailing_one=d["ecf_trailing_one"],
        )


def make_record(a: int, b: int) -> OutputRecord:
    """Assemble the classification record of an essential curve."""
    result = untwist((a, b))
    lift = dynnikov_to_torus((a, b))
    expansion = ecf_expand(*lift)
    return OutputRecord(
        input=(a, b),
        kind="essential",
        multiplicity=1,
        curve_class=classify((a, b)).value,
        length=conjugation_length((a, b)),
        word=tuple(g.value for g in result.word),
        terminal=tuple(result.terminal),
        torus_lift=tuple(lift),
        ecf_quotients=expansion.quotients,
        ecf_trailing_one=expansion.trailing_one,
    )


def _emit_json(payload: dict) -> None:
    print(json.dumps(payload))


def _parse_pair(args) -> tuple[int, int]:
    x, y = args.x, args.y
    if x == 0 and y == 0:
        raise SystemExit(EXIT_USAGE)
    return x, y


def _multicurve_payload(a: int, b: int):
    kind = curve_kind((a, b))
    return {
        "input": [a, b],
        "kind": kind.tag.value,
        "multiplicity": kind.multiplicity,
        "primitive_part": list(kind.primitive_part),
    }


def cmd_classify(args) -> int:
    a, b = _parse_pair(args)
    kind = curve_kind((a, b))
    if kind.tag is CurveTag.MULTICURVE:
        payload = _multicurve_payload(a, b)
        if args.json:
            _emit_json(payload)
        else:
            print(f"kind=multicurve multiplicity={kind.multiplicity} "
                  f"primitive_part=({kind.primitive_part.a},{kind.primitive_part.b})")
        return EXIT_NOT_ESSENTIAL
    record = make_record(a, b)
    if args.json:
        _emit_json(record.to_dict())
    else:
        print(f"class={record.curve_class} length={record.length} "
              f"word={' '.join(record.word) or '(empty)'}")
        print(f"terminal=({record.terminal[0]},{record.terminal[1]}) "
              f"torus_lift=({record.torus_lift[0]},{record.torus_lift[1]}) "
              f"ecf={list(record.ecf_quotients)}"
              f"{'+[1]' if record.ecf_trailing_one else ''}")
    return EXIT_OK


def cmd_untwist(args) -> int:
    a, b = _parse_pair(args)
    if curve_kind((a, b)).tag is CurveTag.MULTICURVE:
        payload = _multicurve_payload(a, b)
        if args.json:
            _emit_json(payload)
        else:
            print(f"kind=multicurve multiplicity={payload['multiplicity']}")
        return EXIT_NOT_ESSENTIAL
    result = untwist((a, b))
    payload = {
        "input": [a, b],
        "word": [g.value for g in result.word],
        "path": [[x, y] for x, y in result.path],
        "terminal": list(result.terminal),
        "class": classify((a, b)).value,
    }
    if args.json:
        _emit_json(payload)
    else:
        trail = " -> ".join(f"({x},{y})" for x, y in result.path)
        print(f"word={' '.join(payload['word']) or '(empty)'}")
        print(f"path={trail}")
    return EXIT_OK


def cmd_ecf(args) -> int:
    m, n = args.x, args.y
    if m == 0 and n == 0:
        return EXIT_USAGE
    try:
        expansion = ecf_expand(m, n)
    except ValueError:
        print(f"({m}, {n}) is not coprime", file=sys.stderr)
        return EXIT_NOT_ESSENTIAL
    payload = {
        "m": m,
        "n": n,
        "quotients": list(expansion.quotients),
        "trailing_one": expansion.trailing_one,
        "terminal": list(expansion.terminal),
        "epsilon": expansion.epsilon,
        "length": expansion.length,
    }
    if args.json:
        _emit_json(payload)
    else:
        tail = " + [1]" if expansion.trailing_one else ""
        print(f"quotients={payload['quotients']}{tail} terminal="
              f"({expansion.terminal.p},{expansion.terminal.q}) length={expansion.length}")
    return EXIT_OK


def cmd_transform(args) -> int:
    x, y = _parse_pair(args)
    if args.direction == "pq2ab":
        out = torus_to_dynnikov((x, y))
        payload = {"direction": "pq2ab", "input": [x, y], "output": [out.a, out.b]}
    else:
        out = dynnikov_to_torus((x, y))
        payload = {"direction": "ab2pq", "input": [x, y], "output": [out.p, out.q],
                   "sign_ambiguous": True}
    if args.json:
        _emit_json(payload)
    else:
        pm = "±" if args.direction == "ab2pq" else ""
        print(f"({x},{y}) -> {pm}({out[0]},{out[1]})")
    return EXIT_OK


def _track_svg(points) -> str:
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    pad = 1
    lo_x, hi_x = min(xs) - pad, max(xs) + pad
    lo_y, hi_y = min(ys) - pad, max(ys) + pad
    scale = 20
    width = (hi_x - lo_x) * scale
    height = (hi_y - lo_y) * scale

    def sx(x):
        return (x - lo_x) * scale

    def sy(y):
        return (hi_y - y) * scale  # flip: positive b axis points up

    poly = " ".join(f"{sx(x)},{sy(y)}" for x, y in points)
    dots = "".join(f'<circle cx="{sx(x)}" cy="{sy(y)}" r="3" fill="black"/>'
                   for x, y in points)
    axes = (f'<line x1="{sx(lo_x)}" y1="{sy(0)}" x2="{sx(hi_x)}" y2="{sy(0)}" '
            f'stroke="#bbbbbb"/>'
            f'<line x1="{sx(0)}" y1="{sy(lo_y)}" x2="{sx(0)}" y2="{sy(hi_y)}" '
            f'stroke="#bbbbbb"/>')
    return (f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {width} {height}" '
            f'width="{width}" height="{height}">{axes}'
            f'<polyline points="{poly}" fill="none" stroke="#d95f02" stroke-width="2"/>'
            f"{dots}</svg>\n")


def cmd_track(args) -> int:
    if args.n < 1 or args.window < args.n:
        return EXIT_USAGE
    family = TrackFamily(args.family)
    anchor = (args.n, 0)  # the track of index n passes through (n, 0)
    track = track_of(anchor, family, args.window)
    if args.svg:
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(_track_svg(track.points))
    if args.json:
        _emit_json({"family": family.value, "index": track.index,
                    "window": args.window, "points": [[x, y] for x, y in track.points]})
    else:
        print("a,b")
        for x, y in track.points:
            print(f"{x},{y}")
    return EXIT_OK


def cmd_distance(args) -> int:
    a, b = _parse_pair(args)
    if curve_kind((a, b)).tag is CurveTag.MULTICURVE:
        return EXIT_NOT_ESSENTIAL
    spec = CayleySpec(Plane.DYNNIKOV, args.depth, DYNNIKOV_SEEDS)
    dist = bfs_distances(spec).distance((a, b))
    formula = conjugation_length((a, b))
    if dist is None:
        print(f"not reached within depth {args.depth} (expansion length {formula}); "
              f"raise --depth", file=sys.stderr)
        return EXIT_RESOURCE
    payload = {"input": [a, b], "bfs_distance": dist, "formula_length": formula,
               "agree": dist == formula}
    if args.json:
        _emit_json(payload)
    else:
        print(f"bfs_distance={dist} formula_length={formula} agree={dist == formula}")
    return EXIT_OK


_CLASS_COLORS = {
    "c": "#1b9e77", "d": "#d95f02", "e": "#7570b3",
    "even-p, q%4=1": "#1b9e77", "even-p, q%4=3": "#66c2a5",
    "even-q, p%4=1": "#d95f02", "even-q, p%4=3": "#fc8d62",
    "odd-odd": "#7570b3",
}


def cmd_graph(args) -> int:
    if args.depth < 0:
        return EXIT_USAGE
    plane = Plane(args.plane)
    seeds = TORUS_SEEDS if plane is Plane.TORUS else DYNNIKOV_SEEDS
    dist_map = bfs_distances(CayleySpec(plane, args.depth, seeds))
    if plane is Plane.TORUS:
        from .oracle import _gens_for
        label_of = torus_orbit_label
        gen_names = ("U2", "L2")
    else:
        from .oracle import _gens_for
        label_of = lambda v: classify(v).value  # noqa: E731
        gen_names = ("tc", "td")
    vertices = sorted(v for v, _ in dist_map.items())
    seed_set = set(seeds)
    lines = [f"graph {plane.value} {{", "  node [shape=circle, style=filled];"]
    for v in vertices:
        color = _CLASS_COLORS[label_of(v)]
        shape = ', shape=doublecircle' if v in seed_set else ""
        lines.append(f'  "{v[0]},{v[1]}" [fillcolor="{color}", '
                     f'dist={dist_map.distance(v)}{shape}];')
    emitted = set()
    for v in vertices:
        for gen_class, fn in _gens_for(plane):
            w = fn(*v)
            if w == v or dist_map.distance(w) is None:
                continue
            eid = (min(v, w), max(v, w), gen_class)
            if eid in emitted:
                continue
            emitted.add(eid)
            lines.append(f'  "{v[0]},{v[1]}" -- "{w[0]},{w[1]}" '
                         f'[label={gen_names[gen_class]}];')
    lines.append("}")
    print("\n".join(lines))
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.bound < 1 or args.depth < 1:
        return EXIT_USAGE
    try:
        report = run_verification(args.bound, args.depth)
    except MemoryError:
        print("out of memory: lower --depth", file=sys.stderr)
        return EXIT_RESOURCE
    if args.json:
        _emit_json({
            "bound": report.bound,
            "depth": report.depth_limit,
            "passed": report.passed,
            "checks": [{"name": c.name, "checked": c.checked, "passed": c.passed,
                        "detail": c.detail} for c in report.checks],
        })
    else:
        for check in report.checks:
            print(check.line())
        print(f"verify: {'all checks passed' if report.passed else 'FAILED'}")
    return EXIT_OK if report.passed else EXIT_VERIFY_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dyntwist",
        description="Exact twist dynamics and conjugacy classification on the "
                    "3-marked disk in Dynnikov coordinates.",
        epilog="Words are printed in application order (first letter acts "
               "first); as group elements they compose right to left. "
               "Exit codes: 0 ok, 2 usage, 3 not essential, 4 verification "
               "failure, 5 resource limit.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def pair_command(name, help_, names=("a", "b")):
        p = sub.add_parser(name, help=help_)
        p.add_argument("x", metavar=names[0], type=int)
        p.add_argument("y", metavar=names[1], type=int)
        p.add_argument("--json", action="store_true")
        return p

    p = pair_command("classify", "conjugacy class, length, word, lift, expansion")
    p.set_defaults(func=cmd_classify)
    p = pair_command("untwist", "untwisting word and full trajectory")
    p.set_defaults(func=cmd_untwist)
    p = pair_command("ecf", "even continued fraction of a coprime pair", names=("m", "n"))
    p.set_defaults(func=cmd_ecf)

    p = sub.add_parser("transform", help="change between torus and Dynnikov charts")
    p.add_argument("direction", choices=("pq2ab", "ab2pq"))
    p.add_argument("x", type=int)
    p.add_argument("y", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("track", help="emit one orbit track as CSV (or SVG)")
    p.add_argument("family", choices=("c", "d"))
    p.add_argument("n", type=int, help="track index (track passes through (n, 0))")
    p.add_argument("window", type=int, help="max coordinate magnitude to enumerate")
    p.add_argument("--svg", metavar="PATH", help="also write an SVG polyline")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_track)

    p = pair_command("distance", "Cayley-graph distance to the reference curves")
    p.add_argument("--depth", type=int, default=12)
    p.set_defaults(func=cmd_distance)

    p = sub.add_parser("graph", help="emit a search ball as a DOT graph")
    p.add_argument("plane", choices=("dynnikov", "torus"))
    p.add_argument("depth", type=int)
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("verify", help="run the full oracle cross-validation")
    p.add_argument("--bound", type=int, default=30)
    p.add_argument("--depth", type=int, default=12)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SystemExit as exc:  # raised by _parse_pair for (0, 0) inputs
        code = exc.code if isinstance(exc.code, int) else EXIT_USAGE
        return code


if __name__ == "__main__":
    sys.exit(main())
