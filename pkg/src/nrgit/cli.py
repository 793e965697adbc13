"""Command-line front end.

Subcommands: classify (status of one configuration), weights (fixed-point
weight table), walls (wall-and-chamber report), flips (interior-wall flip
data), census (closed-form vs brute-force verification; exit 3 on any
disagreement), diagram (SVG weight diagram at a concrete display value of N).

Reports are deterministic: identical flags yield byte-identical output, all
numbers are exact rationals printed as p/q, symbolic values as aN+b.  Exit
codes: 0 success, 2 usage error, 3 census disagreement, 4 internal invariant
violation.  NRGIT_MAX_CENSUS_N overrides the census size guard.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import xml.etree.ElementTree as ET
from fractions import Fraction

from .binary_forms import (
    Divisor,
    LinParam,
    classify_borel,
    classify_sl2,
    classify_unipotent,
)
from .envelope import (
    EnvParams,
    embed_divisor,
    fixed_point_weights,
    group_status,
    strong_envelope_report,
    torus_case_status,
    unipotent_status,
)
from .oracle import DEFAULT_MAX_CENSUS_N, diff_report
from .vgit import WallKind, chamber_profile, flip_data, walls


def _census_guard() -> int:
    raw = os.environ.get("NRGIT_MAX_CENSUS_N")
    if raw is None:
        return DEFAULT_MAX_CENSUS_N
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"NRGIT_MAX_CENSUS_N must be an integer, got {raw!r}")


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"expected a rational p/q, got {text!r}")


def parse_profile(text: str, n: int) -> Divisor:
    """Parse `inf=<k>,zero=<k>,roots=<k1+k2+...>`; omitted fields are 0/empty."""
    fields = {"inf": 0, "zero": 0}
    roots: tuple[int, ...] = ()
    for chunk in (text or "").split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        key, eq, val = chunk.partition("=")
        key = key.strip()
        if not eq:
            raise ValueError(f"malformed profile field {chunk!r}")
        if key == "roots":
            try:
                roots = tuple(int(x) for x in val.split("+") if x.strip())
            except ValueError:
                raise ValueError(f"malformed roots list {val!r}")
        elif key in fields:
            try:
                fields[key] = int(val)
            except ValueError:
                raise ValueError(f"malformed multiplicity {chunk!r}")
        else:
            raise ValueError(f"unknown profile field {key!r}")
    return Divisor(n, fields["inf"], fields["zero"], roots)


def _flatten(prefix: str, value, lines: list[str]):
    if isinstance(value, dict):
        for k in value:
            _flatten(f"{prefix}.{k}" if prefix else str(k), value[k], lines)
    elif isinstance(value, (list, tuple)):
        if all(not isinstance(v, (dict, list, tuple)) for v in value):
            lines.append(f"{prefix}: [{', '.join(str(v) for v in value)}]")
        else:
            for i, v in enumerate(value):
                _flatten(f"{prefix}[{i}]", v, lines)
    else:
        lines.append(f"{prefix}: {value}")


def emit_report(command: str, inputs: dict, result: dict, notes: list[str], fmt: str) -> str:
    report = {
        "command": command,
        "inputs": inputs,
        "result": result,
        "notes": notes,
    }
    if fmt == "json":
        return json.dumps(report, indent=2, sort_keys=True) + "\n"
    lines = [f"command: {command}"]
    _flatten("inputs", inputs, lines)
    _flatten("result", result, lines)
    for note in notes:
        lines.append(f"note: {note}")
    return "\n".join(lines) + "\n"


def cmd_classify(args) -> int:
    d = parse_profile(args.profile, args.n)
    lin = LinParam(args.m, args.r)
    params = EnvParams(args.n, lin)
    p = embed_divisor(d)
    tau = lin.tau
    result = {
        "status_h": classify_borel(d, lin).label,
        "status_sl2": classify_sl2(d).label,
        "status_u": classify_unipotent(d).label,
        "thresholds": {
            "inf_bound": str(Fraction(args.n - tau, 2)),
            "other_bound": str(Fraction(args.n + tau, 2)),
        },
        "envelope": {
            "group": group_status(p, params).label,
            "torus": torus_case_status(p, params).label,
            "unipotent": unipotent_status(p, args.n).label,
        },
    }
    notes = [
        "semistable needs multiplicity at [1:0] at most (n-tau)/2 and every "
        "other root multiplicity at most (n+tau)/2; stable needs both strict",
        "status_u encodes the unipotent pair: Stable = fewer than n/2 "
        "coincide, StrictlySemistable = exactly n/2",
    ]
    sys.stdout.write(
        emit_report(
            "classify",
            {"n": args.n, "m": args.m, "r": args.r, "profile": str(d)},
            result,
            notes,
            args.format,
        )
    )
    return 0


def cmd_weights(args) -> int:
    lin = LinParam(args.m, args.r)
    rows = [
        {"point": label, "i": i, "weight": f"({w.x}, {w.y})"}
        for label, i, w in fixed_point_weights(EnvParams(args.n, lin))
    ]
    notes = [
        "rows list the rank-2 torus weights of the fixed points "
        "([e_j], [x^(n-i) y^i]) for i = 0..n",
    ]
    sys.stdout.write(
        emit_report(
            "weights",
            {"n": args.n, "m": args.m, "r": args.r},
            {"rows": rows},
            notes,
            args.format,
        )
    )
    return 0


def _profile_payload(profile) -> dict:
    return {
        "kind": profile.quotient_kind.value,
        "dimension": profile.dimension,
        "ss_equals_s": profile.ss_equals_s,
        "note": profile.note,
    }


def cmd_walls(args) -> int:
    segments = []
    for seg in walls(args.n):
        if seg.kind is WallKind.CHAMBER:
            lo, hi = seg.value
            mid = (lo + hi) / 2
            segments.append(
                {
                    "kind": seg.kind.value,
                    "interval": [str(lo), str(hi)],
                    "profile": _profile_payload(chamber_profile(args.n, mid)),
                }
            )
        else:
            segments.append(
                {
                    "kind": seg.kind.value,
                    "value": str(seg.value),
                    "profile": _profile_payload(chamber_profile(args.n, seg.value)),
                }
            )
    notes = [
        "walls sit at tau = 0, tau = n, and the interior slopes with "
        "n - tau even; classification is constant on each open chamber",
    ]
    sys.stdout.write(
        emit_report("walls", {"n": args.n}, {"walls": segments}, notes, args.format)
    )
    return 0


def cmd_flips(args) -> int:
    tau = _parse_fraction(args.tau)
    data = flip_data(args.n, tau)
    result = {
        "flip": {
            "s": data.s,
            "e_plus": list(data.e_plus_weights),
            "e_minus": list(data.e_minus_weights),
            "slice": list(data.slice_weights),
        }
    }
    notes = [
        "crossing the wall contracts the weighted projective space with the "
        "e_minus weights and extracts the one with the e_plus weights; the "
        "slice carries the listed torus weights",
    ]
    sys.stdout.write(
        emit_report(
            "flips", {"n": args.n, "tau": str(tau)}, result, notes, args.format
        )
    )
    return 0


def cmd_census(args) -> int:
    lin = LinParam(args.m, args.r)
    guard = _census_guard()
    envelope = strong_envelope_report(args.n, lin)
    diffs = diff_report(args.n, lin, max_n=guard)
    result = {
        "census_diff": [
            {
                "check": row.check,
                "subject": row.subject,
                "expected": row.expected,
                "got": row.got,
            }
            for row in diffs.rows
        ],
        "checks_run": diffs.checked,
        "envelope": {
            "counts_intrinsic": list(envelope.counts_intrinsic),
            "counts_envelope": list(envelope.counts_envelope),
            "stable_equal": envelope.stable_equal,
            "semistable_equal": envelope.semistable_equal,
            "chain_ok": envelope.chain_ok,
            "violations": list(envelope.violations),
        },
    }
    notes = [
        "counts are (stable, strictly semistable, unstable) over the full "
        "profile census; census_diff lists closed-form vs brute-force "
        "disagreements and must be empty",
    ]
    sys.stdout.write(
        emit_report(
            "census",
            {"n": args.n, "m": args.m, "r": args.r},
            result,
            notes,
            args.format,
        )
    )
    if diffs.rows or not envelope.ok:
        return 3
    return 0


def _diagram_svg(n: int, m: int, r: int, n_display: Fraction) -> str:
    params = EnvParams(n, LinParam(m, r))
    families: dict[str, list[tuple[float, float]]] = {}
    for label, _, w in fixed_point_weights(params):
        families.setdefault(label, []).append(
            (float(w.x.eval_at(n_display)), float(w.y.eval_at(n_display)))
        )
    xs = [x for pts in families.values() for x, _ in pts]
    ys = [y for pts in families.values() for _, y in pts]
    lo_x, hi_x = min(xs + [0.0]) - 2, max(xs + [0.0]) + 2
    lo_y, hi_y = min(ys + [0.0]) - 2, max(ys + [0.0]) + 2
    scale = 20.0
    width = (hi_x - lo_x) * scale
    height = (hi_y - lo_y) * scale

    def sx(x):
        return round((x - lo_x) * scale, 2)

    def sy(y):
        return round((hi_y - y) * scale, 2)

    svg = ET.Element(
        "svg",
        {
            "xmlns": "http://www.w3.org/2000/svg",
            "width": str(round(width, 2)),
            "height": str(round(height, 2)),
            "viewBox": f"0 0 {round(width, 2)} {round(height, 2)}",
        },
    )
    ET.SubElement(
        svg,
        "line",
        {
            "x1": str(sx(lo_x)),
            "y1": str(sy(0)),
            "x2": str(sx(hi_x)),
            "y2": str(sy(0)),
            "stroke": "#888",
            "stroke-width": "1",
        },
    )
    ET.SubElement(
        svg,
        "line",
        {
            "x1": str(sx(0)),
            "y1": str(sy(lo_y)),
            "x2": str(sx(0)),
            "y2": str(sy(hi_y)),
            "stroke": "#888",
            "stroke-width": "1",
        },
    )
    axis_x = ET.SubElement(
        svg,
        "text",
        {"x": str(sx(hi_x) - 80), "y": str(sy(0) - 6), "font-size": "12"},
    )
    axis_x.text = "T1-weight"
    axis_y = ET.SubElement(
        svg,
        "text",
        {"x": str(sx(0) + 6), "y": str(sy(hi_y) + 14), "font-size": "12"},
    )
    axis_y.text = "T2-weight"
    colors = {"[1:0:0]": "#1f6f43", "[0:1:0]": "#274fa8", "[0:0:1]": "#a03232"}
    for label in sorted(families):
        for x, y in families[label]:
            ET.SubElement(
                svg,
                "circle",
                {
                    "cx": str(sx(x)),
                    "cy": str(sy(y)),
                    "r": "4",
                    "fill": colors[label],
                },
            )
        lx, ly = families[label][0]
        tag = ET.SubElement(
            svg,
            "text",
            {
                "x": str(sx(lx) - 10),
                "y": str(sy(ly) + 18),
                "font-size": "11",
                "fill": colors[label],
            },
        )
        tag.text = label
    body = ET.tostring(svg, encoding="unicode")
    return '<?xml version="1.0" encoding="UTF-8"?>\n' + body + "\n"


def cmd_diagram(args) -> int:
    n_display = _parse_fraction(args.N)
    if n_display <= 0:
        raise ValueError(f"display value of N must be positive, got {n_display}")
    LinParam(args.m, args.r)
    svg = _diagram_svg(args.n, args.m, args.r, n_display)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(svg)
    else:
        sys.stdout.write(svg)
    return 0


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nrgit",
        description="Exact stability computations for n points on the "
        "projective line under the Borel subgroup of SL(2).",
    )
    sub = parser.add_subparsers(dest="cmd", required=True)

    def add_common(p, with_lin=True):
        p.add_argument("--n", type=_positive_int, required=True, help="degree")
        if with_lin:
            p.add_argument("--m", type=_positive_int, default=1, help="tensor power m > 0")
            p.add_argument("--r", type=int, default=0, help="twist r")
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("classify", help="classify one configuration")
    add_common(p)
    p.add_argument(
        "--profile",
        default="",
        help="configuration as inf=<k>,zero=<k>,roots=<k1+k2+...>",
    )
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("weights", help="fixed-point weight table")
    add_common(p)
    p.set_defaults(func=cmd_weights)

    p = sub.add_parser("walls", help="wall and chamber report")
    add_common(p, with_lin=False)
    p.set_defaults(func=cmd_walls)

    p = sub.add_parser("flips", help="flip data at an interior wall")
    add_common(p, with_lin=False)
    p.add_argument("--tau", required=True, help="interior wall slope (rational)")
    p.set_defaults(func=cmd_flips)

    p = sub.add_parser("census", help="verify closed forms against brute force")
    add_common(p)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("diagram", help="SVG weight diagram")
    add_common(p)
    p.add_argument("--N", default="10", help="display value for N (rendering only)")
    p.add_argument("--out", default=None, help="output path (default stdout)")
    p.set_defaults(func=cmd_diagram)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (AssertionError, RuntimeError) as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
