"""Command-line interface.

Subcommands::

    validate <file>                       exit 0 iff the portrait is valid
    build <file> [--svg P] [--report P] [--json P]
                                          construct, check, round-trip
    roundtrip <file>                      print the recovered portrait
    enumerate --degree D --max-period P [--max-cardinality N] [--portraits]

Exit status: 0 pass, 1 validation or check failure, 2 parse/usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .angles import format_angle
from .builder import construct_tree
from .errors import PortraitParseError, PortraitsError
from .fileio import format_portrait, parse_portrait
from .portrait import enumerate_portraits, validate_portrait
from .recovery import recover_portrait
from .render import render_svg
from .report import analyze, render_report, report_data
from .rotation import deployment_vector, enumerate_rotation_sets


def _read_portrait(path: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        print(f"error: cannot read {path}: {exc}", file=sys.stderr)
        raise SystemExit(2)
    try:
        return parse_portrait(text)
    except PortraitParseError as exc:
        print(f"error: {path}: {exc}", file=sys.stderr)
        raise SystemExit(2)


def _cmd_validate(args) -> int:
    p = _read_portrait(args.file)
    result = validate_portrait(p)
    if result.ok:
        print("ok")
        return 0
    for v in result.violations:
        print(f"{v.code}: {v.message}")
    for note in result.notes:
        print(f"note: {note}")
    return 1


def _cmd_build(args) -> int:
    p = _read_portrait(args.file)
    result = validate_portrait(p)
    if not result.ok:
        for v in result.violations:
            print(f"{v.code}: {v.message}")
        return 1
    try:
        an = analyze(p)
    except PortraitsError as exc:
        print(f"construction failed: {exc}", file=sys.stderr)
        return 1
    text = render_report(an)
    if args.report:
        Path(args.report).write_text(text, encoding="utf-8")
    else:
        print(text, end="")
    if args.json:
        Path(args.json).write_text(
            json.dumps(report_data(an), indent=2) + "\n", encoding="utf-8")
    if args.svg:
        Path(args.svg).write_text(render_svg(an.ct, an.regions), encoding="utf-8")
    return 0 if an.all_ok else 1


def _cmd_roundtrip(args) -> int:
    p = _read_portrait(args.file)
    result = validate_portrait(p)
    if not result.ok:
        for v in result.violations:
            print(f"{v.code}: {v.message}")
        return 1
    try:
        recovered = recover_portrait(construct_tree(p))
    except PortraitsError as exc:
        print(f"recovery failed: {exc}", file=sys.stderr)
        return 1
    print(format_portrait(recovered), end="")
    return 0 if recovered == p else 1


def _cmd_enumerate(args) -> int:
    degree, period = args.degree, args.max_period
    if args.portraits:
        portraits = enumerate_portraits(degree, period)
        for i, p in enumerate(portraits, start=1):
            print(f"# portrait {i}")
            print(format_portrait(p))
        print(f"# total: {len(portraits)} portraits")
        return 0
    max_card = args.max_cardinality or (degree - 1) * period
    sets = enumerate_rotation_sets(degree, max_card, period)
    for rs in sets:
        angles = " ".join(format_angle(a) for a in rs.angles)
        dep = ",".join(str(c) for c in deployment_vector(rs))
        print(f"n={rs.cardinality} m={rs.shift} deployment={dep} angles {angles}")
    print(f"# total: {len(sets)} rotation sets")
    return 0


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="portraits",
        description="Validate fixed point portraits, build their invariant "
                    "trees, and certify the recovery round trip.")
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("validate", help="check the portrait conditions")
    v.add_argument("file")
    v.set_defaults(func=_cmd_validate)

    b = sub.add_parser("build", help="construct the tree, run every check")
    b.add_argument("file")
    b.add_argument("--svg", metavar="PATH", help="write an SVG diagram")
    b.add_argument("--report", metavar="PATH", help="write the text report")
    b.add_argument("--json", metavar="PATH", help="write the report as JSON")
    b.set_defaults(func=_cmd_build)

    r = sub.add_parser("roundtrip", help="print the portrait recovered from the tree")
    r.add_argument("file")
    r.set_defaults(func=_cmd_roundtrip)

    e = sub.add_parser("enumerate", help="list rotation sets or valid portraits")
    e.add_argument("--degree", type=int, required=True)
    e.add_argument("--max-period", type=int, required=True)
    e.add_argument("--max-cardinality", type=int, default=None)
    e.add_argument("--portraits", action="store_true",
                   help="assemble and list every valid portrait instead")
    e.set_defaults(func=_cmd_enumerate)

    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except PortraitsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
