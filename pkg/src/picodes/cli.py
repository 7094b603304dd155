"""Command line front end.

Subcommands: generate, verify, overlap, count, audit, repro-counterexample.
Exit codes: 0 when the requested property holds (or the command succeeded),
1 when it fails (a witness is printed), 2 for usage and input errors, 3 when
a work limit would be exceeded.
"""

from __future__ import annotations

import argparse
import sys

from .counting import CountReport, audit_bounds
from .errors import Error, NotNonOverlapping, WorkLimitExceeded
from .families import (
    DEFAULT_MEMBER_LIMIT,
    FamilySpec,
    count_family,
    enumerate_family,
    gen_I,
    gen_L,
    in_X,
    m_violations,
    parse_family_spec,
    y_violations,
)
from .overlaps import find_overlaps, properly_overlap
from .pictures import Picture, format_picture, format_picture_set, parse_picture_set
from .verify import (
    DEFAULT_CANDIDATE_LIMIT,
    check_corner_lemma,
    check_frame_necessity,
    verify_frame_complete,
    verify_membership,
    verify_neno_layered,
    verify_neno_naive,
    verify_non_overlapping,
    verify_unbordered,
)
from .words import BINARY, Alphabet, SuffixMode, gen_S1, gen_S2, gen_S3, gen_S4

EXIT_HOLDS = 0
EXIT_FAILS = 1
EXIT_USAGE = 2
EXIT_WORK_LIMIT = 3

COUNTEREXAMPLE_5X5 = Picture(("11111", "10111", "01010", "01001", "01010"))


def _read_pictures(path: str) -> list[Picture]:
    with open(path, encoding="utf-8") as fh:
        return parse_picture_set(fh.read())


def _infer_alphabet(pictures: list[Picture]) -> Alphabet:
    seen = {ch for p in pictures for row in p.rows for ch in row}
    if seen <= {"0", "1"}:
        return BINARY
    return Alphabet(tuple(sorted(seen)))


def cmd_generate(args: argparse.Namespace) -> int:
    spec = parse_family_spec(args.family, SuffixMode(args.suffix))
    limit = args.work_limit if args.work_limit else DEFAULT_MEMBER_LIMIT
    members = list(enumerate_family(spec, limit))
    body = format_picture_set(members) if members else ""
    text = body + f"# count={len(members)}\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(len(members))
    else:
        sys.stdout.write(text)
    return EXIT_HOLDS


def cmd_verify(args: argparse.Namespace) -> int:
    pictures = _read_pictures(args.file)
    alphabet = _infer_alphabet(pictures)
    mode = SuffixMode(args.suffix)
    prop = args.property
    member_limit = args.work_limit if args.work_limit else DEFAULT_MEMBER_LIMIT
    candidate_limit = args.work_limit if args.work_limit else DEFAULT_CANDIDATE_LIMIT
    if prop == "non-overlapping":
        rep = verify_non_overlapping(pictures, alphabet, work_limit=member_limit)
    elif prop == "neno-naive":
        rep = verify_neno_naive(pictures, alphabet, m=args.m, n=args.n,
                                workers=args.workers, work_limit=candidate_limit)
    elif prop == "neno-layered":
        if not args.against:
            raise ValueError("neno-layered needs --against X:m=..,n=..")
        xspec = parse_family_spec(args.against, mode)
        if xspec.family != "X":
            raise ValueError("--against must name the X family")
        xs = list(enumerate_family(xspec, member_limit))
        rep = verify_neno_layered(pictures, xs,
                                  gen_S1(xspec.n), gen_S2(xspec.n),
                                  gen_S3(xspec.m), gen_S4(xspec.m, xspec.mode),
                                  work_limit=member_limit)
    elif prop == "frame-complete":
        rep = verify_frame_complete(pictures, alphabet, work_limit=candidate_limit)
    elif prop == "corner-lemma":
        rep = check_corner_lemma(pictures, alphabet)
    elif prop == "frame-necessity":
        rep = check_frame_necessity(pictures, alphabet)
    elif prop == "unbordered":
        rep = verify_unbordered(pictures, alphabet)
    elif prop.startswith("member:"):
        spec = parse_family_spec(prop[len("member:"):], mode)
        rep = verify_membership(pictures, spec)
    else:
        raise ValueError(f"unknown property {prop!r}")
    print(rep.to_text())
    return EXIT_HOLDS if rep.holds else EXIT_FAILS


def cmd_overlap(args: argparse.Namespace) -> int:
    first = _read_pictures(args.first)
    second = _read_pictures(args.second)
    if len(first) != 1 or len(second) != 1:
        raise ValueError("overlap compares exactly one picture per file")
    witnesses = find_overlaps(first[0], second[0])
    if not witnesses:
        print("none")
        return EXIT_FAILS
    for w in witnesses:
        print(w.to_text())
    return EXIT_HOLDS


def cmd_count(args: argparse.Namespace) -> int:
    mode = SuffixMode(args.suffix)
    limit = args.work_limit if args.work_limit else DEFAULT_MEMBER_LIMIT
    for family in ("X", "Y", "Z", "M"):
        c = count_family(FamilySpec(family, args.m, args.n, mode), limit)
        print(CountReport(family, args.m, args.n, None, c).to_text())
    print(CountReport("I", args.m, args.n, None, len(gen_I(args.m, mode))).to_text())
    print(CountReport("L", args.m, args.n, None, len(gen_L(args.m, mode))).to_text())
    return EXIT_HOLDS


def cmd_audit(args: argparse.Namespace) -> int:
    limit = args.work_limit if args.work_limit else DEFAULT_MEMBER_LIMIT
    audit = audit_bounds(args.m, args.n, SuffixMode(args.suffix), limit)
    print(audit.to_text())
    return EXIT_HOLDS


def cmd_repro_counterexample(args: argparse.Namespace) -> int:
    p = COUNTEREXAMPLE_5X5
    print(format_picture(p))
    print()
    ok_x = in_X(p)
    print(f"in_X={str(ok_x).lower()}")
    mv = m_violations(p)
    line = f"in_M={str(not mv).lower()}"
    if mv:
        line += f" ({mv[0].to_text()})"
    print(line)
    yv = y_violations(p)
    line = f"in_Y={str(not yv).lower()}"
    if yv:
        line += f" ({yv[0].to_text()})"
    print(line)
    limit = args.work_limit if args.work_limit else DEFAULT_MEMBER_LIMIT
    members = list(enumerate_family(FamilySpec("X", 5, 5), limit))
    hit = None
    for q in members:
        ok, w = properly_overlap(p, q)
        if ok:
            hit = (q, w)
            break
    ok_free = hit is None
    print(f"overlap-free against {len(members)} members of X(5,5): "
          f"{str(ok_free).lower()}")
    if hit is not None:
        print()
        print(format_picture(hit[0]))
        print()
        print(f"first overlapping member, witness {hit[1].to_text()}")
    reproduced = ok_x and bool(mv) and not yv and ok_free
    print(f"verdict: {'reproduced' if reproduced else 'not reproduced'}")
    return EXIT_HOLDS if reproduced else EXIT_FAILS


def _add_common(sub: argparse.ArgumentParser):
    sub.add_argument("--suffix", choices=["any", "proper"], default="any",
                     help="suffix reading for specs that leave it out")
    sub.add_argument("--work-limit", type=int, default=0, metavar="N",
                     help="candidate budget; 0 keeps the per-command default")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="picodes",
        description="Build and verify non-overlapping sets of binary pictures.")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("generate", help="enumerate a family into picture-set text")
    p.add_argument("family", help="family spec, e.g. Y:m=4,n=6 or Z:m=4,n=4,suffix=proper")
    p.add_argument("-o", "--output", help="write the set here and print only the count")
    _add_common(p)
    p.set_defaults(func=cmd_generate)

    p = subs.add_parser("verify", help="check a property of a picture-set file")
    p.add_argument("property",
                   help="non-overlapping, neno-naive, neno-layered, frame-complete, "
                        "corner-lemma, frame-necessity, unbordered, or member:<spec>")
    p.add_argument("file", help="picture-set file")
    p.add_argument("--against", help="X family spec for neno-layered")
    p.add_argument("-m", type=int, help="rows, for properties run on an empty set")
    p.add_argument("-n", type=int, help="columns, for properties run on an empty set")
    p.add_argument("--workers", type=int, default=1,
                   help="processes for the naive space scan")
    _add_common(p)
    p.set_defaults(func=cmd_verify)

    p = subs.add_parser("overlap", help="list all overlap witnesses of two pictures")
    p.add_argument("first", help="file holding one picture")
    p.add_argument("second", help="file holding one picture")
    p.set_defaults(func=cmd_overlap)

    p = subs.add_parser("count", help="member counts of all families at one size")
    p.add_argument("m", type=int, help="rows")
    p.add_argument("n", type=int, help="columns")
    _add_common(p)
    p.set_defaults(func=cmd_count)

    p = subs.add_parser("audit", help="closed forms against enumeration, plus bound chain")
    p.add_argument("m", type=int, help="rows")
    p.add_argument("n", type=int, help="columns")
    _add_common(p)
    p.set_defaults(func=cmd_audit)

    p = subs.add_parser("repro-counterexample",
                        help="rerun the recorded 5x5 membership and overlap claims")
    _add_common(p)
    p.set_defaults(func=cmd_repro_counterexample)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_HOLDS
    try:
        return args.func(args)
    except WorkLimitExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_WORK_LIMIT
    except NotNonOverlapping as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILS
    except (Error, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
