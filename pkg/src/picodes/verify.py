"""Property verification with explicit reports, witnesses and work accounting.

Every verifier returns a VerificationReport whose counters are logical sizes
of the candidate and pair spaces the property quantifies over, not operation
counts of whichever backend ran, so they are identical across kernels, chunk
sizes and worker counts. Binary sets of at most 64 cells run on the board
kernels; everything else takes a dictionary route over corner blocks. Where
a property admits two independent formulations, both are computed and any
disagreement raises instead of picking a side.
"""

from __future__ import annotations

import itertools
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import _kernels as kernels
from .errors import (
    DisjointnessViolated,
    Error,
    FrameIncompatible,
    MixedLengths,
    MixedSizes,
    NotNonOverlapping,
    WorkLimitExceeded,
    WrongSize,
)
from .families import DEFAULT_MEMBER_LIMIT, FamilySpec, family_violations
from .overlaps import find_overlaps, properly_overlap
from .pictures import (
    Picture,
    canonical_order,
    corner_prefix,
    corners_of,
    format_picture,
    frame_of,
    from_board,
    sort_key,
    to_board,
)
from .words import (
    BINARY,
    Alphabet,
    OverlapIndex,
    is_cross_non_overlapping,
    is_full_pair,
    overlap_lengths,
)

DEFAULT_CANDIDATE_LIMIT = 1 << 26
CHUNK = 1 << 18


@dataclass
class VerificationReport:
    """Verdict, witness and logical work counters for one property check."""

    property_id: str
    holds: bool
    strategy: str
    candidates: int
    pairs: int
    witness: object = None
    witness_lines: list[str] = field(default_factory=list)
    failed_tier: str | None = None
    wall_time: float = 0.0

    @property
    def verdict(self) -> str:
        return "holds" if self.holds else "fails"

    def to_text(self) -> str:
        lines = [
            f"property={self.property_id} verdict={self.verdict} "
            f"strategy={self.strategy} candidates={self.candidates} pairs={self.pairs}"
        ]
        if self.failed_tier is not None:
            lines.append(f"failed-tier={self.failed_tier}")
        lines.extend(self.witness_lines)
        return "\n".join(lines)


def _picture_lines(*pictures: Picture) -> list[str]:
    out: list[str] = []
    for p in pictures:
        if out:
            out.append("")
        out.extend(format_picture(p).split("\n"))
    return out


def _uniform_size(members) -> tuple[int, int]:
    sizes = {p.size for p in members}
    if len(sizes) != 1:
        raise MixedSizes(f"pictures of sizes {sorted(sizes)} mixed in one check")
    return sizes.pop()


def _use_boards(alphabet: Alphabet, m: int, n: int) -> bool:
    return alphabet.symbols == ("0", "1") and m * n <= 64


_OPPOSITE = {"tl": "br", "br": "tl", "tr": "bl", "bl": "tr"}


class _BlockTables:
    """Dictionary analog of the board kernel, for any alphabet or size."""

    def __init__(self, members, m: int, n: int, include_full: bool = True,
                 frame_only: bool = False):
        self.sizes = [
            (h, k)
            for h in range(1, m + 1)
            for k in range(1, n + 1)
            if (include_full or (h, k) != (m, n)) and (not frame_only or h == 1 or k == 1)
        ]
        self.tables = {
            (corner, h, k): {corner_prefix(q, _OPPOSITE[corner], h, k) for q in members}
            for corner in _OPPOSITE
            for h, k in self.sizes
        }

    def hits(self, p: Picture) -> bool:
        return any(
            corner_prefix(p, corner, h, k) in self.tables[corner, h, k]
            for corner in _OPPOSITE
            for h, k in self.sizes
        )


def verify_non_overlapping(pictures, alphabet: Alphabet = BINARY, *,
                           work_limit: int = DEFAULT_MEMBER_LIMIT) -> VerificationReport:
    """No two members, the same one twice included, properly overlap."""
    t0 = time.perf_counter()
    members = canonical_order(pictures, alphabet)
    count = len(members)
    if count > work_limit:
        raise WorkLimitExceeded(count, work_limit)
    holds, witness, lines = True, None, []
    if members:
        m, n = _uniform_size(members)
        if _use_boards(alphabet, m, n):
            boards = [to_board(p) for p in members]
            plan = kernels.build_plan(boards, m, n, include_full=False)
            hit = kernels.scan_boards(plan, np.asarray(boards, dtype=np.uint64))
            first = members[int(np.argmax(hit))] if bool(hit.any()) else None
        else:
            tables = _BlockTables(members, m, n, include_full=False)
            first = next((p for p in members if tables.hits(p)), None)
        if first is not None:
            for q in members:
                ok, w = properly_overlap(first, q)
                if ok:
                    holds, witness = False, (first, q, w)
                    lines = _picture_lines(first, q) + ["", w.to_text()]
                    break
    return VerificationReport("non-overlapping", holds, "naive", count, count * count,
                              witness, lines, wall_time=time.perf_counter() - t0)


_WORKER_PLAN = None


def _init_worker(plan):
    global _WORKER_PLAN
    _WORKER_PLAN = plan


def _scan_chunk(bounds: tuple[int, int]) -> int:
    return kernels.scan_range(_WORKER_PLAN, bounds[0], bounds[1])


def _scan_all(plan, space: int, workers: int) -> int:
    """Least surviving board in [0, space), or -1.

    The space is cut into fixed chunks and the first nonnegative chunk result
    wins, so the answer does not depend on the worker count.
    """
    bounds = [(lo, min(lo + CHUNK, space)) for lo in range(0, space, CHUNK)]
    if workers <= 1:
        for lo, hi in bounds:
            found = kernels.scan_range(plan, lo, hi)
            if found >= 0:
                return found
        return -1
    with ProcessPoolExecutor(max_workers=workers, initializer=_init_worker,
                             initargs=(plan,)) as pool:
        for found in pool.map(_scan_chunk, bounds):
            if found >= 0:
                pool.shutdown(wait=True, cancel_futures=True)
                return found
    return -1


def verify_neno_naive(pictures, alphabet: Alphabet = BINARY, m: int | None = None,
                      n: int | None = None, *, workers: int = 1,
                      work_limit: int = DEFAULT_CANDIDATE_LIMIT) -> VerificationReport:
    """Every picture of the common size overlaps some member: the whole
    q^(mn) space is scanned and any survivor is a counterexample.

    The set itself must be non-overlapping first; members never survive
    because each matches itself on the full-size probe.
    """
    t0 = time.perf_counter()
    members = canonical_order(pictures, alphabet)
    if members:
        size = _uniform_size(members)
        if (m is not None and m != size[0]) or (n is not None and n != size[1]):
            raise WrongSize(f"set holds {size[0]}x{size[1]} pictures, not {m}x{n}")
        m, n = size
    if m is None or n is None:
        raise ValueError("an empty set needs explicit sizes m and n")
    space = alphabet.size ** (m * n)
    if space > work_limit:
        raise WorkLimitExceeded(space, work_limit)
    pre = verify_non_overlapping(members, alphabet, work_limit=work_limit)
    if not pre.holds:
        raise NotNonOverlapping("the set overlaps itself, so maximality does not apply")
    if _use_boards(alphabet, m, n):
        plan = kernels.build_plan([to_board(p) for p in members], m, n, include_full=True)
        found = _scan_all(plan, space, workers)
        survivor = from_board(found, m, n) if found >= 0 else None
    else:
        tables = _BlockTables(members, m, n, include_full=True)
        survivor = None
        for tup in itertools.product(alphabet.symbols, repeat=m * n):
            cand = Picture(tuple("".join(tup[r * n:(r + 1) * n]) for r in range(m)))
            if not tables.hits(cand):
                survivor = cand
                break
    holds = survivor is None
    lines = [] if holds else _picture_lines(survivor)
    return VerificationReport("neno-naive", holds, "naive", space, space * len(members),
                              None if holds else (survivor,), lines,
                              wall_time=time.perf_counter() - t0)


class _FrameProbes:
    """Overlap indexes over the four frame word sets of a picture set."""

    def __init__(self, frames):
        self.r_f = OverlapIndex({f[0] for f in frames})
        self.r_l = OverlapIndex({f[1] for f in frames})
        self.c_f = OverlapIndex({f[2] for f in frames})
        self.c_l = OverlapIndex({f[3] for f in frames})

    def hits(self, frame) -> bool:
        return (self.r_l.overlaps(frame[0]) or self.r_f.overlaps(frame[1])
                or self.c_l.overlaps(frame[2]) or self.c_f.overlaps(frame[3]))


def _frames_overlap(fp, fq) -> bool:
    """Word form of a frame overlap between two pictures: a thickness-one
    block shared by p and q is exactly a word overlap between the first row
    of one and the last row of the other, or first and last columns."""
    return bool(overlap_lengths(fp[0], fq[1]) or overlap_lengths(fp[1], fq[0])
                or overlap_lengths(fp[2], fq[3]) or overlap_lengths(fp[3], fq[2]))


def _all_frames(m: int, n: int, alphabet: Alphabet):
    rows = ["".join(t) for t in itertools.product(alphabet.symbols, repeat=n)]
    mids = ["".join(t) for t in itertools.product(alphabet.symbols, repeat=m - 2)]
    for r_f, r_l, mid_f, mid_l in itertools.product(rows, rows, mids, mids):
        yield (r_f, r_l, r_f[0] + mid_f + r_l[0], r_f[-1] + mid_l + r_l[-1])


def _frame_picture(frame, flat, m: int, n: int) -> Picture:
    r_f, r_l, c_f, c_l = frame
    k = n - 2
    rows = [r_f]
    for i in range(m - 2):
        rows.append(c_f[i + 1] + "".join(flat[i * k:(i + 1) * k]) + c_l[i + 1])
    rows.append(r_l)
    return Picture(tuple(rows))


def _least_nonmember(frame, member_set, m: int, n: int, alphabet: Alphabet) -> Picture:
    for flat in itertools.product(alphabet.symbols, repeat=(m - 2) * (n - 2)):
        cand = _frame_picture(frame, flat, m, n)
        if cand not in member_set:
            return cand
    raise Error("internal: frame marked incomplete but fully populated")


def _survivor_not_in(plan, space: int, member_boards: np.ndarray) -> int:
    for lo in range(0, space, CHUNK):
        boards = np.arange(lo, min(lo + CHUNK, space), dtype=np.uint64)
        hit = kernels.scan_boards(plan, boards)
        survivors = boards[~hit]
        survivors = survivors[~np.isin(survivors, member_boards)]
        if survivors.size:
            return int(survivors[0])
    return -1


def _check_frame_routes(members, m, n, bad, witness):
    """Rerun the frame checks on the board kernel and compare answers."""
    boards = np.asarray([to_board(p) for p in members], dtype=np.uint64)
    plan = kernels.build_plan([int(b) for b in boards], m, n, frame_only=True)
    hit = kernels.scan_boards(plan, boards)
    kernel_bad = int(np.argmax(hit)) if bool(hit.any()) else None
    if kernel_bad != bad:
        raise Error("internal: frame overlap routes disagree on the member scan")
    if bad is not None:
        return
    found = _survivor_not_in(plan, 1 << (m * n), boards)
    claimed = -1 if witness is None else to_board(witness[0])
    if found != claimed:
        raise Error("internal: frame overlap routes disagree on the candidate scan")


def verify_frame_complete(pictures, alphabet: Alphabet = BINARY, *,
                          work_limit: int = DEFAULT_CANDIDATE_LIMIT) -> VerificationReport:
    """Members never overlap along their frames, and every picture outside
    the set has a frame overlap into it.

    A candidate's verdict depends only on its own frame, so the grouped scan
    probes the q^(2m+2n-4) frames against the members' frame word sets
    instead of walking all q^(mn) pictures; a frame with no overlap fails the
    property as soon as some picture carrying it is a non-member. Binary sets
    are rescanned with thickness-one board probes and both routes must agree.
    """
    t0 = time.perf_counter()
    members = canonical_order(pictures, alphabet)
    if not members:
        raise ValueError("frame completeness needs a nonempty set")
    m, n = _uniform_size(members)
    space = alphabet.size ** (m * n)
    if space > work_limit:
        raise WorkLimitExceeded(space, work_limit)
    count = len(members)
    pairs = count * count + (space - count) * count
    frames = [frame_of(p) for p in members]
    probes = _FrameProbes(frames)

    holds, witness, lines = True, None, []
    bad = next((i for i, f in enumerate(frames) if probes.hits(f)), None)
    if bad is not None:
        p = members[bad]
        other = next(q for q in members if _frames_overlap(frame_of(p), frame_of(q)))
        w = next(w for w in find_overlaps(p, other) if "frame" in w.flags)
        holds, witness = False, (p, other, w)
        lines = _picture_lines(p, other) + ["", w.to_text()]
    else:
        by_frame = Counter(frames)
        interior_total = alphabet.size ** ((m - 2) * (n - 2))
        member_set = set(members)
        best = None
        for f in _all_frames(m, n, alphabet):
            if by_frame[f] < interior_total and not probes.hits(f):
                cand = _least_nonmember(f, member_set, m, n, alphabet)
                if best is None or sort_key(cand, alphabet) < sort_key(best, alphabet):
                    best = cand
        if best is not None:
            holds, witness = False, (best,)
            lines = _picture_lines(best)

    if _use_boards(alphabet, m, n):
        _check_frame_routes(members, m, n, bad, witness if bad is None else None)

    return VerificationReport("frame-complete", holds, "naive", space, pairs,
                              witness, lines, wall_time=time.perf_counter() - t0)


def _word_tier(s1, s2, s3, s4, alphabet):
    checks = (
        ("rows", is_cross_non_overlapping(s1, s2, alphabet)),
        ("rows", is_full_pair(s1, s2, alphabet)),
        ("columns", is_cross_non_overlapping(s3, s4, alphabet)),
        ("columns", is_full_pair(s3, s4, alphabet)),
    )
    for label, rep in checks:
        if not rep.holds:
            if len(rep.witness) == 3:
                s, t, L = rep.witness
                return (label, *rep.witness), [f"{label}: {s} {t} overlap L={L}"]
            return (label, *rep.witness), [f"{label}: unmatched word {rep.witness[0]}"]
    return None, []


def verify_neno_layered(ys, xs, s1, s2, s3, s4, *,
                        work_limit: int = DEFAULT_MEMBER_LIMIT) -> VerificationReport:
    """Maximality of ys argued in four tiers instead of a space scan.

    Tier word-level: (s1, s2) and (s3, s4) are cross-non-overlapping full
    pairs, which settles every picture whose frame leaves the product. Tier
    frame-equality: each frame word of xs is realized in ys. Tier
    self-overlap: ys is non-overlapping. Tier expandability: every member of
    xs outside ys overlaps one of ys. xs must be exactly the frame product of
    the four word languages with free interior.
    """
    t0 = time.perf_counter()
    y_list = canonical_order(ys)
    x_list = canonical_order(xs)
    if not x_list:
        raise ValueError("xs must be nonempty")
    if not set(y_list) <= set(x_list):
        raise ValueError("ys must be a subset of xs")
    m, n = _uniform_size(x_list)
    for label, words, length in (("s1", s1, n), ("s2", s2, n), ("s3", s3, m), ("s4", s4, m)):
        if not words:
            raise ValueError(f"{label} must be nonempty")
        if any(len(w) != length for w in words):
            raise MixedLengths(f"{label} words must have length {length}")
    for corner, chars in (
        ("tl", {w[0] for w in s1} | {w[0] for w in s3}),
        ("tr", {w[-1] for w in s1} | {w[0] for w in s4}),
        ("bl", {w[0] for w in s2} | {w[-1] for w in s3}),
        ("br", {w[-1] for w in s2} | {w[-1] for w in s4}),
    ):
        if len(chars) != 1:
            raise FrameIncompatible(f"{corner} corner symbols disagree: {sorted(chars)}")
    product_size = len(s1) * len(s2) * len(s3) * len(s4) << ((m - 2) * (n - 2))
    if product_size > work_limit:
        raise WorkLimitExceeded(product_size, work_limit)
    if set(x_list) != set(_product_pictures(s1, s2, s3, s4, m, n)):
        raise ValueError("xs is not the frame product of the four word languages")

    count = len(x_list)
    pairs = len(y_list) ** 2 + (count - len(y_list)) * len(y_list)

    def report(holds, tier=None, witness=None, lines=()):
        return VerificationReport("neno-layered", holds, "layered", count, pairs,
                                  witness, list(lines), tier,
                                  wall_time=time.perf_counter() - t0)

    witness, lines = _word_tier(s1, s2, s3, s4, BINARY)
    if witness is not None:
        return report(False, "word-level", witness, lines)

    y_frames = [frame_of(p) for p in y_list]
    for c, name in enumerate(("r_F", "r_L", "c_F", "c_L")):
        missing = sorted({frame_of(p)[c] for p in x_list} - {f[c] for f in y_frames})
        if missing:
            return report(False, "frame-equality", (name, missing[0]),
                          [f"{name}: {missing[0]} unrealized"])

    sub = verify_non_overlapping(y_list, work_limit=work_limit)
    if not sub.holds:
        return report(False, "self-overlap", sub.witness, sub.witness_lines)

    y_set = set(y_list)
    outside = [p for p in x_list if p not in y_set]
    if outside:
        if _use_boards(BINARY, m, n):
            plan = kernels.build_plan([to_board(p) for p in y_list], m, n, include_full=True)
            hit = kernels.scan_boards(plan, np.asarray([to_board(p) for p in outside],
                                                       dtype=np.uint64))
            stuck = None if bool(hit.all()) else outside[int(np.argmin(hit))]
        else:
            tables = _BlockTables(y_list, m, n, include_full=True)
            stuck = next((p for p in outside if not tables.hits(p)), None)
        if stuck is not None:
            return report(False, "expandability", (stuck,), _picture_lines(stuck))
    return report(True)


def _product_pictures(s1, s2, s3, s4, m: int, n: int):
    for r_f, r_l, c_f, c_l in itertools.product(s1, s2, s3, s4):
        for flat in itertools.product("01", repeat=(m - 2) * (n - 2)):
            yield _frame_picture((r_f, r_l, c_f, c_l), flat, m, n)


CORNER_CLASSES = (
    ("0", "0", "1", "1"),
    ("1", "1", "0", "0"),
    ("1", "0", "1", "0"),
    ("0", "1", "0", "1"),
)


def check_corner_lemma(pictures, alphabet: Alphabet = BINARY) -> VerificationReport:
    """Corner symbols are constant across the set and fall in one of the four
    admissible classes 0011, 1100, 1010, 0101 (read tl, tr, bl, br).
    Presupposes a non-overlapping set."""
    t0 = time.perf_counter()
    members = canonical_order(pictures, alphabet)
    if not verify_non_overlapping(members, alphabet).holds:
        raise NotNonOverlapping("the corner conditions presuppose a non-overlapping set")
    holds, witness, lines = True, None, []
    if members:
        base = corners_of(members[0])
        clash = next((p for p in members[1:] if corners_of(p) != base), None)
        if clash is not None:
            holds, witness = False, (members[0], clash)
            lines = _picture_lines(members[0], clash) + \
                ["", f"corners {''.join(base)} vs {''.join(corners_of(clash))}"]
        elif base not in CORNER_CLASSES:
            holds, witness = False, (members[0],)
            lines = _picture_lines(members[0]) + \
                ["", f"corner class {''.join(base)} not among 0011, 1100, 1010, 0101"]
    return VerificationReport("corner-lemma", holds, "naive", len(members), 0,
                              witness, lines, wall_time=time.perf_counter() - t0)


def check_frame_necessity(pictures, alphabet: Alphabet = BINARY) -> VerificationReport:
    """The first and last rows, and first and last columns, of a
    non-overlapping set must form cross-non-overlapping word pairs."""
    t0 = time.perf_counter()
    members = canonical_order(pictures, alphabet)
    if not verify_non_overlapping(members, alphabet).holds:
        raise NotNonOverlapping("frame necessity presupposes a non-overlapping set")
    holds, witness, lines, pairs = True, None, [], 0
    if members:
        frames = [frame_of(p) for p in members]
        r_f = {f[0] for f in frames}
        r_l = {f[1] for f in frames}
        c_f = {f[2] for f in frames}
        c_l = {f[3] for f in frames}
        pairs = len(r_f) * len(r_l) + len(c_f) * len(c_l)
        for label, first, last in (("rows", r_f, r_l), ("columns", c_f, c_l)):
            try:
                rep = is_cross_non_overlapping(first, last, alphabet)
            except DisjointnessViolated:
                shared = sorted(first & last, key=alphabet.key)[0]
                holds, witness = False, (label, shared, shared, len(shared))
                lines = [f"{label}: {shared} lies in both sets"]
                break
            if not rep.holds:
                s, t, L = rep.witness
                holds, witness = False, (label, s, t, L)
                lines = [f"{label}: {s} {t} overlap L={L}"]
                break
    return VerificationReport("frame-necessity", holds, "naive", len(members), pairs,
                              witness, lines, wall_time=time.perf_counter() - t0)


def verify_unbordered(pictures, alphabet: Alphabet = BINARY) -> VerificationReport:
    """No member properly overlaps itself."""
    t0 = time.perf_counter()
    members = canonical_order(pictures, alphabet)
    holds, witness, lines = True, None, []
    for p in members:
        ok, w = properly_overlap(p, p)
        if ok:
            holds, witness = False, (p, w)
            lines = _picture_lines(p) + ["", w.to_text()]
            break
    return VerificationReport("unbordered", holds, "naive", len(members), len(members),
                              witness, lines, wall_time=time.perf_counter() - t0)


def verify_membership(pictures, spec: FamilySpec) -> VerificationReport:
    """Every picture of the input belongs to the family, checked in input order."""
    t0 = time.perf_counter()
    items = list(pictures)
    holds, witness, lines = True, None, []
    for p in items:
        violations = family_violations(p, spec)
        if violations:
            holds, witness = False, (p, tuple(violations))
            lines = _picture_lines(p) + [""] + \
                [f"violation: {v.to_text()}" for v in violations]
            break
    return VerificationReport(f"member:{spec}", holds, "naive", len(items), 0,
                              witness, lines, wall_time=time.perf_counter() - t0)
