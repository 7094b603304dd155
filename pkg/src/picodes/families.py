"""The binary picture families X, Y, Z, M and their membership conditions.

X(m, n) holds every picture whose first row, last row, first column and last
column come from the four frame languages. Y and M cut X down with interior
conditions on all-ones row runs and on columns of the shape two 1s then 0s;
Z is assembled column by column from the languages I and L. Sizes are m, n
at least 4 over the binary alphabet throughout.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .errors import (
    NotInX,
    RepairFailed,
    SizeTooSmall,
    WorkLimitExceeded,
    WrongAlphabet,
    WrongSize,
)
from .pictures import Picture, column_words, frame_of, from_board, is_binary, to_board
from .words import (
    SuffixMode,
    gen_S2,
    gen_S4,
    has_suffix_in_110_plus,
    has_suffix_in_110_star,
    in_110_star,
)

DEFAULT_MEMBER_LIMIT = 1 << 22

FAMILIES = ("X", "Y", "Z", "M")


@dataclass(frozen=True)
class FamilySpec:
    family: str
    m: int
    n: int
    mode: SuffixMode = SuffixMode.ANY

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.m < 4 or self.n < 4:
            raise SizeTooSmall(f"family sizes start at 4, got ({self.m},{self.n})")

    def __str__(self):
        tail = "" if self.mode is SuffixMode.ANY else ",suffix=proper"
        return f"{self.family}:m={self.m},n={self.n}{tail}"


def parse_family_spec(text: str, default_mode: SuffixMode = SuffixMode.ANY) -> FamilySpec:
    """Parse strings like 'Y:m=4,n=6' or 'Z:m=4,n=4,suffix=proper'."""
    name, sep, rest = text.partition(":")
    if not sep:
        raise ValueError(f"family spec {text!r} needs the form F:m=..,n=..")
    fields = {}
    for item in rest.split(","):
        key, eq, value = item.partition("=")
        if not eq:
            raise ValueError(f"bad family spec field {item!r}")
        fields[key.strip()] = value.strip()
    extra = set(fields) - {"m", "n", "suffix"}
    if extra or "m" not in fields or "n" not in fields:
        raise ValueError(f"family spec {text!r} needs m= and n= (and optionally suffix=)")
    try:
        m, n = int(fields["m"]), int(fields["n"])
    except ValueError:
        raise ValueError(f"family spec {text!r} has non-integer sizes") from None
    mode = default_mode
    if "suffix" in fields:
        try:
            mode = SuffixMode(fields["suffix"])
        except ValueError:
            raise ValueError(f"suffix must be 'any' or 'proper', got {fields['suffix']!r}") from None
    return FamilySpec(name, m, n, mode)


@dataclass(frozen=True)
class ConditionViolation:
    """Where and why a membership condition fails."""

    condition: str                # frame, cond1, cond2, cond2a, cond1bis
    i: int | None = None
    j: int | None = None
    component: str | None = None  # frame component r_F, r_L, c_F or c_L

    def to_text(self) -> str:
        if self.condition == "frame":
            return f"frame component={self.component}"
        if self.i is None:
            return f"{self.condition} j={self.j}"
        return f"{self.condition} i={self.i} j={self.j}"


def _validate(p: Picture):
    if not is_binary(p):
        raise WrongAlphabet("family membership is defined over the binary alphabet")
    if p.m < 4 or p.n < 4:
        raise WrongSize(f"family membership needs m, n >= 4, got {p.m}x{p.n}")


def _in_S4(w: str, mode: SuffixMode) -> bool:
    return (
        w[0] == "1"
        and w[-1] == "0"
        and w[1:-1] != "0" * (len(w) - 2)
        and not has_suffix_in_110_plus(w, mode)
    )


def check_frame(p: Picture, mode: SuffixMode = SuffixMode.ANY) -> ConditionViolation | None:
    """First frame component (r_F, r_L, c_F, c_L order) outside its language."""
    r_f, r_l, c_f, c_l = frame_of(p)
    if r_f != "1" * p.n:
        return ConditionViolation("frame", component="r_F")
    if not (r_l[0] == "0" and r_l[-1] == "0"):
        return ConditionViolation("frame", component="r_L")
    if c_f != "11" + "0" * (p.m - 2):
        return ConditionViolation("frame", component="c_F")
    if not _in_S4(c_l, mode):
        return ConditionViolation("frame", component="c_L")
    return None


def check_cond1(p: Picture) -> ConditionViolation | None:
    """Least column j in 2..n whose cells in rows 2..m-1 are all 0."""
    for j in range(2, p.n + 1):
        if all(p.rows[i][j - 1] == "0" for i in range(1, p.m - 1)):
            return ConditionViolation("cond1", j=j)
    return None


def check_cond2(p: Picture) -> ConditionViolation | None:
    """Least (i,j) != (1,1), row-major, with p(i,j..n) all 1 and the column
    suffix p(i..m, j) of the shape two 1s then zero or more 0s."""
    cols = column_words(p)
    for i in range(1, p.m + 1):
        row = p.rows[i - 1]
        for j in range(1, p.n + 1):
            if (i, j) == (1, 1):
                continue
            if all(c == "1" for c in row[j - 1:]) and in_110_star(cols[j - 1][i - 1:]):
                return ConditionViolation("cond2", i=i, j=j)
    return None


def check_cond2a(p: Picture) -> ConditionViolation | None:
    """Like cond2 but without the row clause: least (i,j) != (1,1) whose
    column suffix is two 1s then zero or more 0s."""
    cols = column_words(p)
    for i in range(1, p.m + 1):
        for j in range(1, p.n + 1):
            if (i, j) == (1, 1):
                continue
            if in_110_star(cols[j - 1][i - 1:]):
                return ConditionViolation("cond2a", i=i, j=j)
    return None


def check_cond1bis(p: Picture, mode: SuffixMode = SuffixMode.ANY) -> ConditionViolation | None:
    """Every position (i, j) other than (1, n) whose row prefix p(i, 1..j) is
    all ones needs the column suffix p(i..m, j) to end in two 1s then 0s.
    Scans column by column, like the interior-column check, and reports the
    first failing (i, j)."""
    runs = []
    for row in p.rows:
        r = 0
        while r < p.n and row[r] == "1":
            r += 1
        runs.append(r)
    cols = column_words(p)
    for j in range(1, p.n + 1):
        for i in range(1, p.m + 1):
            if j > runs[i - 1] or (i, j) == (1, p.n):
                continue
            if not has_suffix_in_110_star(cols[j - 1][i - 1:], mode):
                return ConditionViolation("cond1bis", i=i, j=j)
    return None


def x_violation(p: Picture, mode: SuffixMode = SuffixMode.ANY) -> ConditionViolation | None:
    _validate(p)
    return check_frame(p, mode)


def in_X(p: Picture, mode: SuffixMode = SuffixMode.ANY) -> bool:
    return x_violation(p, mode) is None


def y_violations(p: Picture, mode: SuffixMode = SuffixMode.ANY) -> list[ConditionViolation]:
    _validate(p)
    checks = (check_frame(p, mode), check_cond1(p), check_cond2(p))
    return [v for v in checks if v is not None]


def in_Y(p: Picture, mode: SuffixMode = SuffixMode.ANY) -> bool:
    return not y_violations(p, mode)


def m_violations(p: Picture, mode: SuffixMode = SuffixMode.ANY) -> list[ConditionViolation]:
    _validate(p)
    checks = (check_frame(p, mode), check_cond1bis(p, mode), check_cond2(p))
    return [v for v in checks if v is not None]


def in_M(p: Picture, mode: SuffixMode = SuffixMode.ANY) -> bool:
    return not m_violations(p, mode)


@lru_cache(maxsize=None)
def _y_frame_sets(m: int, n: int, mode: SuffixMode):
    spec = FamilySpec("Y", m, n, mode)
    frames = [frame_of(p) for p in enumerate_family(spec)]
    return tuple(frozenset(f[c] for f in frames) for c in range(4))


def z_violations(p: Picture, mode: SuffixMode = SuffixMode.ANY) -> list[ConditionViolation]:
    """Frame outside the frame of Y(m, n), plus cond1 and cond2a violations."""
    _validate(p)
    out = []
    allowed = _y_frame_sets(p.m, p.n, mode)
    for component, word, words in zip(("r_F", "r_L", "c_F", "c_L"), frame_of(p), allowed):
        if word not in words:
            out.append(ConditionViolation("frame", component=component))
            break
    for v in (check_cond1(p), check_cond2a(p)):
        if v is not None:
            out.append(v)
    return out


def in_Z(p: Picture, mode: SuffixMode = SuffixMode.ANY) -> bool:
    return not z_violations(p, mode)


def gen_I(m: int, mode: SuffixMode = SuffixMode.ANY) -> list[str]:
    """Inner column words 1ya with y nonzero and no suffix of two 1s then 0s."""
    if m < 4:
        raise SizeTooSmall(f"size {m} below minimum 4")
    out = []
    for mid in itertools.product("01", repeat=m - 2):
        y = "".join(mid)
        if y == "0" * (m - 2):
            continue
        for a in "01":
            w = "1" + y + a
            if not has_suffix_in_110_star(w, mode):
                out.append(w)
    return out


def gen_L(m: int, mode: SuffixMode = SuffixMode.ANY) -> list[str]:
    """Last column words 1x0 with x nonzero and no suffix of two 1s then a
    positive run of 0s."""
    if m < 4:
        raise SizeTooSmall(f"size {m} below minimum 4")
    out = []
    for mid in itertools.product("01", repeat=m - 2):
        x = "".join(mid)
        if x == "0" * (m - 2):
            continue
        w = "1" + x + "0"
        if not has_suffix_in_110_plus(w, mode):
            out.append(w)
    return out


def _interior_masks(m: int, n: int) -> list[int]:
    return [1 << ((m - i) * n + (n - j)) for i in range(2, m) for j in range(2, n)]


def _x_base_board(m: int, n: int, r_l: str, c_l: str) -> int:
    c_f = "11" + "0" * (m - 2)
    rows = ["1" * n]
    for i in range(2, m):
        rows.append(c_f[i - 1] + "0" * (n - 2) + c_l[i - 1])
    rows.append(r_l)
    return to_board(Picture(tuple(rows)))


def _x_boards_unsorted(m: int, n: int, mode: SuffixMode) -> Iterator[int]:
    masks = _interior_masks(m, n)
    for r_l in gen_S2(n):
        for c_l in gen_S4(m, mode):
            base = _x_base_board(m, n, r_l, c_l)
            for bits in range(1 << len(masks)):
                b = base
                t = 0
                while bits >> t:
                    if bits >> t & 1:
                        b |= masks[t]
                    t += 1
                yield b


def _z_boards_unsorted(m: int, n: int, mode: SuffixMode) -> Iterator[int]:
    first = "11" + "0" * (m - 2)
    inner = gen_I(m, mode)
    last = gen_L(m, mode)
    for mids in itertools.product(inner, repeat=n - 2):
        for col_n in last:
            cols = (first, *mids, col_n)
            yield to_board(Picture(tuple("".join(c[i] for c in cols) for i in range(m))))


def _family_size_estimate(spec: FamilySpec) -> int:
    m, n = spec.m, spec.n
    if spec.family == "Z":
        return len(gen_I(m, spec.mode)) ** (n - 2) * len(gen_L(m, spec.mode))
    return (len(gen_S4(m, spec.mode)) << (n - 2)) << ((m - 2) * (n - 2))


def _keeps(spec: FamilySpec):
    if spec.family == "X":
        return lambda p: True
    if spec.family == "Y":
        return lambda p: check_cond1(p) is None and check_cond2(p) is None
    if spec.family == "M":
        return lambda p: check_cond1bis(p, spec.mode) is None and check_cond2(p) is None
    raise ValueError(spec.family)


def enumerate_family(spec: FamilySpec, work_limit: int = DEFAULT_MEMBER_LIMIT) -> Iterator[Picture]:
    """Members of the family in row-major lexicographic order.

    X, Y and M walk the frame-language product with free interiors, filtered
    by the interior conditions; Z is the column product of I and L behind the
    fixed first column. The candidate count is gated by work_limit before
    anything is materialized.
    """
    estimate = _family_size_estimate(spec)
    if estimate > work_limit:
        raise WorkLimitExceeded(estimate, work_limit)
    m, n = spec.m, spec.n
    if spec.family == "Z":
        boards = sorted(_z_boards_unsorted(m, n, spec.mode))
        yield from (from_board(b, m, n) for b in boards)
        return
    keep = _keeps(spec)
    boards = sorted(_x_boards_unsorted(m, n, spec.mode))
    for b in boards:
        p = from_board(b, m, n)
        if keep(p):
            yield p


def count_family(spec: FamilySpec, work_limit: int = DEFAULT_MEMBER_LIMIT) -> int:
    """Member count, streamed without materializing the sorted enumeration."""
    estimate = _family_size_estimate(spec)
    if estimate > work_limit:
        raise WorkLimitExceeded(estimate, work_limit)
    m, n = spec.m, spec.n
    if spec.family == "X":
        return estimate
    if spec.family == "Z":
        return sum(1 for _ in _z_boards_unsorted(m, n, spec.mode))
    keep = _keeps(spec)
    return sum(1 for b in _x_boards_unsorted(m, n, spec.mode) if keep(from_board(b, m, n)))


def family_violations(p: Picture, spec: FamilySpec) -> list[ConditionViolation]:
    """Why p is not a member of the family; empty when it is."""
    if p.size != (spec.m, spec.n):
        raise WrongSize(f"picture is {p.m}x{p.n}, family wants {spec.m}x{spec.n}")
    if spec.family == "X":
        v = x_violation(p, spec.mode)
        return [v] if v else []
    if spec.family == "Y":
        return y_violations(p, spec.mode)
    if spec.family == "M":
        return m_violations(p, spec.mode)
    return z_violations(p, spec.mode)


def _flip(p: Picture, i: int, j: int) -> Picture:
    row = p.rows[i - 1]
    ch = "1" if row[j - 1] == "0" else "0"
    return Picture(p.rows[:i - 1] + (row[:j - 1] + ch + row[j:],) + p.rows[i:])


def _repair_moves(p: Picture, v: ConditionViolation) -> list[tuple[int, int]]:
    if v.condition == "cond1":
        return [(i, v.j) for i in range(3, p.m)]
    cells = {(v.i, j) for j in range(v.j, p.n + 1)} | {(i, v.j) for i in range(v.i, p.m + 1)}
    return sorted((i, j) for (i, j) in cells if 2 <= i <= p.m - 1 and 2 <= j <= p.n - 1)


def repair_to_Y(p: Picture, mode: SuffixMode = SuffixMode.ANY,
                flip_budget: int | None = None) -> Picture:
    """Flip interior cells of an X member until no cond1 or cond2 violation remains.

    A cond1 violation sets the topmost cell among rows 3..m-1 of the
    offending column to 1; a cond2 violation flips the topmost then leftmost
    off-frame cell on the violating row and column segments. The picture is
    rechecked after every flip and the frame is never touched. Raises NotInX
    for pictures outside X, and RepairFailed once (m n)^2 flips pass without
    reaching a violation-free picture. At m = 4 the two flipping rules can
    undo each other, so RepairFailed is a real outcome there.
    """
    if x_violation(p, mode) is not None:
        raise NotInX("repair starts from a picture with a valid frame")
    budget = (p.m * p.n) ** 2 if flip_budget is None else flip_budget
    q, flips = p, 0
    while (v := check_cond1(q) or check_cond2(q)) is not None:
        if flips == budget:
            raise RepairFailed(f"no violation-free picture within {budget} flips")
        moves = _repair_moves(q, v)
        if not moves:
            raise RepairFailed(f"no off-frame cell can clear {v.to_text()}")
        q = _flip(q, *moves[0])
        flips += 1
    return q
