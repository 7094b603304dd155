"""Rectangular pictures: subpictures, corner prefixes, frames, transforms, text I/O.

Positions are 1-based with (1,1) the top-left cell. A picture of size (m, n)
has m rows and n columns; column words are read top to bottom. Binary
pictures additionally map to board integers whose ascending order is exactly
row-major lexicographic order with 0 < 1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import OutOfDomain, WrongAlphabet
from .words import BINARY, Alphabet


@dataclass(frozen=True)
class Picture:
    rows: tuple[str, ...]

    def __post_init__(self):
        if not self.rows or any(len(r) == 0 for r in self.rows):
            raise ValueError("picture must have at least one row and one column")
        if len({len(r) for r in self.rows}) != 1:
            raise ValueError("picture rows must all have the same length")

    @property
    def m(self) -> int:
        return len(self.rows)

    @property
    def n(self) -> int:
        return len(self.rows[0])

    @property
    def size(self) -> tuple[int, int]:
        return (self.m, self.n)

    def cell(self, i: int, j: int) -> str:
        """Symbol at 1-based position (i, j)."""
        if not (1 <= i <= self.m and 1 <= j <= self.n):
            raise OutOfDomain(f"position ({i},{j}) outside {self.m}x{self.n}")
        return self.rows[i - 1][j - 1]

    def __str__(self):
        return format_picture(self)


def picture(*rows: str) -> Picture:
    """Shorthand constructor from row strings."""
    return Picture(tuple(rows))


def subpicture(p: Picture, i1: int, j1: int, i2: int, j2: int) -> Picture:
    """The block of p spanning rows i1..i2 and columns j1..j2, inclusive."""
    if not (1 <= i1 <= i2 <= p.m and 1 <= j1 <= j2 <= p.n):
        raise OutOfDomain(f"subdomain ({i1},{j1})..({i2},{j2}) outside {p.m}x{p.n}")
    return Picture(tuple(r[j1 - 1:j2] for r in p.rows[i1 - 1:i2]))


def corner_prefix(p: Picture, corner: str, h: int, k: int) -> Picture:
    """The h x k block of p anchored at one of its corners tl, tr, bl, br."""
    if not (1 <= h <= p.m and 1 <= k <= p.n):
        raise OutOfDomain(f"corner block {h}x{k} outside {p.m}x{p.n}")
    if corner == "tl":
        return subpicture(p, 1, 1, h, k)
    if corner == "tr":
        return subpicture(p, 1, p.n - k + 1, h, p.n)
    if corner == "bl":
        return subpicture(p, p.m - h + 1, 1, p.m, k)
    if corner == "br":
        return subpicture(p, p.m - h + 1, p.n - k + 1, p.m, p.n)
    raise ValueError(f"unknown corner {corner!r}")


def column_words(p: Picture) -> tuple[str, ...]:
    """p viewed as a length-n word whose symbols are its columns, top to bottom."""
    return tuple("".join(r[j] for r in p.rows) for j in range(p.n))


def row_words(p: Picture) -> tuple[str, ...]:
    """p viewed as a length-m word whose symbols are its rows."""
    return p.rows


def frame_of(p: Picture) -> tuple[str, str, str, str]:
    """(first row, last row, first column, last column) of p."""
    cols = column_words(p)
    return (p.rows[0], p.rows[-1], cols[0], cols[-1])


def corners_of(p: Picture) -> tuple[str, str, str, str]:
    """The four corner symbols (tl, tr, bl, br)."""
    return (p.rows[0][0], p.rows[0][-1], p.rows[-1][0], p.rows[-1][-1])


def rotate90(p: Picture) -> Picture:
    """Clockwise quarter turn: the result q of size (n, m) has q(i,j) = p(m-j+1, i)."""
    m = p.m
    return Picture(tuple("".join(p.rows[m - j][i] for j in range(1, m + 1)) for i in range(p.n)))


def row_mirror(p: Picture) -> Picture:
    """Mirror across the vertical axis (each row reversed)."""
    return Picture(tuple(r[::-1] for r in p.rows))


def col_mirror(p: Picture) -> Picture:
    """Mirror across the horizontal axis (row order reversed)."""
    return Picture(tuple(reversed(p.rows)))


def is_binary(p: Picture) -> bool:
    return all(c in "01" for r in p.rows for c in r)


def to_board(p: Picture) -> int:
    """Pack a binary picture into an integer, row-major with (1,1) most significant."""
    if not is_binary(p):
        raise WrongAlphabet("board encoding needs a binary picture")
    return int("".join(p.rows), 2)


def from_board(board: int, m: int, n: int) -> Picture:
    if not 0 <= board < 1 << (m * n):
        raise ValueError(f"board {board} out of range for {m}x{n}")
    bits = format(board, f"0{m * n}b")
    return Picture(tuple(bits[r * n:(r + 1) * n] for r in range(m)))


def sort_key(p: Picture, alphabet: Alphabet = BINARY):
    """Row-major lexicographic key under the alphabet's symbol order."""
    return tuple(alphabet.symbols.index(c) for r in p.rows for c in r)


def canonical_order(pictures, alphabet: Alphabet = BINARY) -> list[Picture]:
    """Deduplicate and sort pictures into row-major lexicographic order."""
    return sorted(set(pictures), key=lambda p: sort_key(p, alphabet))


def parse_picture(text: str) -> Picture:
    """Parse the text form: a header line 'm n', then m rows of n symbols."""
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise ValueError("empty picture text")
    head = lines[0].split()
    if len(head) != 2 or not all(tok.isdigit() for tok in head):
        raise ValueError(f"bad picture header {lines[0]!r}")
    m, n = int(head[0]), int(head[1])
    body = [ln.strip() for ln in lines[1:]]
    if len(body) != m or any(len(r) != n for r in body):
        raise ValueError(f"picture body does not match header {m} {n}")
    return Picture(tuple(body))


def format_picture(p: Picture) -> str:
    return f"{p.m} {p.n}\n" + "\n".join(p.rows)


def parse_picture_set(text: str) -> list[Picture]:
    """Parse pictures separated by blank lines; # lines are comments."""
    blocks: list[list[str]] = []
    current: list[str] = []
    for ln in text.splitlines():
        if ln.lstrip().startswith("#"):
            continue
        if ln.strip():
            current.append(ln)
        elif current:
            blocks.append(current)
            current = []
    if current:
        blocks.append(current)
    return [parse_picture("\n".join(b)) for b in blocks]


def format_picture_set(pictures) -> str:
    return "\n\n".join(format_picture(p) for p in pictures) + "\n"
