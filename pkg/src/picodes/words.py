"""Words over a finite alphabet: borders, overlaps and the four frame languages.

Words are plain strings (or tuples when the symbols are themselves words, as
with column words of a picture set). Overlap here always means a suffix of
one word coinciding with a prefix of the other, in either direction, with the
full common length included.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .errors import DisjointnessViolated, MixedLengths, SizeTooSmall


@dataclass(frozen=True)
class Alphabet:
    """Ordered symbols; the order fixes lexicographic order everywhere."""

    symbols: tuple[str, ...]

    def __post_init__(self):
        if len(self.symbols) < 2:
            raise ValueError("an alphabet needs at least two symbols")
        if len(set(self.symbols)) != len(self.symbols):
            raise ValueError("alphabet symbols must be distinct")
        if any(len(s) != 1 for s in self.symbols):
            raise ValueError("alphabet symbols must be single characters")

    @property
    def size(self) -> int:
        return len(self.symbols)

    def key(self, word: Sequence) -> tuple[int, ...]:
        """Sort key realizing this alphabet's lexicographic order."""
        return tuple(self.symbols.index(c) for c in word)


BINARY = Alphabet(("0", "1"))


class SuffixMode(Enum):
    """Whether a word counts as a suffix of itself in the suffix filters."""

    ANY = "any"
    PROPER = "proper"


def border_lengths(w: Sequence) -> set[int]:
    """Lengths L with 0 < L < |w| whose prefix and suffix of w coincide."""
    if len(w) == 0:
        raise ValueError("word must be nonempty")
    return {L for L in range(1, len(w)) if w[:L] == w[-L:]}


def is_bifix_free(w: Sequence) -> bool:
    """True when w has no nontrivial border."""
    return not border_lengths(w)


def overlap_lengths(s: Sequence, t: Sequence) -> set[int]:
    """All L in 1..min(|s|,|t|) where a suffix of one word is a prefix of the other.

    Symmetric in its arguments; the full common length is included, so equal
    words always overlap.
    """
    if len(s) == 0 or len(t) == 0:
        raise ValueError("words must be nonempty")
    top = min(len(s), len(t))
    return {L for L in range(1, top + 1) if s[-L:] == t[:L] or t[-L:] == s[:L]}


@dataclass(frozen=True)
class WordPairReport:
    """Outcome of a word-set check, with a minimal witness when it fails."""

    holds: bool
    witness: tuple | None = None


def _common_length(words) -> int:
    lengths = {len(w) for w in words}
    if len(lengths) != 1:
        raise MixedLengths(f"words of lengths {sorted(lengths)} mixed in one check")
    return lengths.pop()


def is_cross_non_overlapping(set1, set2, alphabet: Alphabet = BINARY) -> WordPairReport:
    """Check that no word of set1 overlaps any word of set2.

    Both sets must be nonempty, disjoint and of one common word length.
    On failure the witness is the lexicographically least (s1, s2, L).
    """
    if not set1 or not set2:
        raise ValueError("word sets must be nonempty")
    _common_length(list(set1) + list(set2))
    clash = set(set1) & set(set2)
    if clash:
        raise DisjointnessViolated(f"sets share {sorted(clash)[:3]}")
    for s1 in sorted(set1, key=alphabet.key):
        for s2 in sorted(set2, key=alphabet.key):
            hits = overlap_lengths(s1, s2)
            if hits:
                return WordPairReport(False, (s1, s2, min(hits)))
    return WordPairReport(True)


class OverlapIndex:
    """Answers 'does w overlap any word of T' with per-length set probes."""

    def __init__(self, words):
        self._prefixes: dict[int, set] = defaultdict(set)
        self._suffixes: dict[int, set] = defaultdict(set)
        for t in words:
            for L in range(1, len(t) + 1):
                self._prefixes[L].add(t[:L])
                self._suffixes[L].add(t[-L:])

    def overlaps(self, w: Sequence) -> bool:
        for L in range(1, len(w) + 1):
            if w[-L:] in self._prefixes.get(L, ()) or w[:L] in self._suffixes.get(L, ()):
                return True
        return False


def is_full_pair(set1, set2, alphabet: Alphabet = BINARY) -> WordPairReport:
    """Check that every outside word of the common length overlaps into both sets.

    Scans all words of that length over the alphabet in lexicographic order,
    skipping members of either set; the witness on failure is the least word
    missing an overlap partner in set1 or in set2.
    """
    if not set1 or not set2:
        raise ValueError("word sets must be nonempty")
    n = _common_length(list(set1) + list(set2))
    members = set(set1) | set(set2)
    idx1, idx2 = OverlapIndex(set1), OverlapIndex(set2)
    for tup in itertools.product(alphabet.symbols, repeat=n):
        w = "".join(tup)
        if w in members:
            continue
        if not (idx1.overlaps(w) and idx2.overlaps(w)):
            return WordPairReport(False, (w,))
    return WordPairReport(True)


def is_cross_bifix_free(words) -> WordPairReport:
    """Check that no proper prefix of one word is a proper suffix of another.

    Ordered pairs include u = v, so a word with a nontrivial border fails on
    its own.
    """
    items = sorted(words)
    for u in items:
        for v in items:
            for L in range(1, min(len(u), len(v))):
                if u[:L] == v[-L:]:
                    return WordPairReport(False, (u, v, L))
    return WordPairReport(True)


def in_110_star(w: str) -> bool:
    """True for 11, 110, 1100, ... (two 1s then zero or more 0s)."""
    return len(w) >= 2 and w[0] == w[1] == "1" and all(c == "0" for c in w[2:])


def in_110_plus(w: str) -> bool:
    """True for 110, 1100, 11000, ... (two 1s then at least one 0)."""
    return len(w) >= 3 and in_110_star(w)


def _suffix_starts(w: str, mode: SuffixMode) -> range:
    return range(0 if mode is SuffixMode.ANY else 1, len(w))


def has_suffix_in_110_star(w: str, mode: SuffixMode = SuffixMode.ANY) -> bool:
    return any(in_110_star(w[i:]) for i in _suffix_starts(w, mode))


def has_suffix_in_110_plus(w: str, mode: SuffixMode = SuffixMode.ANY) -> bool:
    return any(in_110_plus(w[i:]) for i in _suffix_starts(w, mode))


def _require_size(size: int, minimum: int = 4):
    if size < minimum:
        raise SizeTooSmall(f"size {size} below minimum {minimum}")


def gen_S1(n: int) -> list[str]:
    """The single all-ones row word of length n."""
    _require_size(n)
    return ["1" * n]


def gen_S2(n: int) -> list[str]:
    """All row words of length n starting and ending with 0, in lexicographic order."""
    _require_size(n)
    return ["0" + "".join(mid) + "0" for mid in itertools.product("01", repeat=n - 2)]


def gen_S3(m: int) -> list[str]:
    """The single column word 11 followed by m-2 zeros."""
    _require_size(m)
    return ["11" + "0" * (m - 2)]


def gen_S4(m: int, mode: SuffixMode = SuffixMode.ANY) -> list[str]:
    """Column words 1w0 with w nonzero and no suffix of the form 110+, in order."""
    _require_size(m)
    out = []
    for mid in itertools.product("01", repeat=m - 2):
        w = "".join(mid)
        if w == "0" * (m - 2):
            continue
        cand = "1" + w + "0"
        if not has_suffix_in_110_plus(cand, mode):
            out.append(cand)
    return out


def parse_word_set(text: str) -> list[str]:
    """Read one word per line, ignoring blank lines and # comments."""
    out = []
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            out.append(line)
    return out


def format_word_set(words) -> str:
    return "".join(w + "\n" for w in words)
