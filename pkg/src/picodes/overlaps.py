"""Overlap relations between two pictures, with explicit witnesses.

A tl-overlap of size (h, k) means the tl corner block of one picture equals
the br corner block of the other; a bl-overlap pairs the bl and tr corners.
Orientation PQ says the first picture contributes the tl (or bl) block, QP
the reverse. A witness is proper when the shared block is neither whole
picture; h-slide, v-slide and frame mark full-height, full-width and
thickness-one witnesses.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import WitnessMismatch
from .pictures import Picture

KINDS = ("tl", "bl")
ORIENTS = ("PQ", "QP")
_FLAG_ORDER = ("proper", "h_slide", "v_slide", "frame")


@dataclass(frozen=True)
class OverlapWitness:
    kind: str
    orient: str
    h: int
    k: int
    flags: frozenset[str]

    def to_text(self) -> str:
        tags = ",".join(f for f in _FLAG_ORDER if f in self.flags) or "-"
        return f"{self.kind} {self.orient} {self.h} {self.k} {tags}"


def _block(p: Picture, corner: str, h: int, k: int) -> tuple[str, ...]:
    rows = p.rows[:h] if corner in ("tl", "tr") else p.rows[p.m - h:]
    if corner in ("tl", "bl"):
        return tuple(r[:k] for r in rows)
    return tuple(r[p.n - k:] for r in rows)


def _matches(p: Picture, q: Picture, kind: str, orient: str, h: int, k: int) -> bool:
    a, b = (p, q) if orient == "PQ" else (q, p)
    if kind == "tl":
        return _block(a, "tl", h, k) == _block(b, "br", h, k)
    return _block(a, "bl", h, k) == _block(b, "tr", h, k)


def _flags(p: Picture, q: Picture, h: int, k: int) -> frozenset[str]:
    out = set()
    if (h, k) != p.size and (h, k) != q.size:
        out.add("proper")
    if h == p.m == q.m:
        out.add("h_slide")
    if k == p.n == q.n:
        out.add("v_slide")
    if h == 1 or k == 1:
        out.add("frame")
    return frozenset(out)


def find_overlaps(p: Picture, q: Picture) -> list[OverlapWitness]:
    """All overlap witnesses for the ordered pair (p, q), in canonical order.

    Canonical order is kind tl before bl, orientation PQ before QP, then
    (h, k) lexicographically ascending.
    """
    hmax, kmax = min(p.m, q.m), min(p.n, q.n)
    out = []
    for kind in KINDS:
        for orient in ORIENTS:
            for h in range(1, hmax + 1):
                for k in range(1, kmax + 1):
                    if _matches(p, q, kind, orient, h, k):
                        out.append(OverlapWitness(kind, orient, h, k, _flags(p, q, h, k)))
    return out


def properly_overlap(p: Picture, q: Picture) -> tuple[bool, OverlapWitness | None]:
    """First proper witness in canonical order, if any."""
    hmax, kmax = min(p.m, q.m), min(p.n, q.n)
    for kind in KINDS:
        for orient in ORIENTS:
            for h in range(1, hmax + 1):
                for k in range(1, kmax + 1):
                    flags = _flags(p, q, h, k)
                    if "proper" in flags and _matches(p, q, kind, orient, h, k):
                        return True, OverlapWitness(kind, orient, h, k, flags)
    return False, None


def classify(witness: OverlapWitness, p: Picture, q: Picture) -> frozenset[str]:
    """Recompute a witness's flags, refusing witnesses that do not hold for (p, q)."""
    if witness.kind not in KINDS or witness.orient not in ORIENTS:
        raise WitnessMismatch(f"malformed witness {witness}")
    if not (1 <= witness.h <= min(p.m, q.m) and 1 <= witness.k <= min(p.n, q.n)):
        raise WitnessMismatch(f"witness size {witness.h}x{witness.k} impossible for this pair")
    if not _matches(p, q, witness.kind, witness.orient, witness.h, witness.k):
        raise WitnessMismatch("blocks differ, witness does not hold for this pair")
    return _flags(p, q, witness.h, witness.k)


def is_unbordered(p: Picture) -> bool:
    """True when p has no proper overlap with itself."""
    return not properly_overlap(p, p)[0]
