"""Probe plans: precomputed member corner-block tables for overlap scans.

A scan asks, per candidate board, whether any member shares a corner block
with it of some size (h, k): candidate tl against member br blocks, tr
against bl, and so on. The plan stores each member block table as a sorted
uint64 array so both kernel backends can binary-search them. Boards pack a
binary picture row-major with cell (1,1) in the most significant bit, so
ascending board order is lexicographic picture order.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

TL, TR, BL, BR = 0, 1, 2, 3
_OPPOSITE = {TL: BR, BR: TL, BL: TR, TR: BL}


def extract_block(board: int, m: int, n: int, corner: int, h: int, k: int) -> int:
    """Corner block of a board as an integer, top block row most significant."""
    row_mask = (1 << n) - 1
    k_mask = (1 << k) - 1
    rows = range(1, h + 1) if corner in (TL, TR) else range(m - h + 1, m + 1)
    out = 0
    for i in rows:
        row = (board >> ((m - i) * n)) & row_mask
        piece = (row >> (n - k)) if corner in (TL, BL) else (row & k_mask)
        out = (out << k) | piece
    return out


@dataclass
class ProbePlan:
    m: int
    n: int
    corners: np.ndarray   # int8, candidate-side corner per probe
    heights: np.ndarray   # int8
    widths: np.ndarray    # int8
    offsets: np.ndarray   # int64, probe_count + 1 slice bounds into blocks
    blocks: np.ndarray    # uint64, concatenated sorted member block tables

    @property
    def probe_count(self) -> int:
        return len(self.corners)


def build_plan(member_boards, m: int, n: int, include_full: bool = True,
               frame_only: bool = False) -> ProbePlan:
    """Tables of member corner blocks for every (corner, h, k) probe.

    With include_full False the (m, n) probe is dropped, which for equal-size
    pictures restricts the scan to proper witnesses. With frame_only True
    only thickness-one blocks (h == 1 or k == 1) are probed. Probes run in
    ascending block area so cheap high-hit-rate probes come first; the
    survivor set does not depend on that order.
    """
    if m * n > 64:
        raise ValueError("boards larger than 64 cells are not supported")
    members = list(member_boards)
    sizes = [(h, k) for h in range(1, m + 1) for k in range(1, n + 1)]
    if frame_only:
        sizes = [(h, k) for (h, k) in sizes if h == 1 or k == 1]
    if not include_full and (m, n) in sizes:
        sizes.remove((m, n))
    sizes.sort(key=lambda hk: (hk[0] * hk[1], hk[0]))
    corners, heights, widths, offsets = [], [], [], [0]
    tables = []
    for h, k in sizes:
        for cand_corner in (TL, TR, BL, BR):
            table = sorted({extract_block(b, m, n, _OPPOSITE[cand_corner], h, k) for b in members})
            corners.append(cand_corner)
            heights.append(h)
            widths.append(k)
            tables.append(table)
            offsets.append(offsets[-1] + len(table))
    flat = [b for t in tables for b in t]
    return ProbePlan(
        m=m,
        n=n,
        corners=np.asarray(corners, dtype=np.int8),
        heights=np.asarray(heights, dtype=np.int8),
        widths=np.asarray(widths, dtype=np.int8),
        offsets=np.asarray(offsets, dtype=np.int64),
        blocks=np.asarray(flat, dtype=np.uint64),
    )
