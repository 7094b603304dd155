"""Numpy scan kernels, the fallback when the compiled module is unavailable.

Same contract as the compiled backend: scan_range finds the least surviving
board in a range (a board matching no member block anywhere), scan_boards
marks which of the given boards match some member block.
"""

from __future__ import annotations

import numpy as np

from .plan import BL, TL, TR, ProbePlan


def _blocks_of(boards: np.ndarray, plan: ProbePlan, probe: int) -> np.ndarray:
    m, n = plan.m, plan.n
    corner = int(plan.corners[probe])
    h, k = int(plan.heights[probe]), int(plan.widths[probe])
    row_mask = np.uint64((1 << n) - 1)
    k_mask = np.uint64((1 << k) - 1)
    rows = range(1, h + 1) if corner in (TL, TR) else range(m - h + 1, m + 1)
    out = np.zeros(boards.shape, dtype=np.uint64)
    for i in rows:
        row = (boards >> np.uint64((m - i) * n)) & row_mask
        piece = (row >> np.uint64(n - k)) if corner in (TL, BL) else (row & k_mask)
        out = (out << np.uint64(k)) | piece
    return out


def _hits(boards: np.ndarray, plan: ProbePlan, probe: int) -> np.ndarray:
    table = plan.blocks[plan.offsets[probe]:plan.offsets[probe + 1]]
    if len(table) == 0:
        return np.zeros(boards.shape, dtype=bool)
    vals = _blocks_of(boards, plan, probe)
    pos = np.minimum(np.searchsorted(table, vals), len(table) - 1)
    return table[pos] == vals


def scan_range(plan: ProbePlan, start: int, stop: int) -> int:
    """Least board in [start, stop) matching no member block anywhere, or -1."""
    survivors = np.arange(start, stop, dtype=np.uint64)
    for probe in range(plan.probe_count):
        if len(survivors) == 0:
            return -1
        survivors = survivors[~_hits(survivors, plan, probe)]
    return int(survivors[0]) if len(survivors) else -1


def scan_boards(plan: ProbePlan, boards) -> np.ndarray:
    """Boolean mask over boards: True where some member block matches."""
    boards = np.ascontiguousarray(boards, dtype=np.uint64)
    hit = np.zeros(boards.shape, dtype=bool)
    for probe in range(plan.probe_count):
        miss = ~hit
        if not miss.any():
            break
        hit[miss] |= _hits(boards[miss], plan, probe)
    return hit
