"""Scan kernels: block extraction, plan shape, backend parity, env selection."""

import itertools
import os
import subprocess
import sys

import numpy as np
import pytest

from picodes._kernels import _py
from picodes._kernels.plan import BL, BR, TL, TR, build_plan, extract_block
from picodes.overlaps import find_overlaps, properly_overlap
from picodes.pictures import corner_prefix, from_board, to_board

from conftest import members

CORNER_NAMES = {TL: "tl", TR: "tr", BL: "bl", BR: "br"}


def test_extract_block_matches_corner_prefix():
    board = to_board(from_board(0b101101110, 3, 3))
    p = from_board(board, 3, 3)
    for corner, name in CORNER_NAMES.items():
        for h, k in itertools.product(range(1, 4), repeat=2):
            want = int("".join(corner_prefix(p, name, h, k).rows), 2)
            assert extract_block(board, 3, 3, corner, h, k) == want


def test_plan_shape_and_probe_filters():
    boards = [to_board(p) for p in members("Y", 4, 4)]
    full = build_plan(boards, 4, 4)
    sizes = set(zip(full.heights.tolist(), full.widths.tolist()))
    assert sizes == {(h, k) for h in range(1, 5) for k in range(1, 5)}
    assert full.probe_count == 4 * 16
    assert full.offsets[0] == 0 and full.offsets[-1] == len(full.blocks)

    proper = build_plan(boards, 4, 4, include_full=False)
    assert (4, 4) not in set(zip(proper.heights.tolist(), proper.widths.tolist()))

    frame = build_plan(boards, 4, 4, frame_only=True)
    assert all(h == 1 or k == 1
               for h, k in zip(frame.heights.tolist(), frame.widths.tolist()))

    with pytest.raises(ValueError):
        build_plan(boards, 9, 9)


def test_plan_tables_are_sorted_per_probe():
    plan = build_plan([to_board(p) for p in members("Y", 4, 4)], 4, 4)
    for probe in range(plan.probe_count):
        table = plan.blocks[plan.offsets[probe]:plan.offsets[probe + 1]]
        assert (np.diff(table.astype(np.int64)) > 0).all()


def scan_pair(backend, plan, boards):
    mask = backend.scan_boards(plan, boards)
    first = backend.scan_range(plan, 0, 1 << (plan.m * plan.n))
    return mask, first


def test_py_scan_agrees_with_witness_search_exhaustively():
    board_members = [to_board(p) for p in members("Y", 4, 4)][:6]
    pics = [from_board(b, 4, 4) for b in board_members]
    cases = {
        (True, False): lambda c: any(find_overlaps(c, p) for p in pics),
        (False, False): lambda c: any(properly_overlap(c, p)[0] for p in pics),
        (True, True): lambda c: any("frame" in w.flags
                                    for p in pics for w in find_overlaps(c, p)),
    }
    boards = np.arange(1 << 16, dtype=np.uint64)[::17]
    for (include_full, frame_only), oracle in cases.items():
        plan = build_plan(board_members, 4, 4, include_full, frame_only)
        mask = _py.scan_boards(plan, boards)
        for b, hit in zip(boards.tolist(), mask.tolist()):
            assert hit == oracle(from_board(b, 4, 4)), (include_full, frame_only, b)


def test_scan_range_returns_least_survivor():
    board_members = [to_board(p) for p in members("Y", 4, 4)]
    plan = build_plan(board_members, 4, 4, include_full=False)
    mask = _py.scan_boards(plan, np.arange(1 << 16, dtype=np.uint64))
    misses = np.flatnonzero(~mask)
    assert _py.scan_range(plan, 0, 1 << 16) == (int(misses[0]) if len(misses) else -1)
    if len(misses):
        at = int(misses[0])
        assert _py.scan_range(plan, at + 1, 1 << 16) == (int(misses[misses > at][0])
                                                         if (misses > at).any() else -1)
    assert _py.scan_range(plan, 5, 5) == -1


def test_empty_member_plan_never_hits():
    plan = build_plan([], 4, 4)
    boards = np.arange(64, dtype=np.uint64)
    assert not _py.scan_boards(plan, boards).any()
    assert _py.scan_range(plan, 7, 99) == 7


def test_native_backend_matches_python_backend():
    native = pytest.importorskip("picodes._kernels._native")
    board_members = [to_board(p) for p in members("Y", 4, 4)]
    boards = np.arange(1 << 16, dtype=np.uint64)
    for include_full, frame_only in ((True, False), (False, False),
                                     (True, True), (False, True)):
        plan = build_plan(board_members, 4, 4, include_full, frame_only)
        py_mask = _py.scan_boards(plan, boards)
        nat_mask = np.asarray(native.scan_boards(plan, boards), dtype=bool)
        assert (py_mask == nat_mask).all()
        for start, stop in ((0, 1 << 16), (1234, 40000), (8, 8)):
            assert _py.scan_range(plan, start, stop) == native.scan_range(plan, start, stop)


def run_probe(env_value: str | None) -> subprocess.CompletedProcess:
    env = dict(os.environ)
    env.pop("PICODES_KERNEL", None)
    if env_value is not None:
        env["PICODES_KERNEL"] = env_value
    return subprocess.run(
        [sys.executable, "-c", "import picodes._kernels as k; print(k.BACKEND)"],
        capture_output=True, text=True, env=env)


def test_backend_env_selection():
    assert run_probe("py").stdout.strip() == "py"
    default = run_probe(None)
    assert default.stdout.strip() in ("py", "native")
    bogus = run_probe("fortran")
    assert bogus.returncode != 0
    assert "PICODES_KERNEL" in bogus.stderr
