# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled scan kernels: per-candidate corner block probes with early exit."""

from libc.stdint cimport int8_t, int64_t, uint64_t

import numpy as np


cdef inline uint64_t _block(uint64_t board, int m, int n, int corner, int h, int k) noexcept nogil:
    cdef uint64_t row_mask = ((<uint64_t>1) << n) - 1
    cdef uint64_t k_mask = ((<uint64_t>1) << k) - 1
    cdef uint64_t out = 0
    cdef uint64_t row
    cdef int i
    cdef int r0 = 1 if corner <= 1 else m - h + 1   # corners 0,1 anchor at the top
    for i in range(r0, r0 + h):
        row = (board >> ((m - i) * n)) & row_mask
        if corner == 0 or corner == 2:              # left-anchored corners take high bits
            out = (out << k) | (row >> (n - k))
        else:
            out = (out << k) | (row & k_mask)
    return out


cdef inline bint _in_table(const uint64_t[::1] blocks, int64_t lo, int64_t hi, uint64_t val) noexcept nogil:
    cdef int64_t left = lo
    cdef int64_t right = hi
    cdef int64_t mid
    while left < right:
        mid = (left + right) >> 1
        if blocks[mid] < val:
            left = mid + 1
        else:
            right = mid
    return left < hi and blocks[left] == val


cdef inline bint _any_hit(uint64_t board, int m, int n,
                          const int8_t[::1] corners, const int8_t[::1] heights,
                          const int8_t[::1] widths, const int64_t[::1] offsets,
                          const uint64_t[::1] blocks, int nprobes) noexcept nogil:
    cdef int t
    cdef uint64_t val
    for t in range(nprobes):
        if offsets[t] == offsets[t + 1]:
            continue
        val = _block(board, m, n, corners[t], heights[t], widths[t])
        if _in_table(blocks, offsets[t], offsets[t + 1], val):
            return True
    return False


def scan_range(plan, start, stop):
    """Least board in [start, stop) matching no member block anywhere, or -1."""
    cdef int m = plan.m
    cdef int n = plan.n
    cdef const int8_t[::1] corners = plan.corners
    cdef const int8_t[::1] heights = plan.heights
    cdef const int8_t[::1] widths = plan.widths
    cdef const int64_t[::1] offsets = plan.offsets
    cdef const uint64_t[::1] blocks = plan.blocks
    cdef int nprobes = corners.shape[0]
    cdef uint64_t b = <uint64_t>start
    cdef uint64_t end = <uint64_t>stop
    cdef long long found = -1
    with nogil:
        while b < end:
            if not _any_hit(b, m, n, corners, heights, widths, offsets, blocks, nprobes):
                found = <long long>b
                break
            b += 1
    return found


def scan_boards(plan, boards):
    """Boolean mask over boards: True where some member block matches."""
    cdef int m = plan.m
    cdef int n = plan.n
    cdef const int8_t[::1] corners = plan.corners
    cdef const int8_t[::1] heights = plan.heights
    cdef const int8_t[::1] widths = plan.widths
    cdef const int64_t[::1] offsets = plan.offsets
    cdef const uint64_t[::1] blocks = plan.blocks
    cdef int nprobes = corners.shape[0]
    arr = np.ascontiguousarray(boards, dtype=np.uint64)
    out = np.zeros(arr.shape[0], dtype=np.uint8)
    cdef const uint64_t[::1] bs = arr
    cdef unsigned char[::1] ov = out
    cdef Py_ssize_t i
    with nogil:
        for i in range(bs.shape[0]):
            ov[i] = _any_hit(bs[i], m, n, corners, heights, widths, offsets, blocks, nprobes)
    return out.astype(bool)
