"""Picture overlap witnesses: goldens, invariances, and word reductions."""

import itertools

import pytest
from hypothesis import given

from picodes.errors import WitnessMismatch
from picodes.overlaps import OverlapWitness, classify, find_overlaps, is_unbordered, properly_overlap
from picodes.pictures import (
    column_words,
    corner_prefix,
    from_board,
    picture,
    rotate90,
    row_mirror,
)
from picodes.words import overlap_lengths

from test_pictures import all_pictures, binary_pictures


def naive_witness_set(p, q):
    out = set()
    for kind, orient in itertools.product(("tl", "bl"), ("PQ", "QP")):
        a, b = (p, q) if orient == "PQ" else (q, p)
        first, second = (("tl", "br") if kind == "tl" else ("bl", "tr"))
        for h in range(1, min(p.m, q.m) + 1):
            for k in range(1, min(p.n, q.n) + 1):
                if corner_prefix(a, first, h, k) == corner_prefix(b, second, h, k):
                    out.add((kind, orient, h, k))
    return out


def test_two_by_two_golden():
    p, q = picture("01", "10"), picture("10", "00")
    hits = {(w.kind, w.orient, w.h, w.k) for w in find_overlaps(p, q)}
    assert ("tl", "PQ", 1, 1) in hits
    assert hits == naive_witness_set(p, q)


def test_equal_pictures_carry_full_slide_witnesses():
    p = picture("10", "01")
    full = [w for w in find_overlaps(p, p) if (w.h, w.k) == p.size]
    assert len(full) == 4
    for w in full:
        assert w.flags == frozenset({"h_slide", "v_slide"})
    held, w = properly_overlap(p, p)
    assert held and (w.h, w.k) == (1, 1)
    assert properly_overlap(picture("1"), picture("1")) == (False, None)


def test_witness_canonical_order_and_text():
    p = picture("111", "111")
    ws = find_overlaps(p, p)
    order = [(w.kind, w.orient, w.h, w.k) for w in ws]
    assert order == sorted(order, key=lambda t: (t[0] != "tl", t[1] != "PQ", t[2], t[3]))
    assert ws[0].to_text() == "tl PQ 1 1 proper,frame"
    assert OverlapWitness("bl", "QP", 2, 3, frozenset()).to_text() == "bl QP 2 3 -"


def test_flag_meanings():
    p = picture("110", "011", "010")
    for w in find_overlaps(p, p):
        assert ("frame" in w.flags) == (w.h == 1 or w.k == 1)
        assert ("proper" in w.flags) == ((w.h, w.k) != p.size)
        assert ("h_slide" in w.flags) == (w.h == 3)
        assert ("v_slide" in w.flags) == (w.k == 3)


@given(binary_pictures(max_side=3), binary_pictures(max_side=3))
def test_find_overlaps_matches_naive_block_scan(p, q):
    assert {(w.kind, w.orient, w.h, w.k) for w in find_overlaps(p, q)} == naive_witness_set(p, q)


@given(binary_pictures(max_side=3), binary_pictures(max_side=3))
def test_overlap_symmetry_swaps_orientation(p, q):
    forward = {(w.kind, w.orient, w.h, w.k) for w in find_overlaps(p, q)}
    flipped = {(w.kind, "PQ" if w.orient == "QP" else "QP", w.h, w.k)
               for w in find_overlaps(q, p)}
    assert forward == flipped


def flip(orient):
    return "PQ" if orient == "QP" else "QP"


@given(binary_pictures(max_side=3), binary_pictures(max_side=3))
def test_rotation_covariance(p, q):
    """Clockwise turn sends tl/o (h,k) to bl/flip(o) (k,h) and bl/o to tl/o."""
    direct = {(w.kind, w.orient, w.h, w.k) for w in find_overlaps(p, q)}
    image = {("bl", flip(o), k, h) if kind == "tl" else ("tl", o, k, h)
             for kind, o, h, k in direct}
    turned = {(w.kind, w.orient, w.h, w.k) for w in find_overlaps(rotate90(p), rotate90(q))}
    assert image == turned


@given(binary_pictures(max_side=3), binary_pictures(max_side=3))
def test_row_mirror_covariance(p, q):
    """Mirroring rows swaps both the witness kind and its orientation."""
    direct = {(w.kind, w.orient, w.h, w.k) for w in find_overlaps(p, q)}
    image = {("tl" if kind == "bl" else "bl", flip(o), h, k)
             for kind, o, h, k in direct}
    mirrored = {(w.kind, w.orient, w.h, w.k)
                for w in find_overlaps(row_mirror(p), row_mirror(q))}
    assert image == mirrored


def test_frame_row_witness_reduces_to_word_overlap():
    for p, q in itertools.product(all_pictures(2, 3), repeat=2):
        hits = {w.k for w in find_overlaps(p, q)
                if (w.kind, w.orient, w.h) == ("tl", "PQ", 1)}
        words = {k for k in range(1, 4) if p.rows[0][:k] == q.rows[-1][-k:]}
        assert hits == words


def test_h_slide_witness_reduces_to_column_word_overlap():
    for m, n in ((2, 2), (2, 3)):
        for p, q in itertools.product(all_pictures(m, n), repeat=2):
            slid = any(w.h == m for w in find_overlaps(p, q))
            wordy = bool(overlap_lengths(column_words(p), column_words(q)))
            assert slid == wordy


def test_classify_recomputes_and_rejects():
    p, q = picture("01", "10"), picture("10", "00")
    w = find_overlaps(p, q)[0]
    assert classify(w, p, q) == w.flags
    with pytest.raises(WitnessMismatch):
        classify(OverlapWitness("tl", "PQ", 2, 2, frozenset()), p, q)
    with pytest.raises(WitnessMismatch):
        classify(OverlapWitness("tl", "PQ", 3, 1, frozenset()), p, q)
    with pytest.raises(WitnessMismatch):
        classify(OverlapWitness("mid", "PQ", 1, 1, frozenset()), p, q)


def test_unbordered_goldens():
    assert is_unbordered(picture("1"))
    assert not is_unbordered(picture("11", "11"))
    assert not is_unbordered(picture("00", "00"))
    assert is_unbordered(picture("11111", "10101", "00101", "01110", "01101", "01000"))


def test_unbordered_matches_naive_on_all_3x3():
    for p in all_pictures(3, 3):
        naive = any((h, k) != (3, 3) for kind, orient, h, k in naive_witness_set(p, p))
        assert is_unbordered(p) == (not naive)


@given(binary_pictures(max_side=3), binary_pictures(max_side=3))
def test_every_reported_witness_survives_classify(p, q):
    for w in find_overlaps(p, q):
        assert classify(w, p, q) == w.flags
