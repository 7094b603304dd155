"""String-side checks: borders, word overlaps, the S languages."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from picodes.errors import DisjointnessViolated, MixedLengths, SizeTooSmall
from picodes.words import (
    BINARY,
    Alphabet,
    OverlapIndex,
    SuffixMode,
    border_lengths,
    format_word_set,
    gen_S1,
    gen_S2,
    gen_S3,
    gen_S4,
    has_suffix_in_110_plus,
    has_suffix_in_110_star,
    in_110_plus,
    in_110_star,
    is_bifix_free,
    is_cross_bifix_free,
    is_cross_non_overlapping,
    is_full_pair,
    overlap_lengths,
    parse_word_set,
)

binary_word = st.text(alphabet="01", min_size=1, max_size=14)


def all_words(length: int) -> list[str]:
    return [format(v, f"0{length}b") for v in range(1 << length)] if length else [""]


def naive_borders(w: str) -> set[int]:
    return {L for L in range(1, len(w)) if w[:L] == w[-L:]}


def naive_overlaps(s: str, t: str) -> set[int]:
    top = min(len(s), len(t))
    return {L for L in range(1, top + 1) if s[-L:] == t[:L] or t[-L:] == s[:L]}


@given(binary_word)
def test_border_lengths_match_naive_scan(w):
    assert border_lengths(w) == naive_borders(w)


def test_border_goldens():
    assert border_lengths("10") == set()
    assert border_lengths("11") == {1}
    assert border_lengths("1010") == {2}
    assert border_lengths("1" * 5) == {1, 2, 3, 4}


def test_bifix_free_agrees_with_borders_exhaustively():
    for length in range(1, 11):
        for w in all_words(length):
            assert is_bifix_free(w) == (not naive_borders(w))


@given(binary_word, binary_word)
def test_overlap_lengths_match_definition(s, t):
    assert overlap_lengths(s, t) == naive_overlaps(s, t)


@given(binary_word, binary_word)
def test_overlap_lengths_symmetric(s, t):
    assert overlap_lengths(s, t) == overlap_lengths(t, s)


def test_overlap_goldens():
    assert overlap_lengths("1100", "0011") == {1, 2}
    assert overlap_lengths("11", "11") == {1, 2}
    assert overlap_lengths("10", "01") == {1}
    assert overlap_lengths("1111", "0000") == set()


def test_cross_non_overlapping_enforces_preconditions():
    with pytest.raises(DisjointnessViolated):
        is_cross_non_overlapping({"11"}, {"11"})
    with pytest.raises(MixedLengths):
        is_cross_non_overlapping({"11"}, {"000"})


def test_cross_non_overlapping_witness_is_real():
    rep = is_cross_non_overlapping({"10"}, {"01"})
    assert not rep.holds
    s, t, length = rep.witness
    assert length in naive_overlaps(s, t)


@given(st.sets(st.text(alphabet="01", min_size=4, max_size=4), min_size=1, max_size=6),
       st.sets(st.text(alphabet="01", min_size=4, max_size=4), min_size=1, max_size=6))
def test_cross_non_overlapping_matches_pairwise_scan(one, two):
    if one & two:
        return
    rep = is_cross_non_overlapping(one, two)
    brute = any(naive_overlaps(s, t) for s in one for t in two)
    assert rep.holds == (not brute)


def naive_full(one, two, length):
    outside = [w for w in all_words(length) if w not in one and w not in two]
    return all(any(naive_overlaps(w, s) for s in one)
               and any(naive_overlaps(w, t) for t in two) for w in outside)


def test_full_pair_matches_quantifier_small():
    one, two = set(gen_S1(4)), set(gen_S2(4))
    assert is_full_pair(one, two).holds
    assert naive_full(one, two, 4)
    broken = two - {"0110"}
    rep = is_full_pair(one, broken)
    assert rep.holds == naive_full(one, broken, 4)


def test_full_pair_witness_is_least_failure():
    rep = is_full_pair({"1111"}, {"0110"})
    assert not rep.holds
    failing = [w for w in all_words(4)
               if w not in ("1111", "0110")
               and not (naive_overlaps(w, "1111") and naive_overlaps(w, "0110"))]
    assert rep.witness == (failing[0],)


@given(st.lists(st.text(alphabet="01", min_size=2, max_size=5), min_size=1, max_size=5))
def test_overlap_index_covers_both_directions(words):
    index = OverlapIndex(words)
    for w in all_words(3):
        assert index.overlaps(w) == any(naive_overlaps(w, s) for s in words)


@given(st.sets(st.text(alphabet="01", min_size=1, max_size=5), min_size=1, max_size=6))
def test_cross_bifix_free_matches_double_loop(words):
    rep = is_cross_bifix_free(words)
    brute = any(u[:L] == v[-L:]
                for u in words for v in words
                for L in range(1, min(len(u), len(v))))
    assert rep.holds == (not brute)


def test_110_language_goldens():
    assert all(in_110_star(w) for w in ("11", "110", "1100", "11000"))
    assert not any(in_110_star(w) for w in ("", "1", "10", "111", "0110", "1101"))
    assert in_110_plus("110") and in_110_plus("1100")
    assert not in_110_plus("11")


def test_suffix_modes_differ_on_the_word_itself():
    assert has_suffix_in_110_star("1100", SuffixMode.ANY)
    assert not has_suffix_in_110_star("1100", SuffixMode.PROPER)
    assert has_suffix_in_110_star("0110", SuffixMode.PROPER)
    assert not has_suffix_in_110_plus("0011", SuffixMode.ANY)
    assert has_suffix_in_110_plus("00110", SuffixMode.ANY)


def test_s_language_goldens():
    assert gen_S1(4) == ["1111"]
    assert gen_S2(4) == ["0000", "0010", "0100", "0110"]
    assert gen_S3(6) == ["110000"]
    assert gen_S4(4) == ["1010"]
    assert gen_S4(5) == ["10010", "10100", "11010"]
    assert gen_S4(4, SuffixMode.PROPER) == ["1010", "1100"]


@pytest.mark.parametrize("size", range(4, 10))
def test_s_language_shapes(size):
    assert len(gen_S2(size)) == 1 << (size - 2)
    assert all(w[0] == "0" and w[-1] == "0" for w in gen_S2(size))
    assert gen_S3(size) == ["11" + "0" * (size - 2)]
    for mode in SuffixMode:
        s4 = gen_S4(size, mode)
        assert all(w[0] == "1" and w[-1] == "0" for w in s4)
        assert "1" + "0" * (size - 1) not in s4
        assert not any(has_suffix_in_110_plus(w, mode) for w in s4)
    assert not set(gen_S3(size)) & set(gen_S4(size))
    assert set(gen_S3(size)) <= set(gen_S4(size, SuffixMode.PROPER))


def test_s_languages_reject_small_sizes():
    for gen in (gen_S1, gen_S2, gen_S3, gen_S4):
        with pytest.raises(SizeTooSmall):
            gen(3)


def test_alphabet_key_orders_words():
    greek = Alphabet(("a", "b", "c"))
    assert sorted(["ba", "ab", "ca"], key=greek.key) == ["ab", "ba", "ca"]
    assert BINARY.key("10") == (1, 0)


@given(st.lists(binary_word, max_size=8))
def test_word_set_round_trip(words):
    assert parse_word_set(format_word_set(words)) == words


def test_word_set_parser_skips_noise():
    assert parse_word_set("# header\n\n 101 \n#x\n11\n") == ["101", "11"]
