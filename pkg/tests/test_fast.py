"""Tests for the suffix-tree traversal engines."""

import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from closedstr.core import Span, border_array, borders_at
from closedstr.fast import (
    CandidatePair,
    FastRun,
    filter_consecutive,
    mcs_fast,
    pairs_at_node,
    position_class,
    run_fast,
    singleton_mcs,
)
from closedstr.oracle import is_mcs_definitional, mcs_definitional, mcs_oracle
from closedstr.posset import BEGIN, ClassedPosSets, PosSet
from closedstr._accel import HAVE_NUMBA

from conftest import exhaustive_texts, randomized_corpus


def classed(*pairs):
    cps = ClassedPosSets()
    for pos, cls in pairs:
        cps.add(pos, cls)
    return cps


def spans(items):
    return [Span(p, q) for p, q in items]


class TestPositionClass:
    def test_first_position_is_begin(self):
        assert position_class(b"abc", 1) == BEGIN

    def test_later_positions_use_preceding_byte(self):
        assert position_class(b"abc", 2) == ord("a")
        assert position_class(b"abc", 3) == ord("b")

    def test_out_of_range(self):
        with pytest.raises(IndexError):
            position_class(b"abc", 0)
        with pytest.raises(IndexError):
            position_class(b"abc", 4)


class TestSingletons:
    def test_alternating_with_square(self):
        assert singleton_mcs("abaabab") == {
            Span(1, 1),
            Span(2, 2),
            Span(5, 5),
            Span(6, 6),
            Span(7, 7),
        }

    def test_unary_has_none(self):
        assert singleton_mcs("aaaa") == set()

    def test_single_char(self):
        assert singleton_mcs("z") == {Span(1, 1)}

    def test_matches_definitional(self):
        for t in exhaustive_texts(2, 9):
            expected = {s for s in mcs_definitional(t) if s.start == s.end}
            assert singleton_mcs(t) == expected, t


class TestPairsAtNode:
    def test_single_element_against_begin(self):
        smaller = classed((4, ord("a")))
        larger = classed((1, BEGIN))
        assert pairs_at_node(smaller, larger, 3) == [CandidatePair(1, 4, 3)]

    def test_element_with_both_neighbours(self):
        smaller = classed((6, ord("b")))
        larger = classed((4, ord("a")), (1, BEGIN))
        got = pairs_at_node(smaller, larger, 2)
        assert got == [CandidatePair(4, 6, 2)]

    def test_same_class_positions_are_ignored(self):
        smaller = classed((5, ord("a")))
        larger = classed((3, ord("a")), (8, ord("a")))
        assert pairs_at_node(smaller, larger, 1) == []

    def test_at_most_two_candidates_per_element(self):
        smaller = classed((5, ord("a")))
        larger = classed((1, ord("b")), (3, ord("c")), (7, ord("b")), (9, BEGIN))
        got = pairs_at_node(smaller, larger, 1)
        assert got == [CandidatePair(3, 5, 1), CandidatePair(5, 7, 1)]


class TestFilterConsecutive:
    def test_adjacent_pairs_survive_others_drop(self):
        s = PosSet()
        for x in (1, 4, 6):
            s.insert(x)
        cands = [
            CandidatePair(1, 4, 2),
            CandidatePair(4, 6, 2),
            CandidatePair(1, 6, 2),
        ]
        kept = filter_consecutive(cands, [s])
        assert kept == [CandidatePair(1, 4, 2), CandidatePair(4, 6, 2)]

    def test_adjacency_spans_multiple_sets(self):
        a = PosSet()
        a.insert(1)
        a.insert(9)
        b = PosSet()
        b.insert(5)
        assert filter_consecutive([CandidatePair(1, 9, 1)], [a, b]) == []
        assert filter_consecutive([CandidatePair(1, 5, 1)], [a, b]) == [
            CandidatePair(1, 5, 1)
        ]


class TestMcsFast:
    def test_two_equal_letters(self):
        assert mcs_fast("aa") == spans([(1, 2)])

    def test_worked_seven_char_example(self):
        assert mcs_fast("abaabab") == spans(
            [(1, 1), (1, 3), (1, 6), (2, 2), (3, 4), (4, 7), (5, 5), (6, 6), (7, 7)]
        )

    def test_known_twelve_char_text(self):
        got = mcs_fast("aabaaaabaaba")
        assert Span(4, 7) in got
        assert Span(6, 12) in got
        assert got == mcs_oracle("aabaaaabaaba")

    def test_single_char(self):
        assert mcs_fast("q") == spans([(1, 1)])

    def test_unary_text(self):
        assert mcs_fast("aaaaaa") == spans([(1, 6)])

    def test_all_distinct(self):
        assert mcs_fast("abcd") == spans([(1, 1), (2, 2), (3, 3), (4, 4)])

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            mcs_fast("")

    def test_run_fast_reports_engine(self):
        assert run_fast("abc", engine="pure").engine == "pure"

    def test_exhaustive_binary(self):
        for t in exhaustive_texts(2, 11):
            assert mcs_fast(t, engine="pure") == mcs_oracle(t, engine="pure"), t

    def test_exhaustive_ternary(self):
        for t in exhaustive_texts(3, 7):
            assert mcs_fast(t, engine="pure") == mcs_oracle(t, engine="pure"), t

    def test_randomized_vs_oracle(self):
        for t in randomized_corpus(4, 150, 90, seed=20) + randomized_corpus(
            26, 80, 60, seed=21
        ):
            assert mcs_fast(t, engine="pure") == mcs_oracle(t), t

    def test_every_span_is_definitional(self):
        rng = random.Random(99)
        for _ in range(40):
            n = rng.randint(2, 40)
            t = bytes(rng.choices(b"ab", k=n))
            for s in mcs_fast(t, engine="pure"):
                assert is_mcs_definitional(t, s.start, s.end), (t, s)

    @given(st.binary(min_size=1, max_size=28))
    @settings(max_examples=150, deadline=None)
    def test_arbitrary_bytes_match_oracle(self, t):
        assert mcs_fast(t, engine="pure") == mcs_oracle(t, engine="pure")

    @given(st.text(alphabet="ab", min_size=2, max_size=24))
    @settings(max_examples=150, deadline=None)
    def test_long_spans_have_border_with_no_interior_occurrence(self, t):
        raw = t.encode()
        for s in mcs_fast(raw, engine="pure"):
            if s.end == s.start:
                continue
            sub = raw[s.start - 1 : s.end]
            b = border_array(sub)[-1]
            assert b >= 1
            assert sub.find(sub[:b], 1) == len(sub) - b


class TestCounter:
    def test_counter_is_logarithmically_bounded(self):
        rng = random.Random(5)
        for _ in range(25):
            n = rng.randint(2, 600)
            t = bytes(rng.choices(b"ab", k=n))
            r = run_fast(t, engine="pure")
            assert r.smaller_total <= n * math.ceil(math.log2(n + 1)), (
                n,
                r.smaller_total,
            )

    def test_counter_zero_for_distinct_letters(self):
        # every internal pairing happens below the root, which distinct
        # letters do not produce
        assert run_fast("abcdefg", engine="pure").smaller_total == 0


@pytest.mark.skipif(not HAVE_NUMBA, reason="compiled engine unavailable")
class TestKernelTwin:
    def test_matches_pure_on_random_texts(self):
        rng = random.Random(11)
        for _ in range(50):
            n = rng.randint(1, 900)
            sigma = rng.choice([2, 3, 26])
            t = bytes(rng.choices(b"abcdefghijklmnopqrstuvwxyz"[:sigma], k=n))
            rp = run_fast(t, engine="pure")
            ra = run_fast(t, engine="accel")
            assert rp.spans == ra.spans, t
            assert rp.smaller_total == ra.smaller_total, t

    def test_matches_pure_on_structured_texts(self):
        cases = [
            b"a" * 700,
            b"ab" * 350,
            b"aab" * 200,
            bytes([0, 255, 7, 7, 0]) * 80,
            bytes(range(256)),
            b"abracadabra" * 60,
        ]
        for t in cases:
            rp = run_fast(t, engine="pure")
            ra = run_fast(t, engine="accel")
            assert rp.spans == ra.spans, t
            assert rp.smaller_total == ra.smaller_total, t

    def test_auto_uses_kernel_past_threshold(self):
        t = bytes(random.Random(0).choices(b"ab", k=5000))
        r = run_fast(t, engine="auto")
        assert r.engine == "accel"
        assert r.spans == run_fast(t, engine="pure").spans
