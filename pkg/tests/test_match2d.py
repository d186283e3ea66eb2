import random
import statistics
import time

import pytest
from hypothesis import given
from hypothesis import strategies as st

from coverscan.grid import DimensionError, Image, Mask, sub_image
from coverscan.match2d import (
    NO_ROW,
    build_kmp,
    build_maximal_mask,
    build_row_automaton,
    iter_mask_rows,
    kmp_find_all,
)

from oracles import mixed_grid, naive_ends, naive_mask, random_binary_image, random_grid


@pytest.mark.parametrize(
    "pattern, failure",
    [("aba", [0, 0, 1]), ("aaaa", [0, 1, 2, 3]), ("abcd", [0, 0, 0, 0])],
)
def test_build_kmp(pattern, failure):
    assert list(build_kmp(pattern).failure) == failure


def test_build_kmp_rejects_empty():
    with pytest.raises(ValueError):
        build_kmp("")


@given(st.text("ab", min_size=1, max_size=30))
def test_failure_is_longest_proper_border(s):
    fail = build_kmp(s).failure
    for i, f in enumerate(fail):
        prefix = s[: i + 1]
        longest = max(k for k in range(i + 1) if prefix[:k] == prefix[i + 1 - k:])
        assert f == longest


@pytest.mark.parametrize(
    "text, pattern, ends",
    [
        ("abaababaaba", "aba", [2, 5, 7, 10]),
        ("bbbb", "a", []),
        ("abcab", "abcab", [4]),
    ],
)
def test_kmp_find_all(text, pattern, ends):
    assert naive_ends(text, pattern) == ends
    assert kmp_find_all(text, build_kmp(pattern)) == ends


@given(st.text("ab", max_size=40), st.text("ab", min_size=1, max_size=5))
def test_kmp_matches_naive_scan(text, pattern):
    assert kmp_find_all(text, build_kmp(pattern)) == naive_ends(text, pattern)


def test_row_automaton_names_distinct_rows():
    aut = build_row_automaton([(0, 1, 0), (1, 1, 1), (0, 1, 0)])
    assert aut.row_names == (0, 1, 0)
    assert aut.distinct_rows == 2
    # text row 0 1 0 1 1 1: row 0 ends at col 2, row 1 ends at col 5
    assert aut.name_row([0, 1, 0, 1, 1, 1]) == [NO_ROW, NO_ROW, 0, NO_ROW, NO_ROW, 1]


@given(st.lists(st.text("ab", min_size=3, max_size=3), min_size=1, max_size=4),
       st.text("ab", max_size=25))
def test_row_automaton_emits_exactly_row_ends(prows, text):
    aut = build_row_automaton(prows)
    names = aut.name_row(text)
    for j, n in enumerate(names):
        ending = [k for k, r in enumerate(prows) if j >= 2 and text[j - 2:j + 1] == r]
        if ending:
            assert n == aut.row_names[ending[0]]
        else:
            assert n == NO_ROW


def test_mask_self_occurrence():
    t = Image.from_rows(["abc", "cab"])
    m = build_maximal_mask(t, t)
    assert m.to_rows() == [[1, 0, 0], [0, 0, 0]]


def test_mask_unary():
    t = Image.from_rows(["aaa"] * 3)
    assert build_maximal_mask(t, sub_image(t, 1, 1)).to_rows() == [[1] * 3] * 3


def test_mask_diagonal():
    t = Image.from_rows(["ab", "ba"])
    assert build_maximal_mask(t, sub_image(t, 1, 1)).to_rows() == [[1, 0], [0, 1]]


def test_mask_rejects_oversized_pattern():
    t = Image.from_rows(["ab"])
    with pytest.raises(DimensionError):
        build_maximal_mask(t, Image.from_rows(["ab", "ab"]))


def test_pattern_with_foreign_alphabet():
    t = Image.from_rows(["abab", "baba"])
    p = Image.from_rows(["ba", "ab"])
    assert build_maximal_mask(t, p).to_rows() == [[0, 1, 0, 0], [0, 0, 0, 0]]
    absent = Image.from_rows(["z"])
    assert build_maximal_mask(t, absent).count() == 0


def test_oracle_equivalence_all_subshapes():
    rng = random.Random(1202)
    for _ in range(60):
        grid = random_grid(rng, 12, 12, "ab")
        t = Image.from_rows(grid)
        for h in range(1, 13):
            for w in range(1, 13):
                pat = [row[:w] for row in grid[:h]]
                want = naive_mask(grid, pat)
                got = build_maximal_mask(t, sub_image(t, h, w))
                assert got.to_rows() == [[int(b) for b in r] for r in want], (h, w)


def test_oracle_equivalence_random_pairs_and_maximality():
    rng = random.Random(77)
    for _ in range(1000):
        grid = mixed_grid(rng, 12)
        H, W = len(grid), len(grid[0])
        h, w = rng.randint(1, H), rng.randint(1, W)
        if rng.random() < 0.6:
            i, j = rng.randint(0, H - h), rng.randint(0, W - w)
            pat = [row[j:j + w] for row in grid[i:i + h]]
        else:
            pat = random_grid(rng, h, w, "ab")
        m = build_maximal_mask(Image.from_rows(grid), Image.from_rows(pat))
        want = naive_mask(grid, pat)
        assert m.to_rows() == [[int(b) for b in r] for r in want]
        # the constructor enforces the fit invariant on every produced mask
        assert isinstance(m, Mask) and (m.pattern_height, m.pattern_width) == (h, w)


def test_mask_rows_stream_in_order():
    t = Image.from_rows(["aab", "aab", "aab"])
    rows = list(iter_mask_rows(t, sub_image(t, 2, 1)))
    assert rows == [[True, True, False], [True, True, False], [False, False, False]]


def _median_time(fn, repeats=3):
    samples = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        samples.append(time.perf_counter() - t0)
    return statistics.median(samples)


@pytest.mark.slow
def test_mask_construction_scales_linearly():
    # doubling the area at a fixed pattern should at most ~double the time
    rng = random.Random(5)
    shapes = [(256, 256), (256, 512), (512, 512), (512, 1024), (1024, 1024)]
    times = []
    for H, W in shapes:
        t = random_binary_image(rng, H, W)
        p = random_binary_image(rng, 3, 3)
        times.append(_median_time(lambda: build_maximal_mask(t, p)))
    ratios = [b / a for a, b in zip(times, times[1:])]
    assert max(ratios) <= 3.0, (times, ratios)
