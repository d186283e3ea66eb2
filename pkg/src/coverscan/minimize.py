"""Minimal image cover search under a size metric, with cover-based pruning."""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import islice
from typing import Callable, Iterator

from .cover1d import cover_indicator
from .decide import is_cover
from .grid import Image, Mask, sub_image
from .match2d import build_maximal_mask

Candidate = tuple[int, int]


@dataclass(frozen=True)
class Metric:
    """Evaluation of a candidate's ``(h, w)`` dimensions; smaller is better."""

    name: str
    evaluate: Callable[[int, int], float]
    cost_note: str = "O(1)"

    def __call__(self, h: int, w: int) -> float:
        return self.evaluate(h, w)

    @classmethod
    def custom(cls, evaluate: Callable[[int, int], float], name: str = "custom",
               cost_note: str = "unspecified") -> Metric:
        return cls(name, evaluate, cost_note)


AREA = Metric("area", lambda h, w: h * w)
L1 = Metric("l1", lambda h, w: h + w)
LINF = Metric("linf", lambda h, w: max(h, w))
METRICS = {m.name: m for m in (AREA, L1, LINF)}


@dataclass(frozen=True)
class PruneMatrix:
    """Boolean ``H x W`` matrices, indexed ``[h - 1][w - 1]``.

    ``row_covers[i][j]``: row ``i`` is covered by its length ``j + 1`` prefix.
    ``col_covers[i][j]``: column ``j`` is covered by its height ``i + 1`` prefix.
    ``rows_cum`` ANDs ``row_covers`` down each column, ``cols_cum`` ANDs
    ``col_covers`` along each row, and ``survivors`` is their pointwise AND.
    A zero in ``survivors`` rules the candidate out.
    """

    row_covers: tuple[tuple[bool, ...], ...]
    col_covers: tuple[tuple[bool, ...], ...]
    rows_cum: tuple[tuple[bool, ...], ...]
    cols_cum: tuple[tuple[bool, ...], ...]
    survivors: tuple[tuple[bool, ...], ...]

    def allows(self, h: int, w: int) -> bool:
        return self.survivors[h - 1][w - 1]

    def popcount(self) -> int:
        return sum(map(sum, self.survivors))


def build_prune_matrix(text: Image) -> PruneMatrix:
    # a cover's occurrences along row 0 also tile each of its first h rows
    # with that row's own w-prefix; likewise for the first w columns
    S = [cover_indicator(row).bits for row in text.rows]
    col_bits = [cover_indicator(col).bits for col in text.columns]
    S_t = [tuple(col[i] for col in col_bits) for i in range(text.height)]

    S1 = [S[0]]
    for i in range(1, text.height):
        S1.append(tuple(a and b for a, b in zip(S[i], S1[-1])))
    S1t = []
    for row in S_t:
        acc, out = True, []
        for b in row:
            acc = acc and b
            out.append(acc)
        S1t.append(tuple(out))
    star = tuple(tuple(a and b for a, b in zip(r1, r2)) for r1, r2 in zip(S1, S1t))
    return PruneMatrix(tuple(S), tuple(S_t), tuple(S1), tuple(S1t), star)


def prune_statistics(text: Image) -> dict[str, int]:
    return {
        "unpruned_count": build_prune_matrix(text).popcount(),
        "total": text.height * text.width,
    }


def enumerate_candidates(shape: tuple[int, int], metric: Metric = AREA) -> list[Candidate]:
    """All ``(h, w)`` sorted by ``(metric(h, w), h, w)``."""
    H, W = shape
    keyed = []
    for h in range(1, H + 1):
        for w in range(1, W + 1):
            v = metric(h, w)
            if isinstance(v, float) and math.isnan(v):
                raise ValueError(f"metric {metric.name} returned NaN for {(h, w)}")
            keyed.append((v, h, w))
    keyed.sort()
    return [(h, w) for _, h, w in keyed]


@dataclass(frozen=True)
class CoverReport:
    best: Candidate
    eval_value: float
    candidates_checked: int
    candidates_pruned: int
    mask: Mask
    metric: str = "area"
    eval_cost: str = "O(1)"


def _thread_count(threads: int | None) -> int:
    if threads is None:
        threads = int(os.environ.get("COVERSCAN_THREADS", "0") or 0)
    return max(threads, 0)


def minimal_cover(
    text: Image,
    metric: Metric = AREA,
    use_prune: bool = True,
    admissible: Callable[[int, int], bool] | None = None,
    threads: int | None = None,
) -> CoverReport:
    """Smallest cover of ``text`` by ``(metric, h, w)``.

    Candidates are visited in sorted order and the first one that covers
    wins.  ``admissible`` restricts the candidate set; the full-size
    candidate must stay admissible since it is the guaranteed fallback.
    ``threads`` (default: ``COVERSCAN_THREADS``, 0 = sequential) decides
    candidates in blocks of that size concurrently; the winner is the same
    either way, only the two counters may grow by the block tail.
    """
    H, W = text.shape
    if admissible is not None and not admissible(H, W):
        raise ValueError("the full-size candidate must be admissible")
    prune = build_prune_matrix(text) if use_prune else None
    pruned = 0

    def survivors() -> Iterator[Candidate]:
        nonlocal pruned
        for h, w in enumerate_candidates(text.shape, metric):
            if admissible is not None and not admissible(h, w):
                continue
            if prune is not None and not prune.allows(h, w):
                pruned += 1
                continue
            yield h, w

    checked = 0
    best = None
    n_threads = _thread_count(threads)
    if n_threads <= 1:
        for cand in survivors():
            checked += 1
            if is_cover(text, *cand).covered:
                best = cand
                break
    else:
        stream = survivors()
        with ThreadPoolExecutor(max_workers=n_threads) as pool:
            while best is None:
                block = list(islice(stream, n_threads))
                verdicts = pool.map(lambda c: is_cover(text, *c).covered, block)
                checked += len(block)
                best = next((c for c, ok in zip(block, verdicts) if ok), None)
    assert best is not None, "the full-size candidate always covers"
    h, w = best
    return CoverReport(
        best=best,
        eval_value=metric(h, w),
        candidates_checked=checked,
        candidates_pruned=pruned,
        mask=build_maximal_mask(text, sub_image(text, h, w)),
        metric=metric.name,
        eval_cost=metric.cost_note,
    )
