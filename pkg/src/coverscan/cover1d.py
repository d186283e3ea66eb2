"""Linear-time computation of every prefix cover of a string."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .match2d import build_kmp


@dataclass(frozen=True)
class CoverIndicator:
    """``bits[l - 1]`` is true iff the length-``l`` prefix covers the string."""

    bits: tuple[bool, ...]

    @property
    def length(self) -> int:
        return len(self.bits)

    def lengths(self) -> list[int]:
        return [k + 1 for k, b in enumerate(self.bits) if b]

    def __getitem__(self, length: int) -> bool:
        return self.bits[length - 1]


def cover_indicator(s: Sequence) -> CoverIndicator:
    """Flag every prefix length that covers ``s``, in ``O(len(s))``.

    Occurrences of the length-``l`` prefix end exactly at the positions in
    the subtree of ``l`` in the failure-link tree.  Candidates are the
    border chain of ``s``; walking it from the shortest border upward, each
    step deletes a disjoint batch of positions from a doubly linked list, so
    the largest gap between surviving occurrence ends only grows and is
    maintained in amortised constant time.
    """
    n = len(s)
    if n == 0:
        raise ValueError("cannot compute covers of an empty string")
    fail = build_kmp(s).failure
    parent = [0] + [fail[i - 1] for i in range(1, n + 1)]

    chain = []
    b = n
    while b:
        chain.append(b)
        b = parent[b]
    chain.reverse()
    on_chain = [False] * (n + 1)
    for b in chain:
        on_chain[b] = True

    # nearest chain ancestor-or-self; parents precede children in index order
    anchor = [0] * (n + 1)
    for v in range(1, n + 1):
        anchor[v] = v if on_chain[v] else anchor[parent[v]]
    batches: dict[int, list[int]] = {}
    for v in range(1, n + 1):
        batches.setdefault(anchor[v], []).append(v)

    # position 0 is a permanent left sentinel for the first occurrence
    prev = list(range(-1, n))
    nxt = list(range(1, n + 2))
    gap = 1
    bits = [False] * n

    def drop(v: int) -> None:
        nonlocal gap
        p, q = prev[v], nxt[v]
        nxt[p] = q
        prev[q] = p
        if q - p > gap:
            gap = q - p

    for v in batches.get(0, ()):
        drop(v)
    for b in chain:
        if gap <= b:
            bits[b - 1] = True
        if b < n:
            for v in batches[b]:
                drop(v)
    return CoverIndicator(tuple(bits))


def minimal_cover_1d(s: Sequence) -> int:
    """Length of the shortest prefix of ``s`` that covers it."""
    bits = cover_indicator(s).bits
    return bits.index(True) + 1


def naive_cover_indicator(s: Sequence) -> CoverIndicator:
    """Quadratic reference: paint every occurrence of every prefix."""
    n = len(s)
    if n == 0:
        raise ValueError("cannot compute covers of an empty string")
    s = list(s)
    bits = []
    for m in range(1, n + 1):
        pre = s[:m]
        painted = [False] * n
        for i in range(n - m + 1):
            if s[i:i + m] == pre:
                painted[i:i + m] = [True] * m
        bits.append(all(painted))
    return CoverIndicator(tuple(bits))
