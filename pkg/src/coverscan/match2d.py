"""Exact 1D and 2D pattern matching.

The 2D matcher follows Bird's scheme: an Aho-Corasick automaton over the
distinct pattern rows names every text position with the id of the pattern
row ending there, then one KMP automaton per text column searches for the
pattern's sequence of row names.  Both passes stream row by row, so the mask
can be consumed incrementally (see :func:`iter_mask_rows`).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterator, Sequence

from .grid import DimensionError, Image, Mask

#: Row name for text positions where no pattern row ends.
NO_ROW = -1


@dataclass(frozen=True)
class KmpAutomaton:
    """A pattern and its border table.

    ``failure[i]`` is the length of the longest proper border of
    ``pattern[:i + 1]``.
    """

    pattern: tuple
    failure: tuple[int, ...]


def build_kmp(pattern: Sequence) -> KmpAutomaton:
    pattern = tuple(pattern)
    m = len(pattern)
    if m == 0:
        raise ValueError("cannot build a KMP automaton for an empty pattern")
    failure = [0] * m
    k = 0
    for i in range(1, m):
        c = pattern[i]
        while k and pattern[k] != c:
            k = failure[k - 1]
        if pattern[k] == c:
            k += 1
        failure[i] = k
    return KmpAutomaton(pattern, tuple(failure))


def kmp_find_all(text: Sequence, aut: KmpAutomaton) -> list[int]:
    """Ascending 0-based end indices of every occurrence of ``aut.pattern``."""
    pat, fail = aut.pattern, aut.failure
    m = len(pat)
    ends = []
    k = 0
    for i, c in enumerate(text):
        while k and pat[k] != c:
            k = fail[k - 1]
        if pat[k] == c:
            k += 1
            if k == m:
                ends.append(i)
                k = fail[m - 1]
    return ends


@dataclass(frozen=True)
class RowAutomaton:
    """Aho-Corasick automaton over the distinct rows of a pattern.

    All pattern rows share one length, so at most one distinct row can end
    at a given text position and only terminal nodes carry an output; no
    dictionary-suffix links are needed.
    """

    goto: tuple[dict[int, int], ...]
    fail: tuple[int, ...]
    output: tuple[int, ...]
    row_names: tuple[int, ...]

    @property
    def distinct_rows(self) -> int:
        return max(self.row_names) + 1

    def name_row(self, row: Sequence[int]) -> list[int]:
        """Row name ending at each column of ``row`` or :data:`NO_ROW`."""
        goto, fail, output = self.goto, self.fail, self.output
        names = []
        append = names.append
        state = 0
        for c in row:
            while state and c not in goto[state]:
                state = fail[state]
            state = goto[state].get(c, 0)
            append(output[state])
        return names


def build_row_automaton(rows: Sequence[Sequence[int]]) -> RowAutomaton:
    classes: dict[tuple, int] = {}
    row_names = []
    for r in rows:
        # dict lookup hashes the row and confirms with full equality
        row_names.append(classes.setdefault(tuple(r), len(classes)))

    goto: list[dict[int, int]] = [{}]
    output = [NO_ROW]
    for row, name in classes.items():
        node = 0
        for c in row:
            nxt = goto[node].get(c)
            if nxt is None:
                nxt = len(goto)
                goto[node][c] = nxt
                goto.append({})
                output.append(NO_ROW)
            node = nxt
        output[node] = name

    # breadth-first so every node's suffix link is final before its children
    fail = [0] * len(goto)
    queue = deque(goto[0].values())
    while queue:
        node = queue.popleft()
        for c, child in goto[node].items():
            f = fail[node]
            while f and c not in goto[f]:
                f = fail[f]
            fail[child] = goto[f].get(c, 0) if node else 0
            queue.append(child)
    return RowAutomaton(tuple(goto), tuple(fail), tuple(output), tuple(row_names))


def _check_fits(text: Image, pattern: Image) -> None:
    if pattern.height > text.height or pattern.width > text.width:
        raise DimensionError(
            f"pattern {pattern.height}x{pattern.width} larger than text "
            f"{text.height}x{text.width}"
        )


def pattern_rows(text: Image, pattern: Image) -> tuple[tuple[int, ...], ...]:
    """Pattern rows expressed in the text's symbol ids.

    Tokens the text never uses get negative ids, which match nothing.
    """
    if pattern.alphabet == text.alphabet:
        return pattern.rows
    ids = {}
    for k, tok in enumerate(pattern.alphabet.tokens):
        ids[k] = text.alphabet.id_of(tok) if tok in text.alphabet else -2 - k
    return tuple(tuple(ids[c] for c in row) for row in pattern.rows)


def iter_stage_rows(text: Image, pattern: Image) -> Iterator[list[bool]]:
    """Yield, for each text row ``i``, the flags ``stage(i, j)``.

    ``stage(i, j)`` is true iff an occurrence of ``pattern`` has its
    bottom-right corner at ``(i, j)``.
    """
    _check_fits(text, pattern)
    h, w = pattern.height, pattern.width
    W = text.width
    prows = pattern_rows(text, pattern)
    if text.height == 1:
        ends = set(kmp_find_all(text.rows[0], build_kmp(prows[0])))
        yield [j in ends for j in range(W)]
        return

    rows_aut = build_row_automaton(prows)
    col_aut = build_kmp(rows_aut.row_names)
    pnames, pfail = col_aut.pattern, col_aut.failure
    reset = pfail[h - 1]
    states = [0] * W
    for row in text.rows:
        names = rows_aut.name_row(row)
        stage = [False] * W
        for j in range(w - 1, W):
            n = names[j]
            if n == NO_ROW:
                states[j] = 0
                continue
            k = states[j]
            while k and pnames[k] != n:
                k = pfail[k - 1]
            if pnames[k] == n:
                k += 1
                if k == h:
                    stage[j] = True
                    k = reset
            states[j] = k
        yield stage


def iter_mask_rows(text: Image, pattern: Image) -> Iterator[list[bool]]:
    """Yield the rows of the maximal mask one at a time, top to bottom.

    Mask row ``i`` is available as soon as text row ``i + h - 1`` has been
    scanned, which lets callers stop early without paying for the rest.
    """
    h, w = pattern.height, pattern.width
    W = text.width
    tail = [False] * (w - 1)
    emitted = 0
    for r, stage in enumerate(iter_stage_rows(text, pattern)):
        if r >= h - 1:
            yield stage[w - 1:] + tail
            emitted += 1
    for _ in range(text.height - emitted):
        yield [False] * W


def build_maximal_mask(text: Image, pattern: Image) -> Mask:
    """Mask whose bit ``(i, j)`` is set iff ``pattern`` occurs with top-left ``(i, j)``."""
    bits = []
    for row in iter_mask_rows(text, pattern):
        bits.extend(row)
    return Mask(text.height, text.width, tuple(bits), pattern.height, pattern.width)


def naive_maximal_mask(text: Image, pattern: Image) -> Mask:
    """Direct ``O(WHwh)`` comparison at every offset; kept as a reference."""
    _check_fits(text, pattern)
    H, W = text.shape
    h, w = pattern.shape
    trows, prows = text.rows, pattern_rows(text, pattern)
    bits = [False] * (H * W)
    for i in range(H - h + 1):
        for j in range(W - w + 1):
            bits[i * W + j] = all(trows[i + y][j:j + w] == prows[y] for y in range(h))
    return Mask(H, W, tuple(bits), h, w)
