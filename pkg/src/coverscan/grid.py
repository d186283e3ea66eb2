"""Dense immutable grids shared by every other module.

Coordinates are 0-based ``(row, col)`` pairs throughout the package.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import AbstractSet, Hashable, Iterable, Sequence

PointSet = frozenset[tuple[int, int]]


class BoundsError(IndexError):
    """A coordinate or a sub-grid size falls outside its grid."""


class DimensionError(ValueError):
    """A pattern does not fit inside the text it is matched against."""


@dataclass(frozen=True)
class Alphabet:
    """Bijection between symbol tokens and dense integer ids."""

    tokens: tuple[Hashable, ...]
    _ids: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        ids = {tok: i for i, tok in enumerate(self.tokens)}
        if len(ids) != len(self.tokens):
            raise ValueError("alphabet tokens must be distinct")
        object.__setattr__(self, "_ids", ids)

    @classmethod
    def from_tokens(cls, tokens: Iterable[Hashable]) -> Alphabet:
        """Intern tokens in first-seen order, ignoring repeats."""
        return cls(tuple(dict.fromkeys(tokens)))

    def __len__(self) -> int:
        return len(self.tokens)

    def __contains__(self, token: object) -> bool:
        return token in self._ids

    def id_of(self, token: Hashable) -> int:
        try:
            return self._ids[token]
        except KeyError:
            raise KeyError(f"symbol {token!r} is not in the alphabet") from None

    def token_of(self, symbol_id: int) -> Hashable:
        return self.tokens[symbol_id]


@dataclass(frozen=True)
class Image:
    """An ``height x width`` grid of symbol ids over an interned alphabet."""

    height: int
    width: int
    cells: tuple[int, ...]
    alphabet: Alphabet

    def __post_init__(self) -> None:
        if self.height < 1 or self.width < 1:
            raise ValueError(f"image dimensions must be positive, got {self.height}x{self.width}")
        if len(self.cells) != self.height * self.width:
            raise ValueError(
                f"expected {self.height * self.width} cells, got {len(self.cells)}"
            )
        n = len(self.alphabet)
        for c in set(self.cells):
            if not 0 <= c < n:
                raise ValueError(f"symbol id {c} is not registered in the alphabet")

    @classmethod
    def from_rows(
        cls, rows: Sequence[Sequence[Hashable]], alphabet: Alphabet | None = None
    ) -> Image:
        """Build an image from a grid of tokens.

        A string row is split into characters, so ``["aba", "bab"]`` works.
        Without an explicit ``alphabet`` the tokens are interned in
        row-major first-seen order.
        """
        rows = [list(r) for r in rows]
        if not rows or not rows[0]:
            raise ValueError("image must have at least one row and one column")
        width = len(rows[0])
        for i, r in enumerate(rows):
            if len(r) != width:
                raise ValueError(f"row {i} has {len(r)} cells, expected {width}")
        flat = [tok for r in rows for tok in r]
        if alphabet is None:
            alphabet = Alphabet.from_tokens(flat)
        cells = tuple(alphabet.id_of(tok) for tok in flat)
        return cls(len(rows), width, cells, alphabet)

    @property
    def shape(self) -> tuple[int, int]:
        return self.height, self.width

    @cached_property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        w = self.width
        return tuple(self.cells[i * w:(i + 1) * w] for i in range(self.height))

    @cached_property
    def columns(self) -> tuple[tuple[int, ...], ...]:
        return tuple(zip(*self.rows))

    def __getitem__(self, pos: tuple[int, int]) -> int:
        i, j = pos
        if not (0 <= i < self.height and 0 <= j < self.width):
            raise BoundsError(f"position {pos} outside {self.height}x{self.width} image")
        return self.cells[i * self.width + j]

    def token_rows(self) -> list[list[Hashable]]:
        tok = self.alphabet.tokens
        return [[tok[c] for c in row] for row in self.rows]

    def transpose(self) -> Image:
        cells = tuple(c for col in self.columns for c in col)
        return Image(self.width, self.height, cells, self.alphabet)

    def same_content(self, other: Image) -> bool:
        """Token-level equality, valid across images with different alphabets."""
        return self.shape == other.shape and self.token_rows() == other.token_rows()


@dataclass(frozen=True)
class Mask:
    """Binary grid marking occurrence start positions of an ``h x w`` pattern."""

    height: int
    width: int
    bits: tuple[bool, ...]
    pattern_height: int = 1
    pattern_width: int = 1

    def __post_init__(self) -> None:
        if len(self.bits) != self.height * self.width:
            raise ValueError(f"expected {self.height * self.width} bits, got {len(self.bits)}")
        max_i = self.height - self.pattern_height
        max_j = self.width - self.pattern_width
        for k, b in enumerate(self.bits):
            if b:
                i, j = divmod(k, self.width)
                if i > max_i or j > max_j:
                    raise BoundsError(
                        f"occurrence at {(i, j)} of a {self.pattern_height}x"
                        f"{self.pattern_width} pattern does not fit in "
                        f"{self.height}x{self.width}"
                    )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int | bool]], pattern_height: int = 1,
                  pattern_width: int = 1) -> Mask:
        bits = tuple(bool(b) for r in rows for b in r)
        return cls(len(rows), len(rows[0]), bits, pattern_height, pattern_width)

    def __getitem__(self, pos: tuple[int, int]) -> bool:
        i, j = pos
        return self.bits[i * self.width + j]

    def to_rows(self) -> list[list[int]]:
        w = self.width
        return [[int(b) for b in self.bits[i * w:(i + 1) * w]] for i in range(self.height)]

    def count(self) -> int:
        return sum(self.bits)


def mask_from_set(points: AbstractSet[tuple[int, int]], height: int, width: int) -> Mask:
    """Characteristic-function image of ``points`` on a ``height x width`` grid."""
    bits = [False] * (height * width)
    for i, j in points:
        if not (0 <= i < height and 0 <= j < width):
            raise BoundsError(f"point {(i, j)} outside {height}x{width} grid")
        bits[i * width + j] = True
    return Mask(height, width, tuple(bits))


def set_from_mask(mask: Mask) -> PointSet:
    w = mask.width
    return frozenset(divmod(k, w) for k, b in enumerate(mask.bits) if b)


def sub_image(image: Image, h: int, w: int) -> Image:
    """Top-left ``h x w`` corner of ``image``, sharing its alphabet."""
    if not (1 <= h <= image.height and 1 <= w <= image.width):
        raise BoundsError(f"sub-image {h}x{w} out of range for {image.height}x{image.width}")
    cells = tuple(c for row in image.rows[:h] for c in row[:w])
    return Image(h, w, cells, image.alphabet)
