"""Decide whether the top-left ``h x w`` corner of an image covers it."""

from __future__ import annotations

from dataclasses import dataclass

from .grid import Image, sub_image
from .match2d import iter_mask_rows, naive_maximal_mask

# row/col of an absent support; below every clamped window bound
_NONE = -(1 << 62)


@dataclass(frozen=True)
class CoverDecision:
    covered: bool
    witness: tuple[int, int] | None = None
    reason: str | None = None

    def __post_init__(self) -> None:
        if self.covered != (self.witness is None):
            raise ValueError("a witness is present exactly when the verdict is uncovered")

    def __bool__(self) -> bool:
        return self.covered


def _oversized(text: Image, h: int, w: int) -> CoverDecision | None:
    if h < 1 or w < 1:
        raise ValueError(f"candidate dimensions must be positive, got {h}x{w}")
    if h > text.height or w > text.width:
        # no occurrence fits, so the very first cell is already unsupported
        return CoverDecision(
            False, (0, 0),
            f"candidate {h}x{w} exceeds text {text.height}x{text.width}",
        )
    return None


def is_cover(text: Image, h: int, w: int) -> CoverDecision:
    """Check whether ``sub_image(text, h, w)`` covers ``text`` in ``O(HW)``.

    One row-major pass keeps, for every cell, its nearest support ``N``:
    the occurrence start inside the cell's ``h x w`` window that is largest
    in (row, col) order.  ``N`` of a cell is always the north neighbour's
    ``N``, the west neighbour's ``N``, or the cell itself, so each step is
    constant time.  Mask rows are consumed as they are produced and the pass
    stops at the first cell without support, which is the returned witness.
    """
    early = _oversized(text, h, w)
    if early is not None:
        return early
    W = text.width
    north_r = [_NONE] * W
    north_c = [_NONE] * W
    for i, mrow in enumerate(iter_mask_rows(text, sub_image(text, h, w))):
        low_r = i - h + 1
        west_r = west_c = _NONE
        for j in range(W):
            if mrow[j]:
                r, c = i, j
            else:
                # a neighbour's support already satisfies all but one bound
                r, c = north_r[j], north_c[j]
                if r < low_r:
                    r = c = _NONE
                if west_c >= j - w + 1 and (west_r, west_c) >= (r, c):
                    r, c = west_r, west_c
                if r == _NONE:
                    return CoverDecision(False, (i, j))
            north_r[j] = west_r = r
            north_c[j] = west_c = c
    return CoverDecision(True)


def coverage_paint_oracle(text: Image, h: int, w: int) -> CoverDecision:
    """Reference decision: stamp every occurrence window and look for holes.

    Quadratic in the worst case; use it to validate :func:`is_cover`.
    """
    early = _oversized(text, h, w)
    if early is not None:
        return early
    H, W = text.shape
    mask = naive_maximal_mask(text, sub_image(text, h, w))
    painted = [[False] * W for _ in range(H)]
    for i in range(H):
        for j in range(W):
            if mask[i, j]:
                for y in range(i, i + h):
                    painted[y][j:j + w] = [True] * w
    for i in range(H):
        for j in range(W):
            if not painted[i][j]:
                return CoverDecision(False, (i, j))
    return CoverDecision(True)


def covers_with(text: Image, pattern: Image) -> CoverDecision:
    """Decide for an explicit pattern, which must equal the text's corner."""
    early = _oversized(text, pattern.height, pattern.width)
    if early is not None:
        return early
    if not pattern.same_content(sub_image(text, pattern.height, pattern.width)):
        # cell (0, 0) can only be covered by an occurrence starting there
        return CoverDecision(False, (0, 0), "pattern differs from top-left sub-image")
    return is_cover(text, pattern.height, pattern.width)
