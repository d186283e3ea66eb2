"""Wang tiles as 3x3 images, and minimal periodic patterns of a tiling."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Literal, Sequence

from .cover1d import minimal_cover_1d
from .grid import Image
from .minimize import AREA, minimal_cover

BLACK = "BLACK"
GRAY = "GRAY"
RESERVED = frozenset({BLACK, GRAY})


class TilingError(ValueError):
    """Invalid tile colours or an edge whose colours disagree."""


@dataclass(frozen=True)
class WangTile:
    north: Hashable
    east: Hashable
    south: Hashable
    west: Hashable

    def __post_init__(self) -> None:
        for side in ("north", "east", "south", "west"):
            if getattr(self, side) in RESERVED:
                raise TilingError(
                    f"{side} colour {getattr(self, side)!r} collides with a reserved symbol"
                )


@dataclass(frozen=True)
class EdgeViolation:
    row: int
    col: int
    direction: Literal["east", "south"]
    first: Hashable
    second: Hashable

    def __str__(self) -> str:
        if self.direction == "east":
            other = (self.row, self.col + 1)
            return (f"tile {(self.row, self.col)} east={self.first!r} does not match "
                    f"tile {other} west={self.second!r}")
        other = (self.row + 1, self.col)
        return (f"tile {(self.row, self.col)} south={self.first!r} does not match "
                f"tile {other} north={self.second!r}")


@dataclass(frozen=True)
class WangTiling:
    """A ``rows x cols`` grid of tiles; adjacency is checked on demand."""

    tiles: tuple[tuple[WangTile, ...], ...]

    def __post_init__(self) -> None:
        if not self.tiles or not self.tiles[0]:
            raise TilingError("a tiling needs at least one tile")
        if any(len(r) != len(self.tiles[0]) for r in self.tiles):
            raise TilingError("tiling rows differ in length")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[WangTile]]) -> WangTiling:
        return cls(tuple(tuple(r) for r in rows))

    @property
    def rows(self) -> int:
        return len(self.tiles)

    @property
    def cols(self) -> int:
        return len(self.tiles[0])

    def violations(self) -> list[EdgeViolation]:
        found = []
        for i, row in enumerate(self.tiles):
            for j, t in enumerate(row):
                if j + 1 < self.cols and t.east != row[j + 1].west:
                    found.append(EdgeViolation(i, j, "east", t.east, row[j + 1].west))
                if i + 1 < self.rows and t.south != self.tiles[i + 1][j].north:
                    found.append(EdgeViolation(i, j, "south", t.south, self.tiles[i + 1][j].north))
        return found

    def validate(self) -> None:
        bad = self.violations()
        if bad:
            raise TilingError(str(bad[0]))


def _tile_block(t: WangTile) -> list[list[Hashable]]:
    return [
        [BLACK, t.north, BLACK],
        [t.west, GRAY, t.east],
        [BLACK, t.south, BLACK],
    ]


def encode_tile(tile: WangTile) -> Image:
    return Image.from_rows(_tile_block(tile))


def decode_tile(image: Image) -> WangTile:
    if image.shape != (3, 3):
        raise TilingError(f"a tile image is 3x3, got {image.height}x{image.width}")
    g = image.token_rows()
    if [g[0][0], g[0][2], g[2][0], g[2][2], g[1][1]] != [BLACK] * 4 + [GRAY]:
        raise TilingError("structural pixels of the tile image are corrupted")
    return WangTile(north=g[0][1], east=g[1][2], south=g[2][1], west=g[1][0])


def encode_tiling(tiling: WangTiling) -> Image:
    """Block-concatenate the tile images; raises on the first bad edge."""
    tiling.validate()
    grid = []
    for row in tiling.tiles:
        blocks = [_tile_block(t) for t in row]
        for y in range(3):
            grid.append([tok for b in blocks for tok in b[y]])
    return Image.from_rows(grid)


def _tile_aligned(h: int, w: int) -> bool:
    return h % 3 == 0 and w % 3 == 0


def minimal_wang_cover(
    tiling: WangTiling, route: Literal["auto", "image", "vector"] = "auto"
) -> tuple[int, int]:
    """Smallest-area block of whole tiles whose copies cover the tiling.

    Returned in tile units as ``(rows, cols)``.  A single-row tiling is a
    string over tile symbols, so ``"auto"`` takes the 1D route there; the
    ``"image"`` route works on the encoded image for any shape.
    """
    tiling.validate()
    if route == "auto":
        route = "vector" if tiling.rows == 1 else "image"
    if route == "vector":
        if tiling.rows != 1:
            raise ValueError("the vector route needs a single-row tiling")
        return 1, minimal_cover_1d(tiling.tiles[0])
    if route != "image":
        raise ValueError(f"unknown route {route!r}")
    report = minimal_cover(encode_tiling(tiling), AREA, admissible=_tile_aligned)
    h, w = report.best
    return h // 3, w // 3
