"""Readers and writers for grid, plain-PGM and Wang tiling files.

Grid file::

    H W
    <H lines of W whitespace-separated tokens>

Wang file::

    tiles
    <name> <north> <east> <south> <west>     (one line per tile)
    tiling
    <a grid file whose tokens are tile names>
"""

from __future__ import annotations

from pathlib import Path

from .grid import Image
from .wang import TilingError, WangTile, WangTiling


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None, source: str | None = None):
        self.line = line
        self.source = source
        where = source or "<input>"
        if line is not None:
            where = f"{where}:{line}"
        super().__init__(f"{where}: {message}")


def _parse_dims(fields: list[str], line: int, source: str | None) -> tuple[int, int]:
    if len(fields) != 2:
        raise ParseError(f"expected 'H W', got {' '.join(fields)!r}", line, source)
    try:
        H, W = int(fields[0]), int(fields[1])
    except ValueError:
        raise ParseError(f"dimensions must be integers, got {' '.join(fields)!r}", line, source) from None
    if H < 1 or W < 1:
        raise ParseError(f"dimensions must be positive, got {H}x{W}", line, source)
    return H, W


def _grid_rows(lines: list[tuple[int, str]], source: str | None) -> list[list[str]]:
    if not lines:
        raise ParseError("missing 'H W' header", None, source)
    first_no, first = lines[0]
    H, W = _parse_dims(first.split(), first_no, source)
    body = lines[1:]
    if len(body) != H:
        raise ParseError(f"expected {H} grid rows, found {len(body)}",
                         body[-1][0] if body else first_no, source)
    rows = []
    for no, text in body:
        toks = text.split()
        if len(toks) != W:
            raise ParseError(f"expected {W} tokens, found {len(toks)}", no, source)
        rows.append(toks)
    return rows


def _content_lines(text: str) -> list[tuple[int, str]]:
    return [(no, ln) for no, ln in enumerate(text.splitlines(), 1) if ln.strip()]


def parse_grid(text: str, source: str | None = None) -> Image:
    return Image.from_rows(_grid_rows(_content_lines(text), source))


def format_grid(image: Image) -> str:
    lines = [f"{image.height} {image.width}"]
    lines += [" ".join(str(t) for t in row) for row in image.token_rows()]
    return "\n".join(lines) + "\n"


def parse_pgm(text: str, source: str | None = None) -> Image:
    """Plain (P2) PGM; every distinct grey level becomes one symbol."""
    tokens: list[tuple[int, str]] = []
    for no, ln in enumerate(text.splitlines(), 1):
        ln = ln.split("#", 1)[0]
        tokens.extend((no, t) for t in ln.split())
    if not tokens or tokens[0][1] != "P2":
        magic = tokens[0][1] if tokens else ""
        raise ParseError(f"unsupported PGM magic {magic!r}, only P2 is read", 1, source)
    if len(tokens) < 4:
        raise ParseError("truncated PGM header", tokens[-1][0], source)
    try:
        W, H, maxval = (int(t) for _, t in tokens[1:4])
    except ValueError:
        raise ParseError("PGM header fields must be integers", tokens[1][0], source) from None
    if W < 1 or H < 1 or maxval < 1:
        raise ParseError("PGM width, height and maxval must be positive", tokens[1][0], source)
    values = tokens[4:]
    if len(values) != W * H:
        raise ParseError(f"expected {W * H} grey values, found {len(values)}",
                         values[-1][0] if values else tokens[3][0], source)
    cells = []
    for no, t in values:
        if not t.isdigit() or int(t) > maxval:
            raise ParseError(f"grey value {t!r} outside 0..{maxval}", no, source)
        cells.append(str(int(t)))
    return Image.from_rows([cells[i * W:(i + 1) * W] for i in range(H)])


def format_pgm(image: Image) -> str:
    """Write an image whose tokens are integer grey levels as plain PGM."""
    levels = [[int(t) for t in row] for row in image.token_rows()]
    maxval = max(max(max(r) for r in levels), 1)
    lines = ["P2", f"{image.width} {image.height}", str(maxval)]
    lines += [" ".join(map(str, r)) for r in levels]
    return "\n".join(lines) + "\n"


def parse_image(text: str, source: str | None = None) -> Image:
    head = text.lstrip()[:2]
    if head in ("P2", "P5"):
        return parse_pgm(text, source)
    return parse_grid(text, source)


def load_image(path: str | Path) -> Image:
    path = Path(path)
    return parse_image(path.read_text(encoding="utf-8"), str(path))


def parse_wang(text: str, source: str | None = None) -> tuple[dict[str, WangTile], WangTiling]:
    """Read a tile set and a tiling; adjacency is left to the caller."""
    lines = _content_lines(text)
    if not lines or lines[0][1].strip() != "tiles":
        raise ParseError("expected 'tiles' section header", lines[0][0] if lines else None, source)
    split = next((k for k, (_, ln) in enumerate(lines) if ln.strip() == "tiling"), None)
    if split is None:
        raise ParseError("missing 'tiling' section header", lines[-1][0], source)

    tileset: dict[str, WangTile] = {}
    for no, ln in lines[1:split]:
        fields = ln.split()
        if len(fields) != 5:
            raise ParseError(f"tile line needs 'name N E S W', got {ln.strip()!r}", no, source)
        name, *colours = fields
        if name in tileset:
            raise ParseError(f"tile {name!r} defined twice", no, source)
        try:
            tileset[name] = WangTile(*colours)
        except TilingError as exc:
            raise ParseError(str(exc), no, source) from None

    body = lines[split + 1:]
    names = _grid_rows(body, source)
    rows = []
    for (no, _), row in zip(body[1:], names):
        for name in row:
            if name not in tileset:
                raise ParseError(f"undefined tile {name!r}", no, source)
        rows.append([tileset[n] for n in row])
    return tileset, WangTiling.from_rows(rows)


def format_wang(tileset: dict[str, WangTile], tiling: WangTiling) -> str:
    name_of = {}
    for name, t in tileset.items():
        name_of.setdefault(t, name)
    lines = ["tiles"]
    lines += [f"{n} {t.north} {t.east} {t.south} {t.west}" for n, t in tileset.items()]
    lines += ["tiling", f"{tiling.rows} {tiling.cols}"]
    lines += [" ".join(name_of[t] for t in row) for row in tiling.tiles]
    return "\n".join(lines) + "\n"


def load_wang(path: str | Path) -> tuple[dict[str, WangTile], WangTiling]:
    path = Path(path)
    return parse_wang(path.read_text(encoding="utf-8"), str(path))
