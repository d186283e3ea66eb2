import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from coverscan.cover1d import minimal_cover_1d
from coverscan.decide import is_cover
from coverscan.grid import sub_image
from coverscan.wang import (
    BLACK,
    GRAY,
    TilingError,
    WangTile,
    WangTiling,
    decode_tile,
    encode_tile,
    encode_tiling,
    minimal_wang_cover,
)

from oracles import random_row_tiling

colours = st.sampled_from(["r", "g", "b", "x", "y"])
tiles = st.builds(WangTile, colours, colours, colours, colours)

A = WangTile("x", "r", "y", "g")
B = WangTile("y", "g", "x", "r")


def test_encode_tile_layout():
    img = encode_tile(WangTile("n", "e", "s", "w"))
    B_, G_ = BLACK, GRAY
    assert img.token_rows() == [[B_, "n", B_], ["w", G_, "e"], [B_, "s", B_]]
    sym = encode_tile(WangTile("c", "c", "c", "c"))
    assert sym.token_rows() == [[B_, "c", B_], ["c", G_, "c"], [B_, "c", B_]]


@given(tiles, tiles)
def test_encoding_is_injective_and_invertible(t1, t2):
    assert decode_tile(encode_tile(t1)) == t1
    assert (t1 == t2) == encode_tile(t1).same_content(encode_tile(t2))


def test_reserved_colours_rejected():
    with pytest.raises(TilingError):
        WangTile(BLACK, "r", "r", "r")


def test_encode_tiling_shapes_and_errors():
    assert encode_tiling(WangTiling.from_rows([[A]])).same_content(encode_tile(A))
    img = encode_tiling(WangTiling.from_rows([[A, B]]))
    assert img.shape == (3, 6)
    with pytest.raises(TilingError, match=r"east='r' does not match tile \(0, 1\) west='g'"):
        encode_tiling(WangTiling.from_rows([[A, A]]))
    with pytest.raises(TilingError, match="south"):
        encode_tiling(WangTiling.from_rows([[A], [A]]))


def test_uniform_tiling_has_unit_cover():
    t = WangTile("x", "r", "x", "r")
    tiling = WangTiling.from_rows([[t] * 4] * 3)
    assert minimal_wang_cover(tiling) == (1, 1)


def test_alternating_row():
    tiling = WangTiling.from_rows([[A, B] * 3])
    assert minimal_cover_1d([A, B] * 3) == 2
    assert minimal_wang_cover(tiling, route="vector") == (1, 2)
    assert minimal_wang_cover(tiling, route="image") == (1, 2)


def test_four_distinct_tiles():
    # horizontal edges r/g, vertical edges x/y, all four tiles differ
    tl, tr = WangTile("p", "r", "x", "g"), WangTile("q", "g", "y", "r")
    bl, br = WangTile("x", "r", "s", "g"), WangTile("y", "g", "t", "r")
    tiling = WangTiling.from_rows([[tl, tr], [bl, br]])
    img = encode_tiling(tiling)
    for a, b in [(1, 1), (1, 2), (2, 1)]:
        assert not is_cover(img, 3 * a, 3 * b).covered
    assert minimal_wang_cover(tiling) == (2, 2)


def test_block_periodic_tiling():
    tl, tr = WangTile("p", "r", "x", "g"), WangTile("q", "g", "y", "r")
    bl, br = WangTile("x", "r", "p", "g"), WangTile("y", "g", "q", "r")
    tiling = WangTiling.from_rows([[tl, tr] * 3, [bl, br] * 3] * 2)
    assert minimal_wang_cover(tiling) == (2, 2)


def test_route_validation():
    tiling = WangTiling.from_rows([[A], [WangTile("y", "r", "x", "g")]])
    with pytest.raises(ValueError):
        minimal_wang_cover(tiling, route="vector")
    with pytest.raises(ValueError):
        minimal_wang_cover(tiling, route="other")


def test_row_routes_agree_and_keep_structure():
    rng = random.Random(41)
    for _ in range(100):
        tiling = random_row_tiling(rng, rng.randint(1, 50))
        vec = minimal_wang_cover(tiling, route="vector")
        img = minimal_wang_cover(tiling, route="image")
        assert vec == img
        block = sub_image(encode_tiling(tiling), 3 * img[0], 3 * img[1]).token_rows()
        for i, row in enumerate(block):
            for j, tok in enumerate(row):
                if i % 3 != 1 and j % 3 != 1:
                    assert tok == BLACK
                elif i % 3 == 1 and j % 3 == 1:
                    assert tok == GRAY
                else:
                    assert tok not in (BLACK, GRAY)
