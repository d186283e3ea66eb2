"""Two-dimensional string covers: decision, minimisation and Wang tilings."""

from .cover1d import CoverIndicator, cover_indicator, minimal_cover_1d
from .decide import CoverDecision, coverage_paint_oracle, is_cover
from .grid import (
    Alphabet,
    BoundsError,
    DimensionError,
    Image,
    Mask,
    mask_from_set,
    set_from_mask,
    sub_image,
)
from .match2d import build_kmp, build_maximal_mask, kmp_find_all
from .minimize import (
    AREA,
    L1,
    LINF,
    CoverReport,
    Metric,
    PruneMatrix,
    build_prune_matrix,
    enumerate_candidates,
    minimal_cover,
    prune_statistics,
)
from .wang import (
    TilingError,
    WangTile,
    WangTiling,
    decode_tile,
    encode_tile,
    encode_tiling,
    minimal_wang_cover,
)

__all__ = [
    "AREA", "L1", "LINF", "Alphabet", "BoundsError", "CoverDecision",
    "CoverIndicator", "CoverReport", "DimensionError", "Image", "Mask",
    "Metric", "PruneMatrix", "TilingError", "WangTile", "WangTiling",
    "build_kmp", "build_maximal_mask", "build_prune_matrix", "cover_indicator",
    "coverage_paint_oracle", "decode_tile", "encode_tile", "encode_tiling",
    "enumerate_candidates", "is_cover", "kmp_find_all", "mask_from_set",
    "minimal_cover", "minimal_cover_1d", "minimal_wang_cover",
    "prune_statistics", "set_from_mask", "sub_image",
]
