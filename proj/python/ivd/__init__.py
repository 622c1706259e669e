"""Incremental planar Voronoi diagrams with exact integer predicates."""

from ._core import (
    COORD_BOUND,
    STATS_HEADER,
    DegeneracyError,
    DuplicateSiteError,
    Engine,
    InputError,
    StructureError,
    generate,
    import_text,
    parse_points,
)

__all__ = [
    "COORD_BOUND",
    "STATS_HEADER",
    "DegeneracyError",
    "DuplicateSiteError",
    "Engine",
    "InputError",
    "StructureError",
    "generate",
    "import_text",
    "parse_points",
]
