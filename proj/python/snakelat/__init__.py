"""Snake graphs, string modules and weak Bruhat intervals."""

from ._core import (
    ParseError,
    coxeter_element,
    inverse,
    matching_count,
    matching_supports,
    normalize,
    phi_crossings,
    phi_grafting,
    reduced_words,
    resolve_crossings,
    resolve_grafting,
    snake_directions,
    submodules,
    three_way,
    verify,
    verify_sweep,
)

__version__ = "0.1.0"

__all__ = [
    "ParseError",
    "coxeter_element",
    "inverse",
    "matching_count",
    "matching_supports",
    "normalize",
    "phi_crossings",
    "phi_grafting",
    "reduced_words",
    "resolve_crossings",
    "resolve_grafting",
    "snake_directions",
    "submodules",
    "three_way",
    "verify",
    "verify_sweep",
]
