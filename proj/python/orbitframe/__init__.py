"""Frame certification for orbits of diagonal operators on the disk."""

import json

from ._core import (
    DomainError,
    Error,
    ParseError,
    canonical,
    certify,
    decompose,
    exact_frame_bounds,
    generate,
    generators,
    gram,
    mobius,
    rho,
    riesz_bounds,
)
from . import _core


def analyze(text, seed=None):
    """Full analysis report of an instance given as JSON text, as a dict."""
    return json.loads(_core.analyze(text, seed))


__all__ = [
    "DomainError",
    "Error",
    "ParseError",
    "analyze",
    "canonical",
    "certify",
    "decompose",
    "exact_frame_bounds",
    "generate",
    "generators",
    "gram",
    "mobius",
    "rho",
    "riesz_bounds",
]
