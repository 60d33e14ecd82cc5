"""Distance invariants, witness certificates and exhaustive bound checks for
2-connected outerplanar graphs (C++ core)."""

from ._core import (
    OpgraphError,
    analyze,
    bound,
    chordal_radius_interval,
    count_dissections,
    generate,
    metrics,
    qn,
    verify,
    witness,
)

__all__ = [
    "OpgraphError",
    "analyze",
    "bound",
    "chordal_radius_interval",
    "count_dissections",
    "generate",
    "metrics",
    "qn",
    "verify",
    "witness",
]
