"""LS-sequences of points: exact generation, discrepancy and resonance.

Parameters are passed as ``(L, S)`` tuples. Exact coordinates come back as
``(p, q)`` pairs of ``fractions.Fraction`` meaning ``p + q * gamma``.
"""

from ._core import (
    ResourceLimitError,
    admissible_indices,
    counts,
    disc1d,
    disc1d_rational,
    disc2d_halton,
    disc2d_rational,
    disc2d_vdc,
    halton,
    is_admissible,
    params_info,
    partition,
    phi,
    resonance,
    scan,
    sequence,
    sequence_exact,
    vdc,
)

__all__ = [
    "ResourceLimitError",
    "admissible_indices",
    "counts",
    "disc1d",
    "disc1d_rational",
    "disc2d_halton",
    "disc2d_rational",
    "disc2d_vdc",
    "halton",
    "is_admissible",
    "params_info",
    "partition",
    "phi",
    "resonance",
    "scan",
    "sequence",
    "sequence_exact",
    "vdc",
]
