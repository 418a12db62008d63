"""Crossing invariants of cooriented wave fronts on surfaces.

Thin text-based wrapper around the compiled _frontwave module. All functions
take and return the same versioned file formats as the command line tool.
"""

from _frontwave import (
    apply_moves,
    canonical_front,
    canonical_key,
    check_local,
    class_order,
    cstf_descriptor,
    cstf_pairing,
    front_info,
    global_verdict,
    iplus_change,
    iplus_front,
    pi1_descriptor,
    pin_descriptor,
    planar_value,
    planar_value_doubled,
    validate_front,
)

__all__ = [
    "apply_moves",
    "canonical_front",
    "canonical_key",
    "check_local",
    "class_order",
    "cstf_descriptor",
    "cstf_pairing",
    "front_info",
    "global_verdict",
    "iplus_change",
    "iplus_front",
    "pi1_descriptor",
    "pin_descriptor",
    "planar_value",
    "planar_value_doubled",
    "validate_front",
]
