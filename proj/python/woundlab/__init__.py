"""Exact arithmetic for wound unipotent groups over F_p(t)."""

from ._woundlab import (
    curve_pipeline,
    ext1_dimension,
    oesterle_map,
    simplify,
    tower_member,
    verify,
    weil_equations,
    wound_test,
)

__all__ = [
    "curve_pipeline",
    "ext1_dimension",
    "oesterle_map",
    "simplify",
    "tower_member",
    "verify",
    "weil_equations",
    "wound_test",
]
