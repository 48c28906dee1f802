"""Exact computational engine for the reflection groups G(m, e, 2)."""

from .group import GroupElement, GroupParams, conjugacy_classes, enumerate_elements
from .labels import Chi, IrrepLabel, Rho, label_str, parse_label
from .reps import RepTable, get_table

__all__ = [
    "Chi",
    "GroupElement",
    "GroupParams",
    "IrrepLabel",
    "RepTable",
    "Rho",
    "conjugacy_classes",
    "enumerate_elements",
    "get_table",
    "label_str",
    "parse_label",
]
