"""Covariant sextics of 3D second-order superintegrable systems.

Sextics are lists of 7 complex coefficients, lowest power first. Roots at
infinity are reported as None.
"""

from ._superlim import (
    SuperlimError,
    act,
    catalog_label,
    class_label,
    classify,
    contract,
    contract_all,
    contraction_names,
    covariant,
    cross_ratio,
    diagram_dot,
    from_roots,
    multi_ratio_search,
    potential,
    recover,
    representative,
    roots,
    rot_matrix,
    system_label,
    systems,
    transform_root,
)

__all__ = [
    "SuperlimError",
    "act",
    "catalog_label",
    "class_label",
    "classify",
    "contract",
    "contract_all",
    "contraction_names",
    "covariant",
    "cross_ratio",
    "diagram_dot",
    "from_roots",
    "multi_ratio_search",
    "potential",
    "recover",
    "representative",
    "roots",
    "rot_matrix",
    "system_label",
    "systems",
    "transform_root",
]
