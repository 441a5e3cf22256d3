"""Exhaustive checks of when symmetric elements of a group ring anticommute.

The package builds small groups and finite coefficient rings, enumerates
involutions and orientations, and decides anticommutativity both by direct
multiplication in the group ring and by a closed-form structural predicate.
"""

from .catalog import builtin_catalog, get_group
from .checker import check_anticommutative, check_lemma_suite
from .classifier import classify_structure, restricted_case, theorem_predicate
from .group_ring import GroupRingElement, jordan, lie, sigma_star, symmetric_generators
from .groups import Group, build_group_from_table
from .harness import SweepConfig, explain_instance, run_sweep
from .involutions import enumerate_involutions, identity_involution, inversion
from .orientation import enumerate_orientations, is_compatible, make_orientation
from .rings import FiniteRing, build_zmod, ring_from_token

__all__ = [
    "FiniteRing", "Group", "GroupRingElement", "SweepConfig",
    "build_group_from_table", "build_zmod", "builtin_catalog", "check_anticommutative",
    "check_lemma_suite", "classify_structure", "enumerate_involutions", "enumerate_orientations",
    "explain_instance", "get_group", "restricted_case", "identity_involution", "inversion",
    "is_compatible", "jordan", "lie", "make_orientation", "ring_from_token", "run_sweep",
    "sigma_star", "symmetric_generators", "theorem_predicate",
]
