"""Exact cohomology computations and rigidity decisions for Bott towers."""

from .bundles import (
    DecBundle,
    ProjIsoWitness,
    TotalChern,
    bundles_isomorphic,
    projectivizations_isomorphic,
    scaled_split_check,
    splits_trivially,
    total_chern,
    twist,
)
from .classify import (
    Partition,
    TowerFamily,
    cross_validate,
    enumerate_towers,
    partition_towers,
)
from .intlinalg import is_primitive, kernel_basis, smith_normal_form, solve_linear
from .isolift import (
    FilteredIsoWitness,
    RingHomMatrix,
    apply_witness,
    bounded_ring_iso_search,
    brute_force_filtered_iso,
    compose_witness,
    fiber_automorphisms,
    find_tower_iso,
    invert_witness,
    verify_witness,
)
from .ring import (
    BottTower,
    CohClass,
    NotHomogeneousError,
    TowerMismatchError,
    TowerShapeError,
    filtration_level,
    graded_rank,
    linear_combine,
    make_tower,
    mul,
    restrict_stage,
)
from .vanishing import (
    LemmaForm,
    VanishingPair,
    enumerate_primitive_vanishing_pairs,
    lemma_form_decompose,
    mult_map_deg2,
    vanishing_partners,
)

__all__ = [
    "BottTower",
    "CohClass",
    "DecBundle",
    "FilteredIsoWitness",
    "LemmaForm",
    "NotHomogeneousError",
    "Partition",
    "ProjIsoWitness",
    "RingHomMatrix",
    "TotalChern",
    "TowerFamily",
    "TowerMismatchError",
    "TowerShapeError",
    "VanishingPair",
    "apply_witness",
    "bounded_ring_iso_search",
    "brute_force_filtered_iso",
    "bundles_isomorphic",
    "compose_witness",
    "cross_validate",
    "enumerate_primitive_vanishing_pairs",
    "enumerate_towers",
    "fiber_automorphisms",
    "filtration_level",
    "find_tower_iso",
    "graded_rank",
    "invert_witness",
    "is_primitive",
    "kernel_basis",
    "lemma_form_decompose",
    "linear_combine",
    "make_tower",
    "mul",
    "mult_map_deg2",
    "partition_towers",
    "projectivizations_isomorphic",
    "restrict_stage",
    "scaled_split_check",
    "smith_normal_form",
    "solve_linear",
    "splits_trivially",
    "total_chern",
    "twist",
    "vanishing_partners",
    "verify_witness",
]

__version__ = "0.1.0"
