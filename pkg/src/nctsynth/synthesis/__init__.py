"""Constructive synthesis of NCT circuits."""
from .mmd import mmd_baseline
from .products import AncillaAllocator, ProductNetwork, gen_products, product_circuit, product_count
from .rewrites import (
    decompose_mct,
    eliminate_cnots,
    eliminate_nots,
    mct_to_toffolis,
    not_sandwich,
    one_not_pipeline,
    stable_one,
)
from .split import (
    bennett_gates,
    bennett_synth,
    bennett_toffoli_count,
    optimal_split,
    pprm_split_synth,
    weak_toffoli_count,
)
from .wrappers import intermediate_to_strong, strong_synth, swap, weak_to_intermediate, weak_to_strong

__all__ = [
    "AncillaAllocator",
    "ProductNetwork",
    "bennett_gates",
    "bennett_synth",
    "bennett_toffoli_count",
    "decompose_mct",
    "eliminate_cnots",
    "eliminate_nots",
    "gen_products",
    "intermediate_to_strong",
    "mct_to_toffolis",
    "mmd_baseline",
    "not_sandwich",
    "one_not_pipeline",
    "optimal_split",
    "pprm_split_synth",
    "product_circuit",
    "product_count",
    "stable_one",
    "strong_synth",
    "swap",
    "weak_to_intermediate",
    "weak_to_strong",
    "weak_toffoli_count",
]
