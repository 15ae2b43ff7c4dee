"""Synthesis, exhaustive verification and gate-type cost analysis of NCT reversible circuits."""
from .circuit import (
    Circuit,
    Const,
    Cost,
    CostWeights,
    Gate,
    Input,
    cnot,
    cost,
    invert,
    mct,
    not_,
    parse,
    realized_function,
    serialize,
    simulate,
    tof,
)
from .function import (
    PprmTable,
    ReversibleFunction,
    constant_term_count,
    eval_pprm,
    from_permutation,
    inverse,
    pprm_of_output,
    random_function,
)
from .verify import verify, verify_intermediate, verify_strong, verify_weak

__version__ = "0.1.0"
