"""Circuit analysis (linear sums, DAG encoding) and cost bounds."""
from .bounds import (
    REFERENCE_TCOUNT,
    BoundsReport,
    Discrepancy,
    SummaryEntry,
    TcountRow,
    bennett_width,
    bounds_report,
    counting_lower_bound,
    crossing_search,
    dag_count_log2,
    discrepancy_report,
    format_tcount_table,
    gate_count_lower_bound,
    lb_001_asymptotic,
    lb_011_asymptotic,
    log2_factorial,
    log2_permutation_count,
    lower_bound_001,
    summary_report,
    tcount_table,
    ub_001_asymptotic,
    ub_011_asymptotic,
    ub_111_asymptotic,
    unit_cost_circuits,
)
from .dag import CircuitDag, decode_dag, decoded_table, encode_dag
from .linear import LinearSum, affine_from_index, affine_index, eval_affine, linear_sum, product_trace
