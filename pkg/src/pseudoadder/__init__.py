"""Exact error analysis of inaccurate binary adders via carry chains.

The package models pseudo-adders (circuits with an adder interface that
may return wrong sums, e.g. overclocked adders read before quiescence)
as delay-annotated gate netlists, attributes their errors to carry
chains, and computes exact statistics (expected absolute error, mean
squared error, maximum absolute error) with fast algorithms checked
against brute-force oracles.
"""

from .analysis import (
    AssumptionReport,
    ConservativeReport,
    check_conservative,
    ec_table_sweep,
    extract_ec_table,
    verify_assumptions,
)
from .chains import (
    canonical_pair,
    chain_predicate,
    decompose_error,
    detect_chains,
    dominating_chain,
    isolate_chain,
    witness_for_chain_set,
)
from .counting import (
    ClassCounts,
    SuffixClassCounts,
    below_boundary_counts,
    count_dominated_pairs,
    nu_pair,
    nu_signed,
    nu_signed_all,
    nu_single,
    suffix_counts,
)
from .generators import (
    KsaDelays,
    generate_ksa,
    generate_rca,
    staggered_ksa8,
    staggered_ksa8_delays,
)
from .maxerror import ChainCompatDag, iter_chain_sets, max_abs_error
from .model import (
    CarryChain,
    ChainErrorTable,
    ChainSet,
    ConservativenessError,
    ExactRational,
    InputPair,
    OracleLimitError,
    PseudoAdderError,
    StatsReport,
    all_chains,
    bit,
    recover_carries,
    reference_add,
)
from .netlist import Gate, GateKind, Netlist, as_delay
from .sim import SignalTrace, computed_sum, read_output, simulate
from .stats import (
    analyze_table,
    chain_sae_contribution,
    er_avg_fast,
    er_avg_rca,
    mse_fast,
    oracle_limit,
    sae_oracle_chains,
    sae_oracle_simulate,
)
from .sweep import PairSweep, operand_arrays
from .tables import (
    is_realizable_error,
    random_realizable_error,
    random_realizable_table,
)

__version__ = "0.1.0"

__all__ = [
    "AssumptionReport",
    "CarryChain",
    "ChainCompatDag",
    "ChainErrorTable",
    "ChainSet",
    "ClassCounts",
    "ConservativeReport",
    "ConservativenessError",
    "ExactRational",
    "Gate",
    "GateKind",
    "InputPair",
    "KsaDelays",
    "Netlist",
    "OracleLimitError",
    "PairSweep",
    "PseudoAdderError",
    "SignalTrace",
    "StatsReport",
    "SuffixClassCounts",
    "all_chains",
    "analyze_table",
    "as_delay",
    "below_boundary_counts",
    "bit",
    "canonical_pair",
    "chain_predicate",
    "chain_sae_contribution",
    "check_conservative",
    "computed_sum",
    "count_dominated_pairs",
    "decompose_error",
    "detect_chains",
    "dominating_chain",
    "ec_table_sweep",
    "er_avg_fast",
    "er_avg_rca",
    "extract_ec_table",
    "generate_ksa",
    "generate_rca",
    "is_realizable_error",
    "isolate_chain",
    "iter_chain_sets",
    "max_abs_error",
    "mse_fast",
    "nu_pair",
    "nu_signed",
    "nu_signed_all",
    "nu_single",
    "operand_arrays",
    "oracle_limit",
    "random_realizable_error",
    "random_realizable_table",
    "read_output",
    "recover_carries",
    "reference_add",
    "sae_oracle_chains",
    "sae_oracle_simulate",
    "simulate",
    "staggered_ksa8",
    "staggered_ksa8_delays",
    "suffix_counts",
    "verify_assumptions",
    "witness_for_chain_set",
]
