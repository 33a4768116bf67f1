"""Boolean automata networks under block-parallel update schedules.

The heavy lifting lives in the compiled ``banpar._core`` extension; this
package re-exports its public surface.
"""

from banpar._core import (
    AffineUnaryNetwork,
    BlockSequence,
    PartitionedOrder,
    TruthTableNetwork,
    brute_force_fixed_points,
    census,
    count_fixed_points,
    count_representatives,
    cycle_census,
    enumerate_representatives,
    hhat,
    load_network,
    max_cycles,
    mu_even,
    mu_hat,
    mu_odd,
    neg_cycle,
    network_from_json,
    parallelize,
    parse_schedule,
    pos_cycle,
    sequentialize,
    substep_trace,
)

__all__ = [
    "AffineUnaryNetwork",
    "BlockSequence",
    "PartitionedOrder",
    "TruthTableNetwork",
    "brute_force_fixed_points",
    "census",
    "count_fixed_points",
    "count_representatives",
    "cycle_census",
    "enumerate_representatives",
    "hhat",
    "load_network",
    "max_cycles",
    "mu_even",
    "mu_hat",
    "mu_odd",
    "neg_cycle",
    "network_from_json",
    "parallelize",
    "parse_schedule",
    "pos_cycle",
    "sequentialize",
    "substep_trace",
]
