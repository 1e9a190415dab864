from ._core import (
    OrderedPartition,
    TripleSystem,
    __version__,
    b3,
    binary_entropy,
    build_b3,
    chernoff_bound,
    contains_t5,
    counting_gap,
    entropy_facts,
    extremal_search,
    full_census,
    has_independent_neighborhoods,
    is_semibipartite,
    make_partition,
    ns_sample,
    optimal_partitions,
    partition_from_prefix,
    random_semibipartite,
    random_triple_system,
    run_all_criteria,
    run_criterion,
)

__all__ = [
    "OrderedPartition",
    "TripleSystem",
    "__version__",
    "b3",
    "binary_entropy",
    "build_b3",
    "chernoff_bound",
    "contains_t5",
    "counting_gap",
    "entropy_facts",
    "extremal_search",
    "full_census",
    "has_independent_neighborhoods",
    "is_semibipartite",
    "make_partition",
    "ns_sample",
    "optimal_partitions",
    "partition_from_prefix",
    "random_semibipartite",
    "random_triple_system",
    "run_all_criteria",
    "run_criterion",
]
