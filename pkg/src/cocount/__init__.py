"""Exact counting of independent sets and cliques in cocomparability,
comparability and permutation graphs."""

from .counting import (
    CountTable,
    SizeProfile,
    alpha_and_maximum_count,
    count_cliques,
    count_is,
    count_is_by_size,
    count_is_fast,
    count_maximal_is,
    count_maximal_is_by_size,
    independence_polynomial_eval,
    is_table,
    is_table_fast,
    maximal_table,
    permutation_counts,
)
from .errors import *  # noqa: F401,F403
from .graphs import (
    Graph,
    PermutationModel,
    comparability_graph,
    complement,
    complement_permutation,
    incomparability_graph,
    permutation_model,
    reverse_permutation,
    validate_orientation,
)
from .posets import (
    ChainVerdict,
    ExtendedPoset,
    LinearExtension,
    Poset,
    check_chain,
    cover_relation,
    linear_extension,
    poset_from_arcs,
)

__version__ = "0.1.0"
