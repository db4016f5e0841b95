"""Exact census, isomorphism tests and random-model experiments for self-converse mixed graphs."""

from mixgraph.graph import (
    Graph,
    GraphError,
    MixedGraph,
    Permutation,
    apply_permutation,
    converse,
    from_text,
    make_mixed_graph,
    neighborhood_stats,
    read_graphs,
    symmetric_subgraph,
    to_text,
    underlying_graph,
    write_graphs,
)
from mixgraph.iso import (
    IsoWitness,
    automorphism_count,
    canonical_form,
    find_isomorphism,
    is_asymmetric,
    is_self_converse,
)
from mixgraph.census import (
    CensusResult,
    count_mixed_graphs,
    count_selfconverse,
    selfconverse_fraction,
)
from mixgraph.spectral import are_cospectral, char_poly, hermitian_adjacency

__version__ = "0.1.0"
