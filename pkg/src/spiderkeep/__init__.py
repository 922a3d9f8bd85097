"""Connectivity-keeping spiders in k-connected graphs."""

from .connectivity import (
    SeparatorDecomposition,
    decompose,
    ends,
    fragments_to,
    is_k_connected,
    kappa,
    local_kappa,
    minimum_separators,
)
from .construct import (
    ConstructiveResult,
    TheoremVerdict,
    find_keeping_spider_constructive,
    verify_theorem_instance,
)
from .graph import (
    Graph,
    add_clique,
    degree,
    delete_vertices,
    is_complete,
    max_degree,
    min_degree,
    neighborhood_of_set,
)
from .io import emit_edge_list, emit_graph6, parse_edge_list, parse_graph6
from .mader import AnchoredPair, find_removable_path, in_F_k_m, in_F_k_m_plus
from .spider import (
    SpiderEmbedding,
    SpiderShape,
    enumerate_embeddings,
    find_keeping_spider_bruteforce,
    realize_shape,
)

__all__ = [name for name in dir() if not name.startswith("_")]
