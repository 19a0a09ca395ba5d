"""Codings of pairs and sequences, oracle-backed graphs and trees, finite searches."""

from .coding import (OMEGA, block_decode, block_encode, diag_decode, diag_encode,
                     pair_decode, pair_encode, seq_decode, seq_encode)
from .graphs import (FiniteGraph, GraphCode, check_coloring, complement, complete,
                     complete_graph, cycle, edge_query, edgeless, embedding_exists,
                     empty_graph, find_coloring, find_embedding, finite_subgraph,
                     graph_from_finite, graph_from_rule, is_k_colorable, path,
                     subgraph_colorable)
from .oracles import (FuelExhausted, OracleFn, constant, derived, finite_support,
                      from_description, periodic, table_then_shift, tabled)
from .trees import (TreeCode, depth_tree, finite_tree, full_tree, has_extension, path_tree,
                    tree_has_level, tree_member)
