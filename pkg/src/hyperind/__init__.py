"""Exact s-independent set counting for hypergraphs, shifting, and the
minimum-cost downset optimizer for 2-independent sets in 3-graphs."""
from .hypergraph import (Graph, Hypergraph, build_named_graph, complete_hypergraph,
                         count_graph_independent, count_s_independent, describe_graph,
                         graphs_match, read_edge_list, shadow2, triangle_count,
                         triangle_hypergraph, write_edge_list)
from .orders import (colex_graph, colex_perm, compression_leq, initial_segment, lex_graph,
                     lex_perm, lexish_graph, pi_lex_compare, pi_lex_sets)
from .shifting import (compound_shift, fully_shift, is_s_independent, is_s_independent_shifted,
                       is_shifted, minimal_edge, shift)
from .downset import (Downset, cell_cost, cell_space, corners, downset_cost, downset_lex_compare,
                      downset_of, downset_space, horizontal_distance_vector, i2_of_downset,
                      is_231_lex_style, parse_downset, persistent_exception_downsets, realize)
from .moves import MoveOutcome, all_applicable_moves, witness_holds
from .optimizer import (InfeasibleError, OptimalRecord, conjecture_check, optimize, pareto,
                        reproduce_table, verify_main_theorem)

__version__ = "0.1.0"
