"""Coloring groups: permutation groups generated by the color classes of a
proper edge coloring, with toggle-poset and independence-poset machinery and
an exhaustive survey of small trees."""

from .analysis import (AnalysisReport, ImprimitiveVertexColoring, analyze,
                       coloring_group, construction, euler_totient,
                       generators, imprimitive_vertex_coloring,
                       long_cycle_check, restricted_tree_report,
                       size_bound_check, symmetric_edge_theorem_check,
                       tree_centralizer_check)
from .graphs import (ColorSubgraph, EdgeColoredGraph, InvalidColoring,
                     ParseError, PathWord, all_tree_paths_toggle,
                     cayley_coloring, colored_automorphisms, components,
                     find_symmetric_edges, is_forest, is_toggle_word,
                     is_tree, parse_graph, path_graph, path_word)
from .group import (BlockSystem, CapExceeded, Fingerprint, PermutationGroup,
                    brute_force_elements, centralizer_in_symmetric,
                    groups_equal)
from .indposet import (Dag, GOrder, IndependencePoset, Top, complete_to_top,
                       extremal_decomposition_check, flip, g_order,
                       hasse_coloring, independence_poset,
                       inductively_color_alternating_certificate, is_tight,
                       parse_dag, verify_structure_theorem)
from .perm import Perm, compose, cycle_type, format_cycles, inverse, parse_cycles
from .survey import SurveyRow, check_table, check_table_row, distinct_orders, survey
from .toggles import (ToggleFamily, TogglePoset, parse_family,
                      poset_as_coloring, toggle, toggle_group, toggle_poset)
from .trees import Tree, free_trees, proper_colorings, tree_with_coloring

__version__ = "0.1.0"
