"""k-token and k-multiset graphs, with explicit Hamiltonian cycles of M_2 of fan graphs."""

from .errors import ConstructionError, Graph6Error, InvalidInputError
from .fan import (CycleSeq, Decision, Hamiltonian, NotHamiltonianCutSet, NotHamiltonianDegreeOne,
                  cut_certificate, cycle_case_m1, cycle_case_mid, cycle_case_mmax, decide_fan,
                  join_cycle, path_P, path_T, prune_path)
from .graph import (FanLabeling, Graph, connected_components, delete_vertices, fan_graph, join,
                    make_base_graph)
from .graph6 import emit_graph6, parse_graph6
from .multiset import (LabeledBigGraph, build_big_graph, enumerate_k_multisets, multiset_graph,
                       multiset_sym_diff, token_graph)
from .oracle import (check_cut_certificate, find_hamiltonian_cycle, find_hamiltonian_path,
                     is_hamiltonian_cycle)

__version__ = "0.1.0"
