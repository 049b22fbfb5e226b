# The MIT License (MIT)
#
# Copyright (c) 2026 The wogtoric Authors
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in
# all copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN
# THE SOFTWARE.

from .graph import (
    WeightedOrientedGraph, GeneralEdgeMonomialGraph, GraphStructure, Structure, Component, PruneResult,
    GraphError, SelfLoop, ParallelEdge, BadVertexId, NonPositiveWeight, NotPruned, NotACycle, OddLength,
    validate, connected_components, prune_leaves, classify_structure, is_naturally_oriented,
    cycle_walk, find_cycles, orientation_counts, sources_and_sinks,
)
from .exactalg import (
    IntMatrix, NotSquare, ZeroVector, LengthMismatch,
    determinant, rank, null_space_basis, primitive_integer_vector, bounded_integer_kernel, integer_kernel_basis,
)
from .binomial import (
    IncidenceMatrix, Binomial, BinomialError, NotInKernel,
    incidence_matrix, phi_image, kernel_vector_to_binomial,
)
from .toric import (
    ToricIdealResult, IdealKind, Method, ZeroReason, ZeroVerdict,
    NotBalanced, NotPrincipal, CorollaryViolation,
    is_balanced, is_uniformly_balanced, balanced_cycle_generator, cycle_incidence_matrix, cycle_determinant,
    is_zero_ideal, principal_generator, predict_support, structure_is_single_generator, compute_toric_ideal,
)
from .oracle import (
    Budget, MonomialOrder, SparseBinomialPoly, OracleBudgetExceeded, NotBinomial,
    lattice_ideal_generators, saturation_system, saturate_markov_basis, minimalize, verify_membership,
    groebner_basis, is_groebner_basis,
)
from .fileformat import ParseError, GraphFile, parse_graph, format_graph, parse_binomial, parse_binomials, to_dot
from .config import Settings, ConfigError
