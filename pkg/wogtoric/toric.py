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

import enum
import logging
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from .binomial import Binomial, incidence_matrix, kernel_vector_to_binomial
from .exactalg import IntMatrix, determinant, rank, null_space_basis, primitive_integer_vector
from .graph import (
    GraphError, OddLength, Structure, TWO_CYCLE_SHAPES,
    validate, connected_components, prune_leaves, classify_structure,
    cycle_walk, is_naturally_oriented, orientation_counts, sources_and_sinks,
)
from .oracle import Budget, MonomialOrder, saturate_markov_basis
from .util import *


class NotBalanced(ValueError):
    pass

class NotPrincipal(ValueError):
    pass

class CorollaryViolation(AssertionError):
    pass


class ZeroReason(enum.Enum):
    OnlyTrivialEvenClosedWalks = "only trivial even closed walks"
    OddCycle = "odd cycle"
    UnbalancedUnicyclic = "unbalanced cycle"
    NaturallyOriented = "naturally oriented cycle"
    RankOnly = "full column rank"

class ZeroVerdict:

    def __init__(self, is_zero, reason=None):
        self.is_zero = is_zero
        self.reason = reason

    def __bool__(self):
        return self.is_zero

    def __str__(self):
        if not self.is_zero:
            return "nonzero"
        return "zero ({})".format(self.reason.value)

    def __repr__(self):
        return "ZeroVerdict({}, {})".format(self.is_zero, self.reason)


class IdealKind(enum.Enum):
    Zero = "zero"
    Principal = "principal"
    Basis = "basis"

class Method(enum.Enum):
    RankTest = "rank test"
    BalancedCycleAlgorithm = "balanced cycle algorithm"
    PrimitiveKernel = "primitive kernel"
    OracleSaturation = "oracle saturation"

class ToricIdealResult:

    def __init__(self, kind, generators, method, certified_minimal, complete=True):
        generators = tuple(generators)

        if (kind == IdealKind.Zero) != (len(generators) == 0):
            raise ValueError("A zero ideal has no generators and only a zero ideal has none")

        if kind == IdealKind.Principal and len(generators) != 1:
            raise ValueError("A principal ideal has exactly one generator, got {}".format(len(generators)))

        self.kind = kind
        self.generators = generators
        self.method = method
        self.certified_minimal = certified_minimal
        self.complete = complete

    @property
    def is_zero(self):
        return self.kind == IdealKind.Zero

    @property
    def is_principal(self):
        return self.kind == IdealKind.Principal

    def to_dict(self):
        return dict(
            kind = self.kind.value,
            method = self.method.value,
            certified_minimal = self.certified_minimal,
            complete = self.complete,
            generators = [dict(plus=list(g.plus), minus=list(g.minus)) for g in self.generators],
        )

    def __repr__(self):
        return "ToricIdealResult({}, {}, method={}, certified_minimal={})".format(
            self.kind.name, [str(g) for g in self.generators], self.method.name, self.certified_minimal)


def cycle_incidence_matrix(graph, cycle):
    """Banded n x n matrix A(C_n): rows x_1..x_n, columns e_1..e_n in traversal order."""
    walk = cycle_walk(graph, cycle)
    return IntMatrix.from_rows([[graph.entry(v, eid) for eid in walk.edges] for v in walk.vertices])

def cycle_determinant(graph, cycle):
    return determinant(cycle_incidence_matrix(graph, cycle))

def _band_products(graph, walk):
    ## diagonal: x_i on e_i; off diagonal: x_(i+1) on e_i, which includes a_(1,n)
    n = len(walk)
    diagonal = 1
    off = 1

    for i, eid in enumerate(walk.edges):
        diagonal *= graph.entry(walk.vertices[i], eid)
        off *= graph.entry(walk.vertices[(i + 1) % n], eid)

    return diagonal, off

def is_balanced(graph, cycle):
    walk = cycle_walk(graph, cycle)

    if len(walk) % 2:
        return False

    diagonal, off = _band_products(graph, walk)
    return diagonal == off

def is_uniformly_balanced(graph, cycle):
    walk = cycle_walk(graph, cycle)

    if len(walk) % 2:
        raise OddLength("Uniform balance needs an even cycle, got length {}".format(len(walk)))

    forward, backward = orientation_counts(graph, cycle)
    if forward != backward:
        return False

    sources, sinks = sources_and_sinks(graph, cycle)
    turning = set(sources) | set(sinks)
    weights = set(graph.weight(v) for v in walk.vertices if v not in turning)

    return len(weights) <= 1

def balanced_cycle_generator(graph, cycle):
    """Generator of the toric ideal of a balanced cycle, by propagating ratios around it."""
    if not graph.oriented:
        raise GraphError("The balanced cycle algorithm needs a weighted oriented graph")

    if not is_balanced(graph, cycle):
        raise NotBalanced("Cycle {} is not balanced".format(list(cycle)))

    walk = cycle_walk(graph, cycle)
    ratios = [Fraction(1)]

    for i in range(1, len(walk)):
        vertex = walk.vertices[i]
        before, after = walk.edges[i - 1], walk.edges[i]

        if graph.tail(before) == vertex and graph.head(after) == vertex:
            ratios.append(ratios[-1] / graph.weight(vertex))
        elif graph.head(before) == vertex and graph.tail(after) == vertex:
            ratios.append(ratios[-1] * graph.weight(vertex))
        else:
            ratios.append(ratios[-1])

    scale = lcm_of(denominators(ratios))
    vector = [0] * graph.edge_count

    for i, eid in enumerate(walk.edges):
        sign = 1 if i % 2 == 0 else -1
        vector[eid - 1] = sign * int(ratios[i] * scale)

    generator = kernel_vector_to_binomial(vector, graph)

    ## The kernel of the cycle's own columns must give the same binomial
    columns = [eid - 1 for eid in walk.edges]
    rows = [v - 1 for v in walk.vertices]
    null = null_space_basis(incidence_matrix(graph).matrix.submatrix(rows, columns))
    if len(null) != 1:
        raise CorollaryViolation("Balanced cycle {} has kernel dimension {}".format(list(cycle), len(null)))

    kernel = [0] * graph.edge_count
    for eid, value in zip(walk.edges, primitive_integer_vector(null[0])):
        kernel[eid - 1] = value

    if Binomial.from_vector(kernel) != generator:
        raise CorollaryViolation("Ratio propagation gave {} but the kernel gives {}".format(generator, Binomial.from_vector(kernel)))

    return generator


def kernel_dimension(graph):
    return graph.edge_count - rank(incidence_matrix(graph).matrix)

def _unicyclic_reason(graph, cycle):
    if len(cycle) % 2:
        return ZeroReason.OddCycle

    if graph.oriented and is_naturally_oriented(graph, cycle):
        return ZeroReason.NaturallyOriented

    return ZeroReason.UnbalancedUnicyclic

def is_zero_ideal(graph):
    if graph.edge_count and kernel_dimension(graph) > 0:
        return ZeroVerdict(False)

    reasons = set()

    for component in connected_components(graph):
        pruned = prune_leaves(component.graph).graph
        if pruned.edge_count == 0:
            continue

        structure = classify_structure(pruned)
        if structure.tag != Structure.Unicyclic:
            return ZeroVerdict(True, ZeroReason.RankOnly)

        reasons.add(_unicyclic_reason(pruned, structure.cycles[0]))

    if not reasons:
        return ZeroVerdict(True, ZeroReason.OnlyTrivialEvenClosedWalks)

    if len(reasons) == 1:
        return ZeroVerdict(True, reasons.pop())

    ## Mixed odd and naturally oriented cycles are all unbalanced
    return ZeroVerdict(True, ZeroReason.UnbalancedUnicyclic)


def structure_is_single_generator(structure, balanced):
    """Prediction for two-cycle shapes: principal iff at most one relevant cycle is balanced."""
    if structure.tag not in TWO_CYCLE_SHAPES:
        return None
    return sum(1 for flag in balanced if flag) <= 1

def predict_support(graph):
    pruned = prune_leaves(graph)
    g = pruned.graph

    if g.edge_count == 0:
        return None

    try:
        structure = classify_structure(g)
    except GraphError:
        return None

    if structure.tag != Structure.Unicyclic and structure.tag not in TWO_CYCLE_SHAPES:
        return None

    balanced = [c for c in structure.cycles if is_balanced(g, c)]

    if len(balanced) > 1:
        return None

    if balanced:
        support = balanced[0]
    elif structure.tag == Structure.Unicyclic:
        return None
    else:
        support = g.edge_ids

    return frozenset(pruned.original_edge(eid) for eid in support)

def principal_generator(graph):
    incidence = incidence_matrix(graph)
    null = null_space_basis(incidence.matrix)

    if len(null) != 1:
        raise NotPrincipal("Kernel of the incidence matrix has dimension {}".format(len(null)))

    generator = kernel_vector_to_binomial(primitive_integer_vector(null[0]), incidence)

    predicted = predict_support(graph)
    if predicted is not None and predicted != generator.support:
        logging.warning("Generator {} has support {} but {} was predicted".format(
            generator, sorted(generator.support), sorted(predicted)))
        raise CorollaryViolation("Support of {} disagrees with the predicted {}".format(generator, sorted(predicted)))

    return generator


class _ComponentIdeal:

    def __init__(self, kind, generators, method, certified_minimal, complete=True):
        self.kind = kind
        self.generators = generators
        self.method = method
        self.certified_minimal = certified_minimal
        self.complete = complete

def _check_two_cycle_shape(graph, structure, principal):
    if not graph.oriented:
        return

    balanced = [is_balanced(graph, c) for c in structure.cycles]
    expected = structure_is_single_generator(structure, balanced)

    if expected is not None and expected != principal:
        logging.warning("{} with balanced flags {} has principal={}".format(structure, balanced, principal))
        raise CorollaryViolation("Structure {} predicts principal={} but the kernel says {}".format(
            structure.tag.value, expected, principal))

def _component_ideal(component, mu, budget, force_oracle):
    pruned = prune_leaves(component.graph)
    g = pruned.graph

    def original(eid):
        return component.original_edge(pruned.original_edge(eid))

    edge_ids = [original(eid) for eid in g.edge_ids]

    logging.debug("Component {} keeps {} of {} edges after pruning".format(
        component, g.edge_count, component.graph.edge_count))

    if g.edge_count == 0:
        return _ComponentIdeal(IdealKind.Zero, [], Method.RankTest, True)

    dimension = kernel_dimension(g)
    if dimension == 0:
        return _ComponentIdeal(IdealKind.Zero, [], Method.RankTest, True)

    structure = classify_structure(g)
    if structure.tag in TWO_CYCLE_SHAPES:
        _check_two_cycle_shape(g, structure, dimension == 1)

    if dimension == 1 and not force_oracle:
        generator = principal_generator(g)
        method = Method.PrimitiveKernel

        if structure.tag == Structure.Unicyclic and g.oriented:
            if balanced_cycle_generator(g, structure.cycles[0]) != generator:
                raise CorollaryViolation("Cycle algorithm and kernel disagree on {}".format(list(structure.cycles[0])))
            method = Method.BalancedCycleAlgorithm

        return _ComponentIdeal(IdealKind.Principal, [generator.reembed(edge_ids, mu)], method, True)

    basis, certified = saturate_markov_basis(incidence_matrix(g), budget)
    generators = [b.reembed(edge_ids, mu) for b in basis]

    kind = IdealKind.Principal if len(generators) == 1 and certified else IdealKind.Basis
    return _ComponentIdeal(kind, generators, Method.OracleSaturation, certified, certified)

def sort_generators(generators):
    """Ascending degree; within a degree, larger monomials in the oracle order first."""
    generators = list(generators)
    if not generators:
        return generators

    order = MonomialOrder(generators[0].length)
    generators.sort(key=lambda b: (order.key(b.plus), order.key(b.minus)), reverse=True)
    generators.sort(key=lambda b: b.degree)
    return generators

def compute_toric_ideal(graph, budget=None, force_oracle=False, max_workers=1):
    validate(graph)
    budget = budget or Budget()
    mu = graph.edge_count
    components = connected_components(graph)

    def work(component):
        return _component_ideal(component, mu, budget, force_oracle)

    if max_workers > 1 and len(components) > 1:
        with ThreadPoolExecutor(max_workers=max_workers) as pool:
            parts = list(pool.map(work, components))
    else:
        parts = [work(c) for c in components]

    nonzero = [p for p in parts if p.kind != IdealKind.Zero]
    complete = all(p.complete for p in parts)

    if not nonzero:
        return ToricIdealResult(IdealKind.Zero, [], Method.RankTest, True, complete)

    if len(nonzero) == 1 and nonzero[0].kind == IdealKind.Principal:
        part = nonzero[0]
        return ToricIdealResult(IdealKind.Principal, part.generators, part.method, part.certified_minimal, complete)

    generators = sort_generators(g for p in nonzero for g in p.generators)

    if any(p.method == Method.OracleSaturation for p in nonzero):
        method = Method.OracleSaturation
        certified = all(p.certified_minimal for p in nonzero)
    else:
        method = Method.PrimitiveKernel
        certified = False

    return ToricIdealResult(IdealKind.Basis, generators, method, certified, complete)
