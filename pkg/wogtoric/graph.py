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

import networkx as nx


class GraphError(ValueError):
    pass

class SelfLoop(GraphError):
    def __init__(self, edge_id, edge):
        super().__init__("Edge e{} {} is a self-loop".format(edge_id, edge))
        self.edge_id = edge_id

class ParallelEdge(GraphError):
    def __init__(self, edge_id, other_id):
        super().__init__("Edges e{} and e{} join the same pair of vertices".format(other_id, edge_id))
        self.edge_ids = (other_id, edge_id)

class BadVertexId(GraphError):
    def __init__(self, edge_id, vertex, vertex_count):
        super().__init__("Edge e{} uses vertex {} outside [1, {}]".format(edge_id, vertex, vertex_count))
        self.edge_id = edge_id

class NonPositiveWeight(GraphError):
    def __init__(self, what, value):
        super().__init__("{} must be a positive integer, got {}".format(what, value))

class NotPruned(GraphError):
    def __init__(self, vertex):
        super().__init__("Vertex x{} is a leaf; prune the graph first".format(vertex))
        self.vertex = vertex

class NotACycle(GraphError):
    pass

class OddLength(GraphError):
    pass


class _EdgeGraph:
    """Shared behaviour of graphs whose edges carry two-variable edge monomials."""

    oriented = False

    @property
    def vertex_count(self):
        return self._vertex_count

    @property
    def edge_count(self):
        return len(self._edges)

    @property
    def vertices(self):
        return range(1, self._vertex_count + 1)

    @property
    def edge_ids(self):
        return range(1, len(self._edges) + 1)

    def _edge(self, eid):
        if eid < 1 or eid > len(self._edges):
            raise KeyError("Unknown edge id e{}".format(eid))
        return self._edges[eid - 1]

    def other_end(self, eid, vertex):
        a, b = self.ends(eid)
        return b if vertex == a else a

    def entry(self, vertex, eid):
        """Incidence matrix entry of `vertex` in the column of edge `eid`."""
        for v, exp in self.column(eid):
            if v == vertex:
                return exp
        return 0

    def degrees(self):
        degree = {v: 0 for v in self.vertices}
        for eid in self.edge_ids:
            for v in self.ends(eid):
                degree[v] += 1
        return degree

    def to_networkx(self):
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        for eid in self.edge_ids:
            a, b = self.ends(eid)
            g.add_edge(a, b, eid=eid)
        return g

    def edge_between(self, a, b):
        for eid in self.edge_ids:
            if set(self.ends(eid)) == {a, b}:
                return eid
        return None

    def __eq__(self, other):
        return type(self) is type(other) and self._key() == other._key()

    def __hash__(self):
        return hash((type(self).__name__, self._key()))


class WeightedOrientedGraph(_EdgeGraph):

    oriented = True

    def __init__(self, vertex_count, weights, edges):
        self._vertex_count = vertex_count
        self._weights = tuple(weights)
        self._edges = tuple((int(t), int(h)) for t, h in edges)

    @property
    def weights(self):
        return self._weights

    @property
    def edges(self):
        return self._edges

    def weight(self, vertex):
        return self._weights[vertex - 1]

    def edge(self, eid):
        return self._edge(eid)

    def ends(self, eid):
        return self._edge(eid)

    def tail(self, eid):
        return self._edge(eid)[0]

    def head(self, eid):
        return self._edge(eid)[1]

    def column(self, eid):
        tail, head = self._edge(eid)
        return ((tail, 1), (head, self.weight(head)))

    def subgraph(self, vertex_ids, edge_ids):
        """Graph on `vertex_ids` (renumbered 1..k in the given order) with the listed edges."""
        vertex_ids = list(vertex_ids)
        position = {v: idx + 1 for idx, v in enumerate(vertex_ids)}
        weights = [self.weight(v) for v in vertex_ids]
        edges = [(position[self.tail(eid)], position[self.head(eid)]) for eid in edge_ids]
        return WeightedOrientedGraph(len(vertex_ids), weights, edges)

    def as_monomial_graph(self):
        return GeneralEdgeMonomialGraph(self._vertex_count,
            [(t, 1, h, self.weight(h)) for t, h in self._edges])

    def _key(self):
        return (self._vertex_count, self._weights, self._edges)

    def __repr__(self):
        return "WeightedOrientedGraph(vertex_count={}, weights={}, edges={})".format(
            self._vertex_count, list(self._weights), list(self._edges))


class GeneralEdgeMonomialGraph(_EdgeGraph):
    """Edges are arbitrary monomials x_a^p x_b^q with a != b."""

    def __init__(self, vertex_count, edges):
        self._vertex_count = vertex_count
        self._edges = tuple((int(a), int(p), int(b), int(q)) for a, p, b, q in edges)

    @property
    def edges(self):
        return self._edges

    def ends(self, eid):
        a, _, b, _ = self._edge(eid)
        return (a, b)

    def column(self, eid):
        a, p, b, q = self._edge(eid)
        return ((a, p), (b, q))

    def subgraph(self, vertex_ids, edge_ids):
        vertex_ids = list(vertex_ids)
        position = {v: idx + 1 for idx, v in enumerate(vertex_ids)}
        edges = []
        for eid in edge_ids:
            a, p, b, q = self._edge(eid)
            edges.append((position[a], p, position[b], q))
        return GeneralEdgeMonomialGraph(len(vertex_ids), edges)

    def as_monomial_graph(self):
        return self

    def _key(self):
        return (self._vertex_count, self._edges)

    def __repr__(self):
        return "GeneralEdgeMonomialGraph(vertex_count={}, edges={})".format(
            self._vertex_count, list(self._edges))


def validate(graph):
    if graph.vertex_count < 1:
        raise GraphError("Graph needs at least one vertex, got {}".format(graph.vertex_count))

    if graph.oriented:
        if len(graph.weights) != graph.vertex_count:
            raise GraphError("Expected {} weights, got {}".format(graph.vertex_count, len(graph.weights)))

        for vertex, w in enumerate(graph.weights, start=1):
            if int(w) != w or w < 1:
                raise NonPositiveWeight("Weight of vertex x{}".format(vertex), w)

    seen = {}

    for eid in graph.edge_ids:
        a, b = graph.ends(eid)

        for v in (a, b):
            if v < 1 or v > graph.vertex_count:
                raise BadVertexId(eid, v, graph.vertex_count)

        if a == b:
            raise SelfLoop(eid, (a, b))

        if not graph.oriented:
            for v, exp in graph.column(eid):
                if exp < 1:
                    raise NonPositiveWeight("Exponent of x{} on edge e{}".format(v, eid), exp)

        key = frozenset((a, b))
        if key in seen:
            raise ParallelEdge(eid, seen[key])
        seen[key] = eid


class Component:
    """A connected piece of a graph plus the tables mapping its ids back to the parent."""

    def __init__(self, graph, vertex_ids, edge_ids):
        self.graph = graph
        self.vertex_ids = tuple(vertex_ids)
        self.edge_ids = tuple(edge_ids)

    def original_vertex(self, vertex):
        return self.vertex_ids[vertex - 1]

    def original_edge(self, eid):
        return self.edge_ids[eid - 1]

    def __repr__(self):
        return "Component(vertices={}, edges={})".format(list(self.vertex_ids), list(self.edge_ids))

def connected_components(graph):
    g = graph.to_networkx()
    result = []

    for nodes in sorted((sorted(c) for c in nx.connected_components(g)), key=lambda c: c[0]):
        members = set(nodes)
        edge_ids = [eid for eid in graph.edge_ids if graph.ends(eid)[0] in members]
        result.append(Component(graph.subgraph(nodes, edge_ids), nodes, edge_ids))

    return result


class PruneResult:

    def __init__(self, graph, removed_edges, edge_ids):
        self.graph = graph
        self.removed_edges = tuple(removed_edges)
        self.edge_ids = tuple(edge_ids)

    def original_edge(self, eid):
        return self.edge_ids[eid - 1]

def prune_leaves(graph):
    """Drop whiskers until no vertex has degree one.  Vertex ids are kept."""
    g = graph.to_networkx()
    core = nx.k_core(g, 2)

    kept = [eid for eid in graph.edge_ids if core.has_edge(*graph.ends(eid))]
    removed = [eid for eid in graph.edge_ids if not core.has_edge(*graph.ends(eid))]

    if removed:
        logging.debug("Pruned {} whisker edges: {}".format(len(removed), removed))

    return PruneResult(graph.subgraph(graph.vertices, kept), removed, kept)


class Structure(enum.Enum):
    Forest = "forest"
    Unicyclic = "unicyclic"
    TwoCyclesSharedVertex = "two cycles sharing a vertex"
    TwoCyclesSharedPath = "two cycles sharing a path"
    TwoCyclesBridged = "two cycles joined by a path"
    MultiCycleVertexJoin = "cycles joined at one vertex"
    Other = "other"

TWO_CYCLE_SHAPES = (
    Structure.TwoCyclesSharedVertex,
    Structure.TwoCyclesSharedPath,
    Structure.TwoCyclesBridged,
)

class GraphStructure:

    def __init__(self, tag, cycles=(), shared_part=None, cycle_rank=0):
        self.tag = tag
        self.cycles = tuple(tuple(c) for c in cycles)
        self.shared_part = shared_part
        self.cycle_rank = cycle_rank

    def __repr__(self):
        return "GraphStructure({}, cycles={}, shared_part={}, cycle_rank={})".format(
            self.tag.name, [list(c) for c in self.cycles], self.shared_part, self.cycle_rank)


def canonical_cycle(edge_cycle):
    """Smallest rotation over both traversal directions."""
    edge_cycle = list(edge_cycle)
    n = len(edge_cycle)
    candidates = []

    for seq in (edge_cycle, edge_cycle[::-1]):
        for start in range(n):
            candidates.append(tuple(seq[start:] + seq[:start]))

    return min(candidates)

def _vertex_cycle_to_edges(graph, nodes):
    n = len(nodes)
    return [graph.edge_between(nodes[i], nodes[(i + 1) % n]) for i in range(n)]

def find_cycles(graph):
    """Every simple cycle of length >= 3 as a canonical edge-id tuple."""
    g = graph.to_networkx()
    cycles = set()

    for nodes in nx.simple_cycles(g):
        if len(nodes) >= 3:
            cycles.add(canonical_cycle(_vertex_cycle_to_edges(graph, nodes)))

    return sorted(cycles, key=lambda c: (len(c), c))

def _cycle_rank(graph):
    g = graph.to_networkx()
    g.remove_nodes_from([v for v, d in list(g.degree()) if d == 0])
    if g.number_of_nodes() == 0:
        return 0, 0
    return g.number_of_edges() - g.number_of_nodes() + nx.number_connected_components(g), nx.number_connected_components(g)

def _path_between(graph, start, end, edges):
    ## Walk the degree-2 chain of `edges` from start to end
    path = []
    vertex = start
    remaining = set(edges)

    while vertex != end or not path:
        eid = next(e for e in sorted(remaining) if vertex in graph.ends(e))
        remaining.discard(eid)
        path.append(eid)
        vertex = graph.other_end(eid, vertex)

    return tuple(path)

def classify_structure(graph):
    degree = graph.degrees()

    for v, d in degree.items():
        if d == 1:
            raise NotPruned(v)

    betti, pieces = _cycle_rank(graph)

    if graph.edge_count == 0:
        return GraphStructure(Structure.Forest)

    if pieces > 1:
        return GraphStructure(Structure.Other, cycle_rank=betti)

    branching = sorted(v for v, d in degree.items() if d > 2)

    if betti == 1:
        return GraphStructure(Structure.Unicyclic, cycles=find_cycles(graph), cycle_rank=1)

    if betti == 2 and len(branching) == 1 and degree[branching[0]] == 4:
        return GraphStructure(Structure.TwoCyclesSharedVertex, cycles=find_cycles(graph),
            shared_part=branching[0], cycle_rank=2)

    if betti == 2 and len(branching) == 2:
        cycles = find_cycles(graph)

        if len(cycles) == 3:
            ## Theta graph: the shortest branch is the shared path, the
            ## cycle avoiding it is the outer one and is listed last
            start, end = branching
            used = set()
            branches = []
            for eid in sorted(graph.edge_ids):
                if eid in used or start not in graph.ends(eid):
                    continue
                branch = _walk_branch(graph, start, eid, set(branching))
                used.update(branch)
                branches.append(branch)

            shared = min(branches, key=lambda b: (len(b), sorted(b)))
            outer = [c for c in cycles if not set(shared) & set(c)]
            inner = [c for c in cycles if set(shared) & set(c)]
            return GraphStructure(Structure.TwoCyclesSharedPath, cycles=inner + outer,
                shared_part=shared, cycle_rank=2)

        on_cycle = set(e for c in cycles for e in c)
        bridge = [eid for eid in graph.edge_ids if eid not in on_cycle]
        return GraphStructure(Structure.TwoCyclesBridged, cycles=cycles,
            shared_part=_path_between(graph, branching[0], branching[1], bridge), cycle_rank=2)

    if betti >= 3 and len(branching) == 1 and degree[branching[0]] == 2 * betti:
        return GraphStructure(Structure.MultiCycleVertexJoin, cycles=find_cycles(graph),
            shared_part=branching[0], cycle_rank=betti)

    return GraphStructure(Structure.Other, cycle_rank=betti)

def _walk_branch(graph, start, first_edge, stops):
    branch = [first_edge]
    vertex = graph.other_end(first_edge, start)

    while vertex not in stops:
        eid = next(e for e in graph.edge_ids if e != branch[-1] and vertex in graph.ends(e))
        branch.append(eid)
        vertex = graph.other_end(eid, vertex)

    return tuple(branch)


class CycleWalk:
    """Cycle relabelled so that edge e_i joins x_i and x_(i+1), indices mod n."""

    def __init__(self, vertices, edges):
        self.vertices = tuple(vertices)
        self.edges = tuple(edges)

    def __len__(self):
        return len(self.edges)

def cycle_walk(graph, cycle):
    cycle = list(cycle)
    edges = set(cycle)

    if len(cycle) < 3 or len(edges) != len(cycle):
        raise NotACycle("A cycle needs at least three distinct edges, got {}".format(cycle))

    for eid in cycle:
        if eid < 1 or eid > graph.edge_count:
            raise NotACycle("Edge e{} is not in the graph".format(eid))

    incident = {}
    for eid in cycle:
        for v in graph.ends(eid):
            incident.setdefault(v, []).append(eid)

    if any(len(es) != 2 for es in incident.values()) or len(incident) != len(cycle):
        raise NotACycle("Edges {} do not form a simple cycle".format(sorted(cycle)))

    ## x_1 is the vertex e_1 shares with the last listed edge when they meet
    first, last = cycle[0], cycle[-1]
    shared = set(graph.ends(first)) & set(graph.ends(last))
    start = min(shared) if shared else graph.ends(first)[0]

    vertices = [start]
    walk = [first]
    vertex = graph.other_end(first, start)

    while vertex != start:
        vertices.append(vertex)
        eid = next(e for e in incident[vertex] if e != walk[-1])
        walk.append(eid)
        vertex = graph.other_end(eid, vertex)

    if len(walk) != len(cycle):
        raise NotACycle("Edges {} do not form a single cycle".format(sorted(cycle)))

    return CycleWalk(vertices, walk)

def _require_oriented(graph):
    if not graph.oriented:
        raise GraphError("Edge orientation is only defined for weighted oriented graphs")

def orientation_counts(graph, cycle):
    """Number of edges following and opposing the traversal direction."""
    _require_oriented(graph)
    walk = cycle_walk(graph, cycle)
    n = len(walk)
    forward = sum(1 for i, eid in enumerate(walk.edges) if graph.tail(eid) == walk.vertices[i])
    return forward, n - forward

def is_naturally_oriented(graph, cycle):
    forward, backward = orientation_counts(graph, cycle)
    return forward == 0 or backward == 0

def sources_and_sinks(graph, cycle):
    _require_oriented(graph)
    walk = cycle_walk(graph, cycle)
    n = len(walk)
    sources = []
    sinks = []

    for i, vertex in enumerate(walk.vertices):
        ## x_i lies on e_(i-1) and e_i
        tails = [graph.tail(eid) == vertex for eid in (walk.edges[i - 1], walk.edges[i])]
        if all(tails):
            sources.append(vertex)
        elif not any(tails):
            sinks.append(vertex)

    return tuple(sorted(sources)), tuple(sorted(sinks))
