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

import re

from .binomial import Binomial, BinomialError
from .graph import WeightedOrientedGraph, GeneralEdgeMonomialGraph, validate

_TOKEN = re.compile(r"\S+")
_FACTOR = re.compile(r"^e(\d+)(?:\^(\d+))?$")


class ParseError(ValueError):

    def __init__(self, line, column, message):
        super().__init__("line {}, column {}: {}".format(line, column, message))
        self.line = line
        self.column = column
        self.message = message


def _tokens(text):
    ## (line number, [(column, token), ...]) for every non-blank line, comments removed
    for number, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0]
        tokens = [(m.start() + 1, m.group()) for m in _TOKEN.finditer(line)]
        if tokens:
            yield number, tokens

def _integer(number, column, token, minimum=None):
    try:
        value = int(token)
    except ValueError:
        raise ParseError(number, column, "expected an integer, got '{}'".format(token))

    if minimum is not None and value < minimum:
        raise ParseError(number, column, "expected an integer >= {}, got {}".format(minimum, value))

    return value

def parse_graph(text):
    vertex_count = None
    weights = None
    edges = []
    monomials = []
    section = None

    for number, tokens in _tokens(text):
        column, keyword = tokens[0]

        if keyword == "vertices":
            if vertex_count is not None:
                raise ParseError(number, column, "'vertices' given twice")
            if len(tokens) != 2:
                raise ParseError(number, column, "expected 'vertices <count>'")
            vertex_count = _integer(number, tokens[1][0], tokens[1][1], minimum=1)
            section = None

        elif keyword == "weights":
            if vertex_count is None:
                raise ParseError(number, column, "'weights' before 'vertices'")
            if weights is not None:
                raise ParseError(number, column, "'weights' given twice")
            if len(tokens) - 1 != vertex_count:
                raise ParseError(number, column, "expected {} weights, got {}".format(vertex_count, len(tokens) - 1))
            weights = [_integer(number, c, t, minimum=1) for c, t in tokens[1:]]
            section = None

        elif keyword in ("edges", "monomials"):
            if vertex_count is None:
                raise ParseError(number, column, "'{}' before 'vertices'".format(keyword))
            if len(tokens) != 1:
                raise ParseError(number, tokens[1][0], "unexpected text after '{}'".format(keyword))
            if (keyword == "edges" and monomials) or (keyword == "monomials" and edges) or section not in (None, keyword):
                raise ParseError(number, column, "a graph file has either an 'edges' or a 'monomials' section")
            section = keyword

        elif section == "edges":
            if len(tokens) != 2:
                raise ParseError(number, column, "expected '<tail> <head>'")
            edges.append(tuple(_integer(number, c, t) for c, t in tokens))

        elif section == "monomials":
            if len(tokens) != 4:
                raise ParseError(number, column, "expected '<vertex> <exponent> <vertex> <exponent>'")
            a, p, b, q = [_integer(number, c, t) for c, t in tokens]
            monomials.append((a, p, b, q))

        else:
            raise ParseError(number, column, "unknown directive '{}'".format(keyword))

    if vertex_count is None:
        raise ParseError(1, 1, "missing 'vertices' line")

    if monomials:
        if weights is not None:
            raise ParseError(1, 1, "'weights' do not apply to a 'monomials' section")
        graph = GeneralEdgeMonomialGraph(vertex_count, monomials)
    else:
        graph = WeightedOrientedGraph(vertex_count, weights or [1] * vertex_count, edges)

    validate(graph)
    return graph

def format_graph(graph):
    lines = ["vertices {}".format(graph.vertex_count)]

    if graph.oriented:
        lines.append("weights {}".format(" ".join(str(w) for w in graph.weights)))
        lines.append("edges")
        lines.extend("{} {}".format(t, h) for t, h in graph.edges)
    else:
        lines.append("monomials")
        lines.extend("{} {} {} {}".format(*edge) for edge in graph.edges)

    return "\n".join(lines) + "\n"


class GraphFile:

    def __init__(self, parsed, source_path):
        self.parsed = parsed
        self.source_path = source_path

    @classmethod
    def load(cls, path):
        with open(path, encoding="utf-8") as handle:
            return cls(parse_graph(handle.read()), path)

    def __repr__(self):
        return "GraphFile('{}', {})".format(self.source_path, self.parsed)


def _parse_monomial(number, column, text, edge_count):
    exps = [0] * edge_count

    if text.strip() == "1":
        return exps

    for match in _TOKEN.finditer(text):
        factor = _FACTOR.match(match.group())
        where = column + match.start()

        if factor is None:
            raise ParseError(number, where, "expected 'e<id>^<exp>', got '{}'".format(match.group()))

        eid = int(factor.group(1))
        if eid < 1 or eid > edge_count:
            raise ParseError(number, where, "edge e{} outside [1, {}]".format(eid, edge_count))

        exps[eid - 1] += int(factor.group(2) or 1)

    return exps

def parse_binomial(text, edge_count, number=1):
    text = text.split("#", 1)[0]
    parts = text.split(" - ")

    if len(parts) != 2:
        raise ParseError(number, 1, "expected '<monomial> - <monomial>'")

    plus = _parse_monomial(number, 1, parts[0], edge_count)
    minus = _parse_monomial(number, len(parts[0]) + 4, parts[1], edge_count)

    try:
        return Binomial(plus, minus)
    except BinomialError as exc:
        raise ParseError(number, 1, str(exc))

def parse_binomials(text, edge_count):
    return [parse_binomial(line, edge_count, number)
            for number, line in enumerate(text.splitlines(), start=1)
            if line.split("#", 1)[0].strip()]


def to_dot(graph):
    lines = []

    if graph.oriented:
        lines.append("digraph D {")
        for v in graph.vertices:
            lines.append('  x{0} [label="x{0} (w={1})"];'.format(v, graph.weight(v)))
        for eid in graph.edge_ids:
            lines.append('  x{} -> x{} [label="e{}"];'.format(graph.tail(eid), graph.head(eid), eid))
    else:
        lines.append("graph M {")
        for v in graph.vertices:
            lines.append('  x{0} [label="x{0}"];'.format(v))
        for eid in graph.edge_ids:
            a, p, b, q = graph.edges[eid - 1]
            lines.append('  x{} -- x{} [label="e{} = x{}^{} x{}^{}"];'.format(a, b, eid, a, p, b, q))

    lines.append("}")
    return "\n".join(lines) + "\n"
