#!/usr/bin/env python3

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

import os, sys
import functools
import json
import logging

import click

# This allows this file to be run directly and still be able to import the
# package -- as relative imports do not work without running as a package.
# If this library is installed, the else path is followed and relative imports work as expected.
if __name__ == '__main__' and __package__ is None:
    sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))
    from wogtoric.config import Settings
    from wogtoric.fileformat import GraphFile, parse_binomials, to_dot
    from wogtoric.graph import connected_components, prune_leaves, classify_structure, is_naturally_oriented
    from wogtoric.binomial import incidence_matrix, phi_image
    from wogtoric.toric import (compute_toric_ideal, is_zero_ideal, is_balanced, is_uniformly_balanced,
        cycle_determinant)
    from wogtoric.oracle import Budget, OracleBudgetExceeded, verify_membership
    from wogtoric.util import format_row
else:
    from .config import Settings
    from .fileformat import GraphFile, parse_binomials, to_dot
    from .graph import connected_components, prune_leaves, classify_structure, is_naturally_oriented
    from .binomial import incidence_matrix, phi_image
    from .toric import (compute_toric_ideal, is_zero_ideal, is_balanced, is_uniformly_balanced,
        cycle_determinant)
    from .oracle import Budget, OracleBudgetExceeded, verify_membership
    from .util import format_row


EXIT_INVALID = 1
EXIT_UNCERTIFIED = 2
EXIT_INTERNAL = 3

COL_WIDTH = 4


def setup_logging():
    fmtstr = '%(asctime)s | %(filename)25s:%(lineno)4d %(funcName)20s() | %(levelname)7s | %(message)s'
    formatter = logging.Formatter(fmtstr)

    ## stdout carries results only
    handler   = logging.StreamHandler(sys.stderr)
    handler.setLevel(logging.DEBUG)
    handler.setFormatter(formatter)

    logger = logging.getLogger()
    logger.setLevel(logging.DEBUG)
    logger.addHandler(handler)

def _fail(code, message):
    print("Error : {}".format(message), file=sys.stderr)
    sys.exit(code)

def _exit_codes(func):
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except OracleBudgetExceeded as exc:
            _fail(EXIT_UNCERTIFIED, exc)
        except (ValueError, OSError) as exc:
            _fail(EXIT_INVALID, exc)
        except AssertionError as exc:
            _fail(EXIT_INTERNAL, "internal check failed: {}".format(exc))
    return wrapper

def _load(path):
    return GraphFile.load(path).parsed

def _budget(bound, max_degree):
    budget = settings.budget
    return Budget(
        bound if bound is not None else budget.max_spairs,
        max_degree if max_degree is not None else budget.max_degree,
    )

def _yes(flag):
    return "yes" if flag else "no"


@click.group()
@click.option('--verbose', default=False, is_flag=True, help='Increase logging level.')
@click.option('--config', 'config_path', default=None, help='YAML settings file (oracle budget, worker count).')
def cli(verbose, config_path):
    global settings

    try:
        settings = Settings.load(config_path) if config_path else Settings()
    except (ValueError, OSError) as exc:
        _fail(EXIT_INVALID, exc)

    if verbose or settings.verbose:
        setup_logging()
        logging.debug("Logging Setup")

@cli.command()
@click.argument('graph')
@click.option('--json', 'as_json', default=False, is_flag=True, help='Print the report as JSON.')
@_exit_codes
def classify(graph, as_json):
    """Report structure and per-cycle balance of every component"""
    graph = _load(graph)
    report = []

    for component in connected_components(graph):
        pruned = prune_leaves(component.graph)
        structure = classify_structure(pruned.graph)

        def original(eid):
            return component.original_edge(pruned.original_edge(eid))

        cycles = []
        for cycle in structure.cycles:
            entry = dict(
                edges = [original(eid) for eid in cycle],
                length = len(cycle),
                balanced = is_balanced(pruned.graph, cycle),
                determinant = cycle_determinant(pruned.graph, cycle),
            )
            if graph.oriented:
                entry["naturally_oriented"] = is_naturally_oriented(pruned.graph, cycle)
                if len(cycle) % 2 == 0:
                    entry["uniformly_balanced"] = is_uniformly_balanced(pruned.graph, cycle)
            cycles.append(entry)

        report.append(dict(
            vertices = list(component.vertex_ids),
            edges = list(component.edge_ids),
            pruned = [component.original_edge(eid) for eid in pruned.removed_edges],
            structure = structure.tag.value,
            cycle_rank = structure.cycle_rank,
            cycles = cycles,
        ))

    if as_json:
        print(json.dumps(report, indent=2, sort_keys=True))
        return

    for idx, item in enumerate(report, start=1):
        print("Component {} : vertices {}".format(idx, " ".join("x{}".format(v) for v in item["vertices"])))
        print("  structure   : {} (cycle rank {})".format(item["structure"], item["cycle_rank"]))
        if item["pruned"]:
            print("  pruned      : {}".format(" ".join("e{}".format(e) for e in item["pruned"])))

        for cycle in item["cycles"]:
            flags = ["balanced {}".format(_yes(cycle["balanced"])), "det {}".format(cycle["determinant"])]
            if "uniformly_balanced" in cycle:
                flags.append("uniformly balanced {}".format(_yes(cycle["uniformly_balanced"])))
            if "naturally_oriented" in cycle:
                flags.append("naturally oriented {}".format(_yes(cycle["naturally_oriented"])))

            print("  cycle       : {} | {}".format(" ".join("e{}".format(e) for e in cycle["edges"]), ", ".join(flags)))

@cli.command()
@click.argument('graph')
@click.option('--json', 'as_json', default=False, is_flag=True, help='Print the verdict as JSON.')
@_exit_codes
def zero(graph, as_json):
    """Decide whether the toric ideal is zero"""
    verdict = is_zero_ideal(_load(graph))

    if as_json:
        reason = verdict.reason.value if verdict.reason else None
        print(json.dumps(dict(zero=verdict.is_zero, reason=reason), sort_keys=True))
    else:
        print(verdict)

@cli.command()
@click.argument('graph')
@click.option('--oracle', 'force_oracle', default=False, is_flag=True, help='Always use the saturation oracle.')
@click.option('--bound', default=None, type=int, help='Maximum number of S-pair reductions for the oracle.')
@click.option('--max-degree', default=None, type=int, help='Maximum S-pair degree for the oracle.')
@click.option('--workers', default=None, type=int, help='Components computed concurrently.')
@click.option('--json', 'as_json', default=False, is_flag=True, help='Print the result as JSON.')
@_exit_codes
def generators(graph, force_oracle, bound, max_degree, workers, as_json):
    """Compute generators of the toric ideal"""
    result = compute_toric_ideal(_load(graph),
        budget=_budget(bound, max_degree),
        force_oracle=force_oracle,
        max_workers=workers if workers is not None else settings.workers)

    if as_json:
        print(json.dumps(result.to_dict(), indent=2, sort_keys=True))
    elif result.is_zero:
        print("zero ideal")
    else:
        for generator in result.generators:
            print(generator)

    if not result.complete:
        _fail(EXIT_UNCERTIFIED, "oracle budget exhausted; the generating set is not certified")

@cli.command()
@click.argument('graph')
@_exit_codes
def matrix(graph):
    """Print the incidence matrix, one row per vertex"""
    incidence = incidence_matrix(_load(graph))
    width = max([COL_WIDTH] + [len(str(v)) + 1 for row in incidence.matrix.entries for v in row])

    for row in incidence.matrix.entries:
        print(format_row(row, width))

@cli.command()
@click.argument('graph')
@click.argument('binomials')
@click.option('--bound', default=None, type=int, help='Maximum number of S-pair reductions for the oracle.')
@_exit_codes
def verify(graph, binomials, bound):
    """Check binomials for kernel and ideal membership"""
    graph = _load(graph)

    with open(binomials, encoding="utf-8") as handle:
        candidates = parse_binomials(handle.read(), graph.edge_count)

    budget = _budget(bound, None)
    result = compute_toric_ideal(graph, budget=budget, max_workers=settings.workers)

    for candidate in candidates:
        in_kernel = phi_image(graph, candidate.plus) == phi_image(graph, candidate.minus)
        in_ideal = verify_membership(candidate, list(result.generators), budget)

        print("{} : kernel {}, ideal {}".format(candidate, _yes(in_kernel), _yes(in_ideal)))

        if in_kernel and not in_ideal and result.complete:
            raise AssertionError("{} is in the kernel but not in the computed ideal".format(candidate))

    if not result.complete:
        _fail(EXIT_UNCERTIFIED, "oracle budget exhausted; membership answers are not certified")

@cli.command()
@click.argument('graph')
@_exit_codes
def dot(graph):
    """Print the graph in DOT format"""
    print(to_dot(_load(graph)), end="")


def main():
    cli()

if __name__ == '__main__':
    main()
