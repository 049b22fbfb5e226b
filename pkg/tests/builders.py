import os
import random

from wogtoric import WeightedOrientedGraph, parse_graph, prune_leaves

DATA_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), "data")


def data_path(name):
    return os.path.join(DATA_DIR, name)

def load(name):
    with open(data_path(name)) as handle:
        return parse_graph(handle.read())

def vector_of(text_plus, text_minus, length):
    ## {edge: exp} dicts to a signed exponent vector
    vector = [0] * length
    for eid, exp in text_plus.items():
        vector[eid - 1] = exp
    for eid, exp in text_minus.items():
        vector[eid - 1] = -exp
    return vector

def oriented_cycle(forward, weights):
    """Cycle x1 - x2 - ... - xn - x1; forward[i] orients e_(i+1) from x_(i+1) to x_(i+2)."""
    n = len(forward)
    edges = []
    for i, f in enumerate(forward):
        a, b = i + 1, (i + 1) % n + 1
        edges.append((a, b) if f else (b, a))
    return WeightedOrientedGraph(n, weights, edges)

def cycle_roles(forward):
    ## role of vertex x_(i+1), which sits between edges i-1 and i
    n = len(forward)
    roles = []
    for i in range(n):
        before, after = forward[i - 1], forward[i]
        if before == after:
            roles.append("through")
        elif after:
            roles.append("source")
        else:
            roles.append("sink")
    return roles

def cycle_weightings(forward, values=(1, 2, 3)):
    """Every weighting with `values` on pass-through vertices; sources weigh 1, sinks 2."""
    roles = cycle_roles(forward)
    through = [i for i, r in enumerate(roles) if r == "through"]

    def fill(idx, current):
        if idx == len(through):
            yield list(current)
            return
        for value in values:
            current[through[idx]] = value
            yield from fill(idx + 1, current)

    base = [1 if r == "source" else 2 for r in roles]
    yield from fill(0, base)

def all_oriented_cycles(n, values=(1, 2, 3)):
    for mask in range(2 ** n):
        forward = [bool(mask >> i & 1) for i in range(n)]
        for weights in cycle_weightings(forward, values):
            yield forward, oriented_cycle(forward, weights)

def random_cycle(rng, n, values=(1, 2, 3)):
    forward = [rng.random() < 0.5 for _ in range(n)]
    weights = [rng.choice(values) for _ in range(n)]
    return forward, oriented_cycle(forward, weights)

def _orient(rng, a, b):
    return (a, b) if rng.random() < 0.5 else (b, a)

def _cycle_edges(rng, vertices):
    n = len(vertices)
    return [_orient(rng, vertices[i], vertices[(i + 1) % n]) for i in range(n)]

def random_two_cycle_graph(rng, shape, weights=(1, 1, 2, 3)):
    """Two cycles of lengths 3..5 sharing a vertex, sharing a path of length 1..2, or joined by a path of length 1..2."""
    m = rng.randint(3, 5)
    n = rng.randint(3, 5)

    if shape == "vertex":
        left = list(range(1, m + 1))
        right = [1] + list(range(m + 1, m + n))
        edges = _cycle_edges(rng, left) + _cycle_edges(rng, right)
        count = m + n - 1

    elif shape == "path":
        ## Theta graph: branches of lengths s, m - s and n - s between u=1 and v
        s = rng.randint(1, 2)
        m = max(m, s + 2)
        n = max(n, s + 2)
        count = 2
        def branch(length, start, end):
            nonlocal count
            inner = list(range(count + 1, count + length))
            count += length - 1
            chain = [start] + inner + [end]
            return [_orient(rng, chain[i], chain[i + 1]) for i in range(length)]
        edges = branch(s, 1, 2) + branch(m - s, 1, 2) + branch(n - s, 1, 2)

    else:
        s = rng.randint(1, 2)
        left = list(range(1, m + 1))
        right = list(range(m + s, m + s + n))
        path = [m] + list(range(m + 1, m + s)) + [m + s]
        edges = _cycle_edges(rng, left) + _cycle_edges(rng, right)
        edges += [_orient(rng, path[i], path[i + 1]) for i in range(s)]
        count = m + s + n - 1

    rng.shuffle(edges)
    return WeightedOrientedGraph(count, [rng.choice(weights) for _ in range(count)], edges)

def random_leafless_graph(rng, max_edges=7, weights=(1, 1, 2, 3)):
    """Connected graph with no leaves and at most `max_edges` edges, or None."""
    n = rng.randint(3, 6)
    pairs = set()

    for v in range(2, n + 1):
        pairs.add(frozenset((v, rng.randint(1, v - 1))))

    candidates = [frozenset((a, b)) for a in range(1, n + 1) for b in range(a + 1, n + 1)]
    rng.shuffle(candidates)
    for pair in candidates:
        if len(pairs) >= max_edges:
            break
        if rng.random() < 0.4:
            pairs.add(pair)

    edges = [_orient(rng, *sorted(p)) for p in sorted(pairs, key=sorted)]
    graph = WeightedOrientedGraph(n, [rng.choice(weights) for _ in range(n)], edges)

    pruned = prune_leaves(graph).graph
    used = sorted(set(v for e in pruned.edges for v in e))
    if len(used) < 3:
        return None

    return pruned.subgraph(used, pruned.edge_ids)

def seeded(seed):
    return random.Random(seed)
