"""Shared fixtures and independent oracles.

The oracles here deliberately avoid the library's own code paths: plain
breadth-first searches over adjacency built from scratch, and a slow
depth-first shortcut finder that enumerates directed paths literally.  They
exist so that theorem-based answers in the library are checked against
something that cannot share their bugs.
"""

import itertools

import pytest

from wordrep.graph import Graph


def bfs_components(n_vertices, edges):
    """Connected components from scratch; edges as (u, v) pairs."""
    adj = {v: set() for v in range(n_vertices)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    seen = set()
    comps = []
    for s in range(n_vertices):
        if s in seen:
            continue
        comp = {s}
        queue = [s]
        while queue:
            v = queue.pop()
            for w in adj[v]:
                if w not in comp:
                    comp.add(w)
                    queue.append(w)
        seen |= comp
        comps.append(frozenset(comp))
    return comps


def bfs_two_colorable(n_vertices, edges):
    """Greedy 2-coloring oracle; True iff no odd cycle."""
    adj = {v: set() for v in range(n_vertices)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    color = {}
    for s in range(n_vertices):
        if s in color:
            continue
        color[s] = 0
        queue = [s]
        while queue:
            v = queue.pop()
            for w in adj[v]:
                if w not in color:
                    color[w] = 1 - color[v]
                    queue.append(w)
                elif color[w] == color[v]:
                    return False
    return True


def slow_find_shortcut(orientation):
    """Literal shortcut hunt: for every arc, enumerate all directed paths
    between its endpoints and look for a non-adjacent vertex pair on them."""
    g = orientation.graph
    out = {v: sorted(w for w in range(g.n) if orientation.directed(v, w)) for v in range(g.n)}

    def paths(src, dst, path):
        if src == dst:
            yield tuple(path)
            return
        for w in out[src]:
            if w not in path:
                path.append(w)
                yield from paths(w, dst, path)
                path.pop()

    for t, h in sorted(orientation.arcs):
        for path in paths(t, h, [t]):
            if len(path) < 4:
                continue
            for i, j in itertools.combinations(range(len(path)), 2):
                if not g.adjacent(path[i], path[j]):
                    return path, (t, h), (path[i], path[j])
    return None


def wheel(k):
    rim = [(i, (i + 1) % k) for i in range(k)]
    return Graph(k + 1, rim + [(i, k) for i in range(k)])


def connected_graphs_up_to_iso(max_vertices):
    """All connected graphs on 1..max_vertices vertices, one per iso class."""
    out = []
    for n in range(1, max_vertices + 1):
        pairs = list(itertools.combinations(range(n), 2))
        seen = set()
        for bits in range(1 << len(pairs)):
            edges = [pairs[i] for i in range(len(pairs)) if bits >> i & 1]
            if len(bfs_components(n, edges)) != 1:
                continue
            canon = min(
                tuple(sorted(tuple(sorted((p[u], p[v]))) for u, v in edges))
                for p in itertools.permutations(range(n))
            )
            if (n, canon) in seen:
                continue
            seen.add((n, canon))
            out.append(Graph(n, edges))
    return out


@pytest.fixture(scope="session")
def small_connected_graphs():
    return connected_graphs_up_to_iso(5)


@pytest.fixture
def w5():
    return wheel(5)
