"""Acyclic orientations, shortcut detection, and the orientation search.

An orientation is semi-transitive when it is acyclic and shortcut-free; a
graph admits one exactly when it is word-representable, which makes the
exhaustive search here the package's decision oracle.  Shortcut detection
uses the directed-path reduction: an edge (u, v) is shortcutting iff some
non-adjacent pair (x, y) satisfies u => x => y => v under reachability
(segments of a DAG walk always concatenate into one simple path, and the
non-adjacent pair forces at least four vertices on it).

The search kernel exists twice: a compiled Cython extension for graphs on
up to 64 vertices and a pure-Python fallback for everything else.  Both
follow the same decision order, so witnesses and node counts agree; set
WORDREP_PURE_PYTHON=1 to force the fallback.
"""

import os
import random
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Tuple

from . import _stsearch_py
from .errors import HomomorphismError, PreconditionError
from .graph import Graph

try:
    from . import _stsearch
except ImportError:  # extension not built; fall back silently
    _stsearch = None

__all__ = [
    "Orientation",
    "ShortcutWitness",
    "SearchOutcome",
    "FOUND",
    "NOT_REPRESENTABLE",
    "UNDECIDED",
    "DEFAULT_SEARCH_BUDGET",
    "is_acyclic",
    "find_shortcut",
    "is_semi_transitive",
    "search_semi_transitive",
    "orient_by_color_order",
    "orientation_to_dot",
    "active_kernel",
]

FOUND = "found"
NOT_REPRESENTABLE = "not_representable"
UNDECIDED = "undecided"

DEFAULT_SEARCH_BUDGET = 50_000_000

_STATUS = {0: FOUND, 1: NOT_REPRESENTABLE, 2: UNDECIDED}


class Orientation:
    """A direction assignment for every edge of a graph."""

    __slots__ = ("graph", "arcs", "_out", "_in")

    def __init__(self, graph: Graph, arcs: Iterable[Tuple[int, int]]):
        self.graph = graph
        arcs = frozenset((int(t), int(h)) for t, h in arcs)
        seen = set()
        out = [0] * graph.n
        into = [0] * graph.n
        for t, h in arcs:
            key = (t, h) if t < h else (h, t)
            if key not in graph.edges:
                raise ValueError(f"arc {t}->{h} is not an edge of the graph")
            if key in seen:
                raise ValueError(f"edge {key} directed twice")
            seen.add(key)
            out[t] |= 1 << h
            into[h] |= 1 << t
        if len(seen) != len(graph.edges):
            missing = set(graph.edges) - seen
            raise ValueError(f"{len(missing)} edges left undirected, e.g. {sorted(missing)[:3]}")
        self.arcs = arcs
        self._out = tuple(out)
        self._in = tuple(into)

    def directed(self, tail: int, head: int) -> bool:
        return bool(self._out[tail] >> head & 1)

    def out_mask(self, v: int) -> int:
        return self._out[v]

    def in_mask(self, v: int) -> int:
        return self._in[v]

    def sorted_arcs(self):
        return sorted(self.arcs)

    def __eq__(self, other):
        return (
            isinstance(other, Orientation)
            and self.graph == other.graph
            and self.arcs == other.arcs
        )

    def __hash__(self):
        return hash((self.graph, self.arcs))

    def __repr__(self):
        return f"Orientation(n={self.graph.n}, arcs={len(self.arcs)})"


@dataclass(frozen=True)
class ShortcutWitness:
    """A directed path, its shortcutting edge, and a non-adjacent pair on it."""

    path: Tuple[int, ...]
    shortcutting_edge: Tuple[int, int]
    missing_pair: Tuple[int, int]

    def to_json(self) -> dict:
        return {
            "path": list(self.path),
            "shortcutting_edge": list(self.shortcutting_edge),
            "missing_pair": list(self.missing_pair),
        }


def _bits(m: int):
    while m:
        low = m & -m
        yield low.bit_length() - 1
        m ^= low


def _topological_order(o: Orientation) -> Optional[list]:
    n = o.graph.n
    indeg = [bin(o.in_mask(v)).count("1") for v in range(n)]
    ready = sorted(v for v in range(n) if indeg[v] == 0)
    out = []
    while ready:
        v = ready.pop(0)
        out.append(v)
        for w in _bits(o.out_mask(v)):
            indeg[w] -= 1
            if indeg[w] == 0:
                ready.append(w)
    return out if len(out) == n else None


def is_acyclic(o: Orientation) -> bool:
    return _topological_order(o) is not None


def _reach_masks(o: Orientation, topo):
    """Descendant and ancestor bitmasks (both including self)."""
    n = o.graph.n
    desc = [0] * n
    anc = [0] * n
    for v in reversed(topo):
        m = 1 << v
        for w in _bits(o.out_mask(v)):
            m |= desc[w]
        desc[v] = m
    for v in topo:
        m = 1 << v
        for w in _bits(o.in_mask(v)):
            m |= anc[w]
        anc[v] = m
    return desc, anc


def _walk(o: Orientation, src: int, dst: int, desc) -> list:
    """Some directed path src -> ... -> dst; requires dst reachable from src."""
    path = [src]
    cur = src
    while cur != dst:
        for w in _bits(o.out_mask(cur)):
            if desc[w] >> dst & 1:
                path.append(w)
                cur = w
                break
        else:  # pragma: no cover - reachability guaranteed by caller
            raise AssertionError("reachability bookkeeping broken")
    return path


def find_shortcut(o: Orientation) -> Optional[ShortcutWitness]:
    """First shortcut witness in deterministic order, or None if shortcut-free."""
    topo = _topological_order(o)
    if topo is None:
        raise PreconditionError("shortcut detection expects an acyclic orientation")
    desc, anc = _reach_masks(o, topo)
    masks = o.graph.adjacency_masks()
    for u, v in sorted(o.arcs):
        for y in _bits(anc[v]):
            xs = anc[y] & desc[u] & ~masks[y] & ~(1 << y)
            if xs:
                x = (xs & -xs).bit_length() - 1
                p1 = _walk(o, u, x, desc)
                p2 = _walk(o, x, y, desc)
                p3 = _walk(o, y, v, desc)
                path = tuple(p1 + p2[1:] + p3[1:])
                assert len(path) >= 4 and len(set(path)) == len(path)
                return ShortcutWitness(path, (u, v), (x, y))
    return None


def is_semi_transitive(o: Orientation) -> bool:
    return is_acyclic(o) and find_shortcut(o) is None


@dataclass(frozen=True)
class SearchOutcome:
    status: str
    orientation: Optional[Orientation]
    nodes: int


def _is_connected(g: Graph) -> bool:
    masks = g.adjacency_masks()
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= masks[v]
        frontier = nxt & ~seen
        seen |= nxt
    return seen == (1 << g.n) - 1


def active_kernel(n_vertices: int, kernel: str = "auto") -> str:
    """Which search kernel a graph of this size would use."""
    if kernel == "pure":
        return "pure"
    if kernel == "compiled":
        if _stsearch is None:
            raise RuntimeError("compiled kernel requested but extension not built")
        if n_vertices > 64:
            raise RuntimeError("compiled kernel handles at most 64 vertices")
        return "compiled"
    if (
        _stsearch is not None
        and n_vertices <= 64
        and os.environ.get("WORDREP_PURE_PYTHON") != "1"
    ):
        return "compiled"
    return "pure"


def _relabeled_masks(g: Graph, new_index):
    masks = g.adjacency_masks()
    relabeled = [0] * g.n
    for old in range(g.n):
        m = 0
        for w in _bits(masks[old]):
            m |= 1 << new_index[w]
        relabeled[new_index[old]] = m
    return relabeled


def _bfs_relabel(g: Graph, rng) -> list:
    """new_index from a breadth-first order with random root and shuffles.

    Locality-preserving labels make the kernel's index-ascending insertion
    behave like a most-constrained-first order, which is where witnesses
    hide; the random root and neighbor shuffles diversify restarts.
    """
    masks = g.adjacency_masks()
    root = rng.randrange(g.n)
    seen = {root}
    queue = [root]
    visit = []
    while queue:
        v = queue.pop(0)
        visit.append(v)
        nbrs = list(_bits(masks[v]))
        rng.shuffle(nbrs)
        for w in nbrs:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    new_index = [0] * g.n
    for pos, old in enumerate(visit):
        new_index[old] = pos
    return new_index


def _orientation_from_order(g: Graph, new_index, order) -> Orientation:
    position = [0] * g.n
    for pos, v in enumerate(order):
        position[v] = pos
    arcs = []
    for u, v in g.edges:
        if position[new_index[u]] < position[new_index[v]]:
            arcs.append((u, v))
        else:
            arcs.append((v, u))
    return Orientation(g, arcs)


def search_semi_transitive(
    g: Graph,
    budget: int = DEFAULT_SEARCH_BUDGET,
    vertex_transitive: bool = False,
    kernel: str = "auto",
    mode: str = "auto",
) -> SearchOutcome:
    """Search for a semi-transitive orientation of a connected graph.

    Two phases share the node budget.  A systematic pass enumerates acyclic
    orientations as topological insertion orders (descending-degree labels,
    incremental shortcut pruning); if it exhausts the space the graph is
    definitively `not_representable`.  If it hits its cap instead, seeded
    breadth-first relabelings restart the enumeration from diverse corners
    of the order space until the budget runs out (`undecided`) or a witness
    appears.  mode="exhaustive" spends the whole budget on the systematic
    pass, which is the configuration for non-representability hunts.

    Every phase is deterministic (fixed seeds), so outcomes are reproducible
    and identical across the compiled and pure kernels.

    vertex_transitive=True restricts the first inserted vertex, which
    preserves exhaustiveness only for vertex-transitive graphs (any
    orientation can be shifted so that a fixed vertex becomes a source).
    """
    if mode not in ("auto", "exhaustive"):
        raise ValueError(f"mode must be 'auto' or 'exhaustive', got {mode!r}")
    if not _is_connected(g):
        raise PreconditionError("search expects a connected graph; decompose first")
    impl = active_kernel(g.n, kernel)
    mod = _stsearch if impl == "compiled" else _stsearch_py
    full_mask = (1 << g.n) - 1

    def run(new_index, cap, first_mask):
        code, order, nodes = mod.search_orders(_relabeled_masks(g, new_index), cap, first_mask)
        return code, order, nodes

    by_degree = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    new_index = [0] * g.n
    for new, old in enumerate(by_degree):
        new_index[old] = new
    first_mask = 1 if vertex_transitive else full_mask

    total = 0
    cap = budget if mode == "exhaustive" else min(budget, max(100_000, budget // 10))
    code, order, nodes = run(new_index, cap, first_mask)
    total += nodes
    if code == 0:
        found = _orientation_from_order(g, new_index, order)
        assert is_semi_transitive(found), "kernel returned a non-semi-transitive orientation"
        return SearchOutcome(FOUND, found, total)
    if code == 1:
        return SearchOutcome(NOT_REPRESENTABLE, None, total)
    if mode == "exhaustive" or total >= budget:
        return SearchOutcome(UNDECIDED, None, total)

    seed = 0
    while total < budget:
        restart_cap = min(50_000 << min(seed // 100, 6), budget - total)
        rng = random.Random(seed)
        new_index = _bfs_relabel(g, rng)
        code, order, nodes = run(new_index, restart_cap, first_mask)
        total += nodes
        if code == 0:
            found = _orientation_from_order(g, new_index, order)
            assert is_semi_transitive(found), "kernel returned a non-semi-transitive orientation"
            return SearchOutcome(FOUND, found, total)
        if code == 1:
            return SearchOutcome(NOT_REPRESENTABLE, None, total)
        seed += 1
    return SearchOutcome(UNDECIDED, None, total)


def orient_by_color_order(g: Graph, colors: Sequence[int], color_dag) -> Orientation:
    """Orient every edge from the earlier to the later color of the dag.

    Every edge must join two colors related in the (acyclic) dag; an edge
    between equal or unrelated colors raises HomomorphismError.  The result
    is acyclic because directed cycles would project to cycles on colors.
    """
    relation = set((int(c1), int(c2)) for c1, c2 in color_dag)
    ids = set()
    for c1, c2 in relation:
        ids.add(c1)
        ids.add(c2)
    # reject cyclic relations up front
    remaining = dict()
    for c in ids:
        remaining[c] = 0
    for c1, c2 in relation:
        remaining[c2] += 1
    queue = [c for c in sorted(ids) if remaining[c] == 0]
    seen = 0
    while queue:
        c = queue.pop()
        seen += 1
        for c1, c2 in relation:
            if c1 == c:
                remaining[c2] -= 1
                if remaining[c2] == 0:
                    queue.append(c2)
    if seen != len(ids):
        raise ValueError("color relation contains a directed cycle")

    if len(colors) != g.n:
        raise ValueError(f"coloring covers {len(colors)} of {g.n} vertices")
    arcs = []
    for u, v in g.edges:
        cu, cv = colors[u], colors[v]
        if (cu, cv) in relation:
            arcs.append((u, v))
        elif (cv, cu) in relation:
            arcs.append((v, u))
        else:
            raise HomomorphismError(
                f"edge ({u},{v}) joins colors {cu},{cv} that are equal or unrelated"
            )
    return Orientation(g, arcs)


def orientation_to_dot(o: Orientation, name: str = "o") -> str:
    """DOT text for a directed graph, arcs in lexicographic order."""
    lines = [f"digraph {name} {{"]
    for v in range(o.graph.n):
        lines.append(f"  {v};")
    for t, h in o.sorted_arcs():
        lines.append(f"  {t} -> {h};")
    lines.append("}")
    return "\n".join(lines) + "\n"
