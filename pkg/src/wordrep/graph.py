"""Circulant graphs, Cartesian products, and explicit-map isomorphism checks.

Graphs are immutable undirected simple graphs on vertices 0..n-1 with
bitmask adjacency, built either from a circulant description (modulus plus
jump set) or from explicit edge lists.  Structural predicates for circulants
(connectivity, bipartiteness, periodic cycles, component decomposition) are
answered from the classical characterizations; the test suite checks them
against independent breadth-first oracles.
"""

from dataclasses import dataclass
from math import gcd
from typing import Iterable, NamedTuple, Sequence, Tuple

from .errors import NotNormalizableError, PreconditionError, SpecError
from .numtheory import gcd_all, solve_linear_congruence

__all__ = [
    "CirculantSpec",
    "Graph",
    "five_regular_spec",
    "canonical_jump",
    "build_circulant",
    "is_connected_circulant",
    "component_decomposition",
    "is_bipartite_circulant",
    "PeriodicCycles",
    "periodic_cycles",
    "cartesian_product",
    "complete_graph",
    "cycle_graph",
    "path_graph",
    "normalize_to_unit_jump",
    "check_isomorphism_by_map",
    "graph_to_dot",
]


@dataclass(frozen=True)
class CirculantSpec:
    """Circulant description: modulus and strictly increasing jump set.

    Jumps must satisfy 0 < r_1 < ... < r_k <= n/2; the top value n/2 is
    allowed and contributes degree 1 (the antipodal matching).
    """

    n_vertices: int
    jumps: Tuple[int, ...]

    def __post_init__(self):
        n = self.n_vertices
        jumps = tuple(self.jumps)
        object.__setattr__(self, "jumps", jumps)
        if not isinstance(n, int) or n < 2:
            raise SpecError(f"need at least 2 vertices, got {n!r}")
        if not jumps:
            raise SpecError("jump set must be nonempty")
        if list(jumps) != sorted(set(jumps)):
            raise SpecError(f"jumps must be strictly increasing, got {jumps}")
        if jumps[0] < 1 or 2 * jumps[-1] > n:
            raise SpecError(f"jumps must lie in [1, {n // 2}] for n={n}, got {jumps}")

    def degree(self) -> int:
        k = len(self.jumps)
        return 2 * k - 1 if 2 * self.jumps[-1] == self.n_vertices else 2 * k


def canonical_jump(r: int, n: int) -> int:
    """Reduce a jump value to its canonical representative min(r, n-r) mod n."""
    r %= n
    if r == 0:
        raise SpecError(f"jump 0 mod {n} is not a valid jump")
    return min(r, n - r)


def five_regular_spec(n: int, a: int, b: int) -> CirculantSpec:
    """The 5-regular circulant C_2n(a, b, n); requires 0 < a < b < n."""
    if not (isinstance(n, int) and isinstance(a, int) and isinstance(b, int)):
        raise SpecError("n, a, b must be integers")
    if not 0 < a < b < n:
        raise SpecError(f"need 0 < a < b < n, got a={a}, b={b}, n={n}")
    spec = CirculantSpec(2 * n, (a, b, n))
    assert spec.degree() == 5
    return spec


class Graph:
    """Immutable undirected simple graph on vertices 0..n-1."""

    __slots__ = ("n", "edges", "_adj", "_masks")

    def __init__(self, n_vertices: int, edges: Iterable[Tuple[int, int]]):
        if n_vertices < 1:
            raise ValueError(f"graph needs at least one vertex, got {n_vertices}")
        self.n = n_vertices
        masks = [0] * n_vertices
        norm = set()
        for u, v in edges:
            if not (0 <= u < n_vertices and 0 <= v < n_vertices):
                raise ValueError(f"edge ({u},{v}) outside vertex range 0..{n_vertices - 1}")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if u > v:
                u, v = v, u
            norm.add((u, v))
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        self.edges = frozenset(norm)
        self._masks = tuple(masks)
        self._adj = None

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self._masks[u] >> v & 1)

    def neighbors(self, v: int) -> frozenset:
        if self._adj is None:
            self._adj = tuple(
                frozenset(w for w in range(self.n) if m >> w & 1) for m in self._masks
            )
        return self._adj[v]

    def adjacency_masks(self) -> Tuple[int, ...]:
        """Per-vertex neighbor bitmasks (bit w of mask u set iff u ~ w)."""
        return self._masks

    def degree(self, v: int) -> int:
        return bin(self._masks[v]).count("1")

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def sorted_edges(self):
        return sorted(self.edges)

    def __eq__(self, other):
        return (
            isinstance(other, Graph) and self.n == other.n and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={len(self.edges)})"


def build_circulant(spec: CirculantSpec) -> Graph:
    """Build the circulant graph: i ~ j iff the canonical difference is a jump."""
    if not isinstance(spec, CirculantSpec):
        spec = CirculantSpec(*spec)
    n = spec.n_vertices
    edges = []
    for i in range(n):
        for r in spec.jumps:
            j = (i + r) % n
            if i < j:
                edges.append((i, j))
            elif j < i:
                # wrapped; the pair was or will be added from the smaller endpoint
                edges.append((j, i))
    return Graph(n, edges)


def is_connected_circulant(spec: CirculantSpec) -> bool:
    """Connectivity test: gcd of the modulus and all jumps equals 1."""
    return gcd_all((spec.n_vertices,) + spec.jumps) == 1


def component_decomposition(spec: CirculantSpec):
    """Split into d identical components, each a circulant on n/d vertices.

    Returns (d, reduced_spec); d = 1 returns the input unchanged.
    """
    d = gcd_all((spec.n_vertices,) + spec.jumps)
    if d == 1:
        return 1, spec
    reduced = CirculantSpec(spec.n_vertices // d, tuple(r // d for r in spec.jumps))
    return d, reduced


def is_bipartite_circulant(spec: CirculantSpec) -> bool:
    """Bipartiteness for connected circulants: even modulus and all jumps odd."""
    if not is_connected_circulant(spec):
        raise PreconditionError(f"{spec} is disconnected; decompose first")
    return spec.n_vertices % 2 == 0 and all(r % 2 == 1 for r in spec.jumps)


class PeriodicCycles(NamedTuple):
    length: int
    count: int
    degenerate: bool


def periodic_cycles(spec: CirculantSpec, r: int) -> PeriodicCycles:
    """Length and number of the vertex-disjoint periodic cycles of jump r.

    The jump n/2 'cycle' collapses to an antipodal pair; it is reported with
    length 2 and flagged degenerate rather than rejected.
    """
    if r not in spec.jumps:
        raise ValueError(f"jump {r} not in {spec.jumps}")
    n = spec.n_vertices
    d = gcd_all([n, r])
    return PeriodicCycles(n // d, d, 2 * r == n)


def cartesian_product(g1: Graph, g2: Graph) -> Graph:
    """Cartesian product with row-major vertex encoding (u, v) -> u*|g2| + v."""
    n2 = g2.n
    edges = []
    for u in range(g1.n):
        base = u * n2
        for v, w in g2.edges:
            edges.append((base + v, base + w))
    for u, w in g1.edges:
        for v in range(n2):
            edges.append((u * n2 + v, w * n2 + v))
    return Graph(g1.n * n2, edges)


def complete_graph(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle needs >= 3 vertices, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def normalize_to_unit_jump(n: int, a: int, b: int):
    """Relabel C_2n(a, b, n) as C_2n(x, 1, n) via a unit jump.

    Prefers b as the generator; falls back to a when only gcd(a, 2n) = 1.
    x solves gen*x = other (mod 2n) and is returned as a canonical jump.
    The returned map sends vertex i*gen of the original graph to i; the
    caller can confirm it with check_isomorphism_by_map.
    """
    lo, hi = min(a, b), max(a, b)
    five_regular_spec(n, lo, hi)
    m = 2 * n
    if gcd(b, m) == 1:
        gen, other = b, a
    elif gcd(a, m) == 1:
        gen, other = a, b
    else:
        raise NotNormalizableError(
            f"neither {a} nor {b} is a unit mod {m}; no unit-jump form exists"
        )
    x = solve_linear_congruence(gen, other, m)
    x = canonical_jump(x, m)
    image = [0] * m
    for i in range(m):
        image[(i * gen) % m] = i
    return x, tuple(image)


def check_isomorphism_by_map(g1: Graph, g2: Graph, vmap: Sequence[int]) -> bool:
    """True iff vmap carries the adjacency of g1 exactly onto that of g2."""
    if g1.n != g2.n or len(vmap) != g1.n:
        raise ValueError(f"size mismatch: |g1|={g1.n}, |g2|={g2.n}, |map|={len(vmap)}")
    if sorted(vmap) != list(range(g1.n)):
        raise ValueError("vertex map is not a permutation")
    masks2 = g2.adjacency_masks()
    for u in range(g1.n):
        mapped = 0
        m = g1.adjacency_masks()[u]
        while m:
            low = m & -m
            mapped |= 1 << vmap[low.bit_length() - 1]
            m ^= low
        if mapped != masks2[vmap[u]]:
            return False
    return True


def graph_to_dot(g: Graph, name: str = "g") -> str:
    """DOT text for an undirected graph, edges in lexicographic order."""
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        lines.append(f"  {v};")
    for u, v in g.sorted_edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
