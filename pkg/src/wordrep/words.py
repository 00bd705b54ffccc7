"""Words over vertex alphabets and the word/graph correspondence.

A word represents a graph when two letters alternate in it exactly for the
adjacent vertex pairs.  This module provides the alternation test, the
uniformity measure, both directions of the correspondence, cyclic rotation
of uniform words, and a budgeted exhaustive search for the least k such
that a k-uniform representing word exists (practical up to ~8 vertices).
"""

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .errors import PreconditionError
from .graph import Graph

__all__ = [
    "alternates",
    "uniformity",
    "graph_of_word",
    "represents",
    "rotate_uniform",
    "WordSearchResult",
    "min_uniform_representation",
    "read_word_file",
    "write_word_file",
]

DEFAULT_WORD_BUDGET = 10_000_000

FOUND = "found"
NOT_FOUND = "not_found"
UNDECIDED = "undecided"


def _positions(w: Sequence[int]):
    pos = {}
    for i, c in enumerate(w):
        pos.setdefault(c, []).append(i)
    return pos


def _alternate_positions(px: List[int], py: List[int]) -> bool:
    """Strict alternation of two merged, individually sorted position lists."""
    if abs(len(px) - len(py)) > 1:
        return False
    i = j = 0
    want_x = px[0] < py[0]
    while i < len(px) or j < len(py):
        if want_x:
            if i >= len(px) or (j < len(py) and py[j] < px[i]):
                return False
            i += 1
        else:
            if j >= len(py) or (i < len(px) and px[i] < py[j]):
                return False
            j += 1
        want_x = not want_x
    return True


def alternates(w: Sequence[int], x: int, y: int) -> bool:
    """True iff restricting w to {x, y} gives xyxy... or yxyx...

    Both letters must occur at least once; a missing letter yields False.
    """
    if x == y:
        raise ValueError(f"alternation needs two distinct letters, got {x} twice")
    px = [i for i, c in enumerate(w) if c == x]
    py = [i for i, c in enumerate(w) if c == y]
    if not px or not py:
        return False
    return _alternate_positions(px, py)


def uniformity(w: Sequence[int]) -> Optional[int]:
    """k when every letter occurs exactly k times, else None."""
    if not w:
        raise ValueError("empty word has no uniformity")
    counts = set()
    pos = _positions(w)
    for p in pos.values():
        counts.add(len(p))
    if len(counts) == 1:
        return counts.pop()
    return None


def graph_of_word(w: Sequence[int]) -> Graph:
    """Graph on the word's alphabet with edges at alternating letter pairs.

    Requires a densely labeled alphabet 0..m-1; relabel first otherwise.
    """
    pos = _positions(w)
    m = len(pos)
    if set(pos) != set(range(m)):
        raise ValueError(f"alphabet must be 0..{m - 1}, got {sorted(pos)}")
    edges = []
    letters = sorted(pos)
    for i, x in enumerate(letters):
        for y in letters[i + 1 :]:
            if _alternate_positions(pos[x], pos[y]):
                edges.append((x, y))
    return Graph(m, edges)


def represents(w: Sequence[int], g: Graph):
    """Whether w represents g, plus every disagreeing pair.

    Returns (ok, violations) where each violation is
    ((x, y), expected_adjacent, observed_alternation).
    """
    pos = _positions(w)
    if set(pos) != set(range(g.n)):
        raise ValueError(
            f"word alphabet {sorted(pos)} does not match vertex set 0..{g.n - 1}"
        )
    violations = []
    for x in range(g.n):
        for y in range(x + 1, g.n):
            alt = _alternate_positions(pos[x], pos[y])
            adj = g.adjacent(x, y)
            if alt != adj:
                violations.append(((x, y), adj, alt))
    return not violations, violations


def rotate_uniform(w: Sequence[int], cut: int) -> Tuple[int, ...]:
    """Cyclic rotation v+u of the k-uniform word w = u+v, split at cut."""
    if uniformity(w) is None:
        raise PreconditionError("rotation preserves representation only for uniform words")
    if not 0 <= cut <= len(w):
        raise ValueError(f"cut {cut} outside [0, {len(w)}]")
    w = tuple(w)
    return w[cut:] + w[:cut]


@dataclass(frozen=True)
class WordSearchResult:
    status: str
    k: Optional[int]
    witness: Optional[Tuple[int, ...]]
    nodes_explored: int

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "k": self.k,
            "witness": list(self.witness) if self.witness is not None else None,
            "nodes_explored": self.nodes_explored,
        }


class _Budget:
    __slots__ = ("left",)

    def __init__(self, n):
        self.left = n


def _search_k_uniform(g: Graph, k: int, budget: _Budget) -> Optional[Tuple[int, ...]]:
    """Lexicographically least k-uniform word starting with 0 that represents g.

    Uniform representing words are closed under rotation, so fixing letter 0
    first loses nothing.  A pair is 'broken' once its restriction contains a
    repeat; broken adjacent pairs prune immediately, and unbroken
    non-adjacent pairs prune as soon as both letters are used up.
    """
    m = g.n
    total = k * m
    masks = g.adjacency_masks()
    word = [0]
    counts = [0] * m
    counts[0] = 1
    last_pos = [-1] * m
    last_pos[0] = 0
    # broken[x] is the bitmask of letters whose pair with x can no longer alternate
    broken = [0] * m

    def extend(pos: int) -> bool:
        if pos == total:
            for x in range(m):
                need = masks[x] | broken[x]
                if need | (1 << x) != (1 << m) - 1:
                    return False  # some non-adjacent pair still alternates
            return True
        for c in range(m):
            if counts[c] >= k:
                continue
            if budget.left <= 0:
                return False
            budget.left -= 1
            # pairs (c, d) whose restriction now repeats c: those break for good
            newly = 0
            ok = True
            for d in range(m):
                if d == c:
                    continue
                if counts[c] and last_pos[c] > last_pos[d]:
                    if not broken[c] >> d & 1:
                        if masks[c] >> d & 1:
                            ok = False
                            break
                        newly |= 1 << d
            if not ok:
                continue
            if newly:
                broken[c] |= newly
                bm = newly
                while bm:
                    low = bm & -bm
                    broken[low.bit_length() - 1] |= 1 << c
                    bm ^= low
            prev = last_pos[c]
            last_pos[c] = pos
            counts[c] += 1
            word.append(c)
            done = counts[c] == k
            feasible = True
            if done:
                # a finished letter must already have broken all non-neighbors
                for d in range(m):
                    if d != c and counts[d] == k and not masks[c] >> d & 1:
                        if not broken[c] >> d & 1:
                            feasible = False
                            break
            if feasible and extend(pos + 1):
                return True
            word.pop()
            counts[c] -= 1
            last_pos[c] = prev
            if newly:
                broken[c] &= ~newly
                bm = newly
                while bm:
                    low = bm & -bm
                    broken[low.bit_length() - 1] &= ~(1 << c)
                    bm ^= low
        return False

    if extend(1):
        return tuple(word)
    return None


def min_uniform_representation(
    g: Graph, k_max: int = 4, budget: int = DEFAULT_WORD_BUDGET
) -> WordSearchResult:
    """Smallest k <= k_max admitting a k-uniform representing word, with witness.

    Exhaustive per k (up to the rotation that pins the first letter to 0);
    returns status 'undecided' when the node budget runs out, 'not_found'
    when every k <= k_max is exhausted without a witness.
    """
    b = _Budget(budget)
    for k in range(1, k_max + 1):
        witness = _search_k_uniform(g, k, b)
        if witness is not None:
            ok, _ = represents(witness, g)
            assert ok, "searcher returned a non-representing word"
            return WordSearchResult(FOUND, k, witness, budget - b.left)
        if b.left <= 0:
            return WordSearchResult(UNDECIDED, None, None, budget - b.left)
    return WordSearchResult(NOT_FOUND, None, None, budget - b.left)


def read_word_file(path) -> List[Tuple[int, ...]]:
    """Words as whitespace-separated decimal letters, one word per line."""
    out = []
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            out.append(tuple(int(tok) for tok in line.split()))
    return out


def write_word_file(path, words) -> None:
    with open(path, "w") as fh:
        for w in words:
            fh.write(" ".join(str(c) for c in w) + "\n")
