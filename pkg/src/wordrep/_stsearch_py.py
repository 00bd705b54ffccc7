"""Pure-Python kernel for the semi-transitive orientation search.

Vertices are inserted one at a time into a growing topological order; every
edge runs from the earlier to the later endpoint, so the enumeration covers
exactly the acyclic orientations.  Placing v can only create shortcuts whose
sink is v, which keeps the incremental check local: a shortcut with
shortcutting edge (u, v) exists iff some non-adjacent pair (x, y) satisfies
u => x => y => v under reachability, and in a DAG those path segments always
concatenate into a single directed path on at least four vertices.

Two prunes are applied, both exactness-preserving:
  * a prefix whose placed subgraph already contains a shortcut is cut
    (shortcuts persist under extension);
  * a prefix that cannot be the lexicographically least topological order of
    any completion is cut (if some unplaced vertex u has all its neighbors
    placed, u is a source of every completion, so the next pick must be <= u).

The Cython kernel in _stsearch.pyx mirrors this traversal decision for
decision; results and node counts must match bit for bit.
"""

FOUND = 0
EXHAUSTED = 1
BUDGET = 2


def search_orders(adj, budget, first_mask):
    """Run the DFS.  Returns (status, insertion order or None, nodes used).

    adj: per-vertex neighbor bitmasks; first_mask: allowed first vertices.
    A node is one attempted placement; exceeding `budget` aborts with BUDGET.
    """
    n = len(adj)
    full = (1 << n) - 1
    anc = [0] * n  # ancestors incl. self, valid while placed
    desc = [0] * n  # descendants incl. self, valid while placed
    order = []
    placed = 0
    nodes = 0
    cap = [n - 1] * (n + 1)
    cand = [0] * (n + 1)

    def entry_cap():
        unplaced = full & ~placed
        m = unplaced
        while m:
            low = m & -m
            u = low.bit_length() - 1
            if adj[u] & unplaced == 0:
                return u  # least vertex forced to be a source of any completion
            m ^= low
        return n - 1

    depth = 0
    cap[0] = entry_cap()
    cand[0] = 0
    while True:
        v = -1
        c = cand[depth]
        limit = cap[depth]
        while c <= limit:
            if not placed >> c & 1 and (depth > 0 or first_mask >> c & 1):
                v = c
                break
            c += 1
        if v < 0:
            if depth == 0:
                return EXHAUSTED, None, nodes
            depth -= 1
            w = order.pop()
            m = anc[w]
            clear = ~(1 << w)
            while m:
                low = m & -m
                desc[low.bit_length() - 1] &= clear
                m ^= low
            placed &= clear
            cand[depth] = w + 1
            continue

        if nodes >= budget:
            return BUDGET, None, nodes
        nodes += 1
        bit = 1 << v
        anc_v = bit
        m = adj[v] & placed
        while m:
            low = m & -m
            anc_v |= anc[low.bit_length() - 1]
            m ^= low

        bad = False
        m = adj[v] & placed
        while m and not bad:
            low = m & -m
            u = low.bit_length() - 1
            m ^= low
            du = desc[u]
            ym = anc_v
            while ym:
                ylow = ym & -ym
                y = ylow.bit_length() - 1
                ym ^= ylow
                ay = anc_v if y == v else anc[y]
                if ay & du & ~adj[y] & ~ylow:
                    bad = True
                    break
        if bad:
            cand[depth] = v + 1
            continue

        anc[v] = anc_v
        m = anc_v
        while m:
            low = m & -m
            desc[low.bit_length() - 1] |= bit
            m ^= low
        placed |= bit
        order.append(v)
        cand[depth] = v
        depth += 1
        if depth == n:
            return FOUND, list(order), nodes
        cap[depth] = entry_cap()
        cand[depth] = 0
