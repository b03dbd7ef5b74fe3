"""Independent oracles and shared generators for the test suite.

Everything here deliberately avoids the library's own machinery wherever
it serves as a cross-check: components come from a plain BFS over edge
lists, cover numbers from bitmask dynamic programming or subset
enumeration, independence from nested loops over adjacency sets.
"""

from __future__ import annotations

from itertools import combinations

from hypothesis import strategies as st

from monotree import COLOURS, Colour, ColouredGraph

BIG = 1 << 30


def bfs_colour_components(cg: ColouredGraph) -> dict[Colour, list[set[int]]]:
    """Per-colour components via breadth-first search over adjacency sets."""
    adj: dict[Colour, dict[int, set[int]]] = {
        c: {v: set() for v in range(cg.n)} for c in COLOURS
    }
    for u, v, c in cg.edges():
        adj[c][u].add(v)
        adj[c][v].add(u)
    out: dict[Colour, list[set[int]]] = {}
    for c in COLOURS:
        seen: set[int] = set()
        comps: list[set[int]] = []
        for start in range(cg.n):
            if start in seen:
                continue
            comp = {start}
            frontier = [start]
            while frontier:
                nxt = []
                for u in frontier:
                    for w in adj[c][u]:
                        if w not in comp:
                            comp.add(w)
                            nxt.append(w)
                frontier = nxt
            seen |= comp
            comps.append(comp)
        out[c] = comps
    return out


def min_component_cover_size(cg: ColouredGraph) -> int:
    """Exact minimum number of single-colour components covering all
    vertices, by dynamic programming over covered-vertex bitmasks.
    Exponential in n; use only for n up to ~12."""
    n = cg.n
    if n == 0:
        return 0
    comps = bfs_colour_components(cg)
    comp_masks_of: list[list[int]] = [[] for _ in range(n)]
    for c in COLOURS:
        for comp in comps[c]:
            mask = 0
            for v in comp:
                mask |= 1 << v
            for v in comp:
                comp_masks_of[v].append(mask)
    full = (1 << n) - 1
    dp = [BIG] * (full + 1)
    dp[0] = 0
    for mask in range(full + 1):
        if dp[mask] >= BIG:
            continue
        if mask == full:
            break
        v = ((~mask) & full & -((~mask) & full)).bit_length() - 1
        for cm in comp_masks_of[v]:
            nxt = mask | cm
            if dp[mask] + 1 < dp[nxt]:
                dp[nxt] = dp[mask] + 1
    return dp[full]


def adjacency_sets(adj_rows) -> list[set[int]]:
    out = []
    for row in adj_rows:
        s = set()
        v = 0
        while row:
            if row & 1:
                s.add(v)
            row >>= 1
            v += 1
        out.append(s)
    return out


def independence_trichotomy(n: int, adj: list[set[int]]) -> str:
    """"one", "two" or "three_plus" by plain loops over adjacency sets."""
    complete = all(len(adj[v]) == n - 1 for v in range(n))
    if complete:
        return "one"
    for u in range(n):
        for v in range(u + 1, n):
            if v in adj[u]:
                continue
            for w in range(v + 1, n):
                if w not in adj[u] and w not in adj[v]:
                    return "three_plus"
    return "two"


def naive_tau(h) -> int:
    """Minimum hypergraph cover by subset enumeration over all vertices."""
    refs = sorted({r for e in h.edges for r in h.refs_of(e)})
    edge_refs = [set(h.refs_of(e)) for e in h.edges]
    if not edge_refs:
        return 0
    for k in range(len(refs) + 1):
        for subset in combinations(refs, k):
            chosen = set(subset)
            if all(er & chosen for er in edge_refs):
                return k
    raise AssertionError("unreachable: the full vertex set is a cover")


def naive_nu(h) -> int:
    """Maximum matching by enumerating hyperedge subsets, largest first."""
    edge_refs = [set(h.refs_of(e)) for e in h.edges]
    m = len(edge_refs)
    for k in range(m, 0, -1):
        for subset in combinations(range(m), k):
            refs: set = set()
            ok = True
            for i in subset:
                if refs & edge_refs[i]:
                    ok = False
                    break
                refs |= edge_refs[i]
            if ok:
                return k
    return 0


@st.composite
def coloured_graphs(draw, min_n: int = 0, max_n: int = 12):
    """Random coloured graphs: each pair is absent or one of three colours."""
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    codes = draw(
        st.lists(st.integers(0, 3), min_size=len(pairs), max_size=len(pairs))
    )
    items = [
        (u, v, Colour(code - 1))
        for (u, v), code in zip(pairs, codes)
        if code > 0
    ]
    return ColouredGraph.from_edge_colours(n, items)
