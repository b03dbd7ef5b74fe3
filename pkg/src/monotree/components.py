"""Single-colour component structure of a coloured graph.

Covers three things: the per-colour partition of the vertex set into
connected components of each colour class (isolated vertices count as
singleton components in every colour), the closure of a coloured graph
under single-colour connectivity together with its inherited colouring,
and the independence-number trichotomy on that closure.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import COLOURS, Colour, ColouredGraph, SimpleGraph


@dataclass(frozen=True)
class ComponentLabelling:
    """Per-colour vertex partition into single-colour components.

    Component ids are canonical: the smallest vertex the component
    contains.  `comp_id[c][v]` is the id of v's c-component and
    `members[c][id]` its vertex bitset.
    """

    n: int
    comp_id: tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]
    members: tuple[dict[int, int], dict[int, int], dict[int, int]]

    def id_of(self, colour: Colour, v: int) -> int:
        return self.comp_id[colour][v]

    def mask_of(self, colour: Colour, cid: int) -> int:
        return self.members[colour][cid]

    def component_ids(self, colour: Colour) -> list[int]:
        return sorted(self.members[colour])

    def triple_of(self, v: int) -> tuple[int, int, int]:
        """(red id, green id, blue id) of vertex v."""
        return (self.comp_id[0][v], self.comp_id[1][v], self.comp_id[2][v])

    def component_count(self) -> int:
        return sum(len(self.members[c]) for c in range(3))


def _colour_components(n: int, rows: tuple[int, ...]) -> tuple[tuple[int, ...], dict[int, int]]:
    # Union-find with path halving over one colour's edge list.
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u in range(n):
        high = rows[u] >> (u + 1)
        base = u + 1
        while high:
            low = high & -high
            v = base + low.bit_length() - 1
            high ^= low
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[rv] = ru
    ids = [0] * n
    id_of_root: dict[int, int] = {}
    members: dict[int, int] = {}
    for v in range(n):
        root = find(v)
        cid = id_of_root.setdefault(root, v)  # ascending scan: first hit is smallest
        ids[v] = cid
        members[cid] = members.get(cid, 0) | (1 << v)
    return tuple(ids), members


def monochromatic_components(cg: ColouredGraph) -> ComponentLabelling:
    """Connected components of each single-colour subgraph of cg."""
    per_colour = [_colour_components(cg.n, cg.colour_adj[c]) for c in COLOURS]
    return ComponentLabelling(
        cg.n,
        tuple(ids for ids, _ in per_colour),  # type: ignore[arg-type]
        tuple(members for _, members in per_colour),  # type: ignore[arg-type]
    )


@dataclass(frozen=True)
class ShortcutGraph:
    """Closure of a coloured graph under single-colour connectivity.

    `base` has an edge uv iff u and v lie in one component of some colour
    of `source`; a direct edge keeps its source colour, a new edge takes
    the smallest colour whose component joins the pair.  With that rule
    the per-colour component partitions of `base` and `source` coincide,
    so `labelling` serves both.
    """

    base: ColouredGraph
    source: ColouredGraph
    labelling: ComponentLabelling


def shortcut_graph(cg: ColouredGraph) -> ShortcutGraph:
    """Build the single-colour-connectivity closure of cg."""
    lab = monochromatic_components(cg)
    n = cg.n
    same = [
        [lab.members[c][lab.comp_id[c][v]] & ~(1 << v) for v in range(n)]
        for c in COLOURS
    ]
    adj = cg.graph.adj
    red = tuple(
        cg.colour_adj[0][v] | (same[0][v] & ~adj[v]) for v in range(n)
    )
    green = tuple(
        cg.colour_adj[1][v] | (same[1][v] & ~adj[v] & ~same[0][v]) for v in range(n)
    )
    blue = tuple(
        cg.colour_adj[2][v]
        | (same[2][v] & ~adj[v] & ~same[0][v] & ~same[1][v])
        for v in range(n)
    )
    closure = SimpleGraph(n, tuple(red[v] | green[v] | blue[v] for v in range(n)))
    return ShortcutGraph(ColouredGraph(closure, (red, green, blue)), cg, lab)


@dataclass(frozen=True)
class AlphaClass:
    """Independence-number trichotomy of a closure graph.

    kind is "one" (complete graph), "two" (some non-adjacent pair but no
    independent triple) or "three_plus" with the lexicographically smallest
    independent triple as witness.
    """

    kind: str
    witness: tuple[int, int, int] | None = None


def alpha_class(f: ShortcutGraph) -> AlphaClass:
    """Exact trichotomy on the independence number of f.base."""
    g = f.base.graph
    n = g.n
    full = g.full_mask
    if all(g.adj[v] | (1 << v) == full for v in range(n)):
        return AlphaClass("one")
    for u in range(n - 2):
        non_u = ~g.adj[u] & full & ~(1 << u)
        cand = non_u >> (u + 1)
        base = u + 1
        while cand:
            low = cand & -cand
            v = base + low.bit_length() - 1
            cand ^= low
            above_v = full & ~((1 << (v + 1)) - 1)
            third = non_u & ~g.adj[v] & above_v
            if third:
                w = (third & -third).bit_length() - 1
                return AlphaClass("three_plus", (u, v, w))
    return AlphaClass("two")
