"""End-to-end cover pipeline.

Build the single-colour-connectivity closure of the input, classify its
independence number, and run the matching constructive strategy:

* complete closure: exact search for one or two covering components;
* independent triple: rainbow-pattern analysis of a common neighbourhood,
  then all triples of the five named candidate components;
* no independent triple: the link-graph route (a matching-sized bipartite
  cover when the matching is small, otherwise a three-way case analysis of
  how a 4-matching distributes over two pivot links).

Every strategy enumerates a small explicit family of candidate covers and
verifies candidates directly, so it stays sound on inputs where the
high-probability regularity behind the strategies fails; the exact
hypergraph cover search is always available as fallback and doubles as an
optimality oracle at small component counts.  Returned tree covers are
verified before they leave `solve_cover`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .components import (
    ComponentLabelling,
    ShortcutGraph,
    alpha_class,
    monochromatic_components,
    shortcut_graph,
)
from .graphs import COLOURS, Colour, ColouredGraph, iter_bits
from .hypergraph import (
    CompRef,
    ComponentHypergraph,
    build_component_hypergraph,
    konig_cover,
    link_union,
    max_matching_bipartite,
    tau_exact,
)

BRANCH_EGP = "egp"
BRANCH_ALPHA3 = "alpha-ge3"
BRANCH_KONIG = "konig"
BRANCH_CASE1 = "case1"
BRANCH_CASE2 = "case2"
BRANCH_CASE3 = "case3"
BRANCH_FALLBACK = "fallback"

BRANCHES = (
    BRANCH_EGP,
    BRANCH_ALPHA3,
    BRANCH_KONIG,
    BRANCH_CASE1,
    BRANCH_CASE2,
    BRANCH_CASE3,
    BRANCH_FALLBACK,
)


@dataclass(frozen=True)
class Tree:
    """A rooted tree, monochromatic in its host graph.

    `parent` maps every tree vertex to its parent; the root maps to None.
    """

    colour: Colour
    root: int
    parent: dict[int, int | None]

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted(self.parent))

    @property
    def edge_list(self) -> tuple[tuple[int, int], ...]:
        return tuple(
            sorted((p, v) for v, p in self.parent.items() if p is not None)
        )


@dataclass(frozen=True)
class TreeCover:
    trees: tuple[Tree, ...]

    @property
    def size(self) -> int:
        return len(self.trees)


@dataclass
class TraceReport:
    """Which proof branch fired and the evidence it used."""

    alpha: str = ""
    branch: str = ""
    component_count: int = 0
    cover_refs: tuple[CompRef, ...] = ()
    strategy_size: int | None = None
    exact_size: int | None = None
    notes: list[str] = field(default_factory=list)
    # independent-triple branch
    triple: tuple[int, int, int] | None = None
    x_size: int | None = None
    colour_pattern: tuple[str, str, str] | None = None
    # link-graph branch
    nu_link: int | None = None
    matching: tuple[tuple[int, int], ...] | None = None
    case: int | None = None
    j_witnesses: dict[str, int] | None = None
    winning_candidate: tuple[CompRef, ...] | None = None

    def to_json(self) -> dict:
        out: dict = {
            "alpha": self.alpha,
            "branch": self.branch,
            "component_count": self.component_count,
            "cover": [[Colour(c).name.lower(), i] for c, i in self.cover_refs],
            "notes": list(self.notes),
        }
        if self.strategy_size is not None:
            out["strategy_size"] = self.strategy_size
        if self.exact_size is not None:
            out["exact_size"] = self.exact_size
        if self.triple is not None:
            out["triple"] = list(self.triple)
        if self.x_size is not None:
            out["x_size"] = self.x_size
        if self.colour_pattern is not None:
            out["colour_pattern"] = list(self.colour_pattern)
        if self.nu_link is not None:
            out["nu_link"] = self.nu_link
        if self.matching is not None:
            out["matching"] = [list(e) for e in self.matching]
        if self.case is not None:
            out["case"] = self.case
        if self.j_witnesses is not None:
            out["j_witnesses"] = dict(self.j_witnesses)
        if self.winning_candidate is not None:
            out["winning_candidate"] = [
                [Colour(c).name.lower(), i] for c, i in self.winning_candidate
            ]
        return out


@dataclass(frozen=True)
class SolverConfig:
    # Run the exact cover search alongside the strategy whenever the
    # instance has at most this many components.
    exact_component_limit: int = 400


def _union_mask(lab: ComponentLabelling, refs: Iterable[CompRef]) -> int:
    mask = 0
    for c, cid in refs:
        mask |= lab.members[c][cid]
    return mask


def _dedupe(refs: Iterable[CompRef]) -> tuple[CompRef, ...]:
    return tuple(dict.fromkeys(refs))


def egp_partition_search(f: ShortcutGraph) -> tuple[CompRef, ...]:
    """Exact search for at most two covering components of a complete
    closure graph: all single components first, then all pairs, in colour
    then id order.

    A covering pair always exists for a complete 3-coloured graph, so
    exhausting the pairs raises: it means the input was not complete.
    """
    lab = f.labelling
    full = f.base.graph.full_mask
    if full == 0:
        return ()
    comps: list[tuple[CompRef, int]] = []
    for c in COLOURS:
        for cid in lab.component_ids(c):
            comps.append(((c, cid), lab.members[c][cid]))
    for ref, mask in comps:
        if mask == full:
            return (ref,)
    for (ref_a, mask_a), (ref_b, mask_b) in combinations(comps, 2):
        if mask_a | mask_b == full:
            return (ref_a, ref_b)
    raise RuntimeError(
        "no covering pair of components; input closure graph is not complete"
    )


def strategy_alpha_ge3(
    cg: ColouredGraph, f: ShortcutGraph, triple: tuple[int, int, int]
) -> tuple[tuple[CompRef, ...] | None, dict]:
    """Cover attempt from an independent triple of the closure graph.

    Groups the common neighbourhood of the triple by the colour pattern it
    sends to the three vertices, keeps the rainbow patterns (a repeated
    colour would be a single-colour path between two triple vertices),
    takes the largest group, and tests all triples of the five components
    it names: each triple vertex with its pattern colour plus the two
    swapped components of the second and third vertex.

    Returns (cover, details); cover is None when the neighbourhood
    degenerates, which signals the exact fallback.
    """
    v1, v2, v3 = triple
    details: dict = {"triple": triple, "notes": []}
    for a, b in ((v1, v2), (v1, v3), (v2, v3)):
        if f.base.graph.has_edge(a, b):
            raise ValueError(f"vertices {a} and {b} are adjacent in the closure graph")
    common = cg.graph.common_neighbourhood(triple)
    if common == 0:
        details["notes"].append("triple has no common neighbour")
        return None, details
    groups: dict[tuple[Colour, Colour, Colour], int] = {}
    for w in iter_bits(common):
        pat = (cg.colour_of(w, v1), cg.colour_of(w, v2), cg.colour_of(w, v3))
        if len(set(pat)) == 3:
            groups[pat] = groups.get(pat, 0) | (1 << w)
    if not groups:
        details["notes"].append("no rainbow colour pattern in the common neighbourhood")
        return None, details
    pattern = min(groups, key=lambda p: (-groups[p].bit_count(), p))
    x_mask = groups[pattern]
    c1, c2, c3 = pattern
    details["x_size"] = x_mask.bit_count()
    details["colour_pattern"] = tuple(c.name.lower() for c in pattern)
    lab = f.labelling
    five = _dedupe(
        [
            (int(c1), lab.id_of(c1, v1)),
            (int(c2), lab.id_of(c2, v2)),
            (int(c3), lab.id_of(c3, v3)),
            (int(c3), lab.id_of(c3, v2)),
            (int(c2), lab.id_of(c2, v3)),
        ]
    )
    full = cg.graph.full_mask
    size = min(3, len(five))
    for combo in combinations(five, size):
        if _union_mask(lab, combo) == full:
            winner = tuple(sorted(combo))
            details["winning_candidate"] = winner
            return winner, details
    details["notes"].append("no covering triple among the five candidate components")
    return None, details


def _covering_candidate(
    lab: ComponentLabelling,
    full: int,
    candidates: Sequence[tuple[CompRef, ...]],
) -> tuple[CompRef, ...] | None:
    for cand in candidates:
        refs = _dedupe(cand)
        if _union_mask(lab, refs) == full:
            return tuple(sorted(refs))
    return None


def _case2_candidates(
    lab: ComponentLabelling,
    r1: int,
    r2: int,
    fourth: tuple[int, int],
) -> list[tuple[CompRef, ...]]:
    # Covers tried for the 3+1 split: the two pivot components plus any
    # third pivot component, then {R1, B4, G4}, {R1, R2, B4}, {R1, R2, G4}.
    g4, b4 = fourth
    cands: list[tuple[CompRef, ...]] = [
        ((0, r1), (0, r2), (0, r)) for r in sorted(lab.members[0])
    ]
    cands.append(((0, r1), (2, b4), (1, g4)))
    cands.append(((0, r1), (0, r2), (2, b4)))
    cands.append(((0, r1), (0, r2), (1, g4)))
    return cands


def _case1_candidates(
    r1: int, r2: int, edges4: Sequence[tuple[int, int]]
) -> list[tuple[CompRef, ...]]:
    cands: list[tuple[CompRef, ...]] = []
    for _, b in edges4:
        cands.append(((0, r1), (0, r2), (2, b)))
    for g, _ in edges4:
        cands.append(((0, r1), (0, r2), (1, g)))
    return cands


def strategy_alpha2(
    cg: ColouredGraph, f: ShortcutGraph, h: ComponentHypergraph
) -> tuple[tuple[CompRef, ...] | None, dict]:
    """Cover attempt through the union of red-component link graphs.

    With matching number at most 3 the matching-sized bipartite cover
    lifts directly to at most three covering components.  Otherwise the
    first four matching edges distribute over at most two red components
    (three disjoint representatives would force an independent triple in
    the closure graph), splitting into the 2+2, 3+1 and 4+0 cases; each
    case tests its explicit candidate family.  The 4+0 case first tries to
    re-route to 3+1 through a hyperedge of another red component.

    Returns (cover, details); None signals the exact fallback.
    """
    lab = f.labelling
    full = cg.graph.full_mask
    details: dict = {"notes": []}
    link = link_union(h, Colour.RED)
    m = max_matching_bipartite(link)
    details["nu_link"] = m.size
    details["matching"] = m.edges
    if m.size <= 3:
        cover = konig_cover(link, m)
        refs = tuple(
            sorted(
                (1 if side == 0 else 2, cid) for side, cid in cover.cover
            )
        )
        # Every vertex's hyperedge projects to a link edge, so a link cover
        # always covers the whole vertex set.
        if _union_mask(lab, refs) != full:
            raise RuntimeError("link cover failed to cover the vertex set")
        details["branch"] = BRANCH_KONIG
        details["winning_candidate"] = refs
        return refs, details

    edges4 = list(m.edges[:4])
    origin = link.origin or {}
    origins = [set(origin.get(e, ())) for e in edges4]
    coverage: dict[int, int] = {}
    for os in origins:
        for r in os:
            coverage[r] = coverage.get(r, 0) + 1
    r1 = min(coverage, key=lambda r: (-coverage[r], r))
    assigned = [e for e, os in zip(edges4, origins) if r1 in os]
    rest = [e for e, os in zip(edges4, origins) if r1 not in os]
    if rest:
        shared = set.intersection(
            *[os for e, os in zip(edges4, origins) if r1 not in os]
        )
        if not shared:
            details["notes"].append(
                "matching spans more than two red-component links"
            )
            return None, details
        r2 = min(shared)
    else:
        r2 = None

    if len(rest) == 2:
        details["case"] = 1
        ordered = assigned + rest  # positions 1,2 in the r1 link; 3,4 in r2
        details["j_witnesses"] = {
            "J1": h.witness[(r1, ordered[0][0], ordered[0][1])],
            "J2": h.witness[(r1, ordered[1][0], ordered[1][1])],
            "J3": h.witness[(r2, ordered[2][0], ordered[2][1])],
            "J4": h.witness[(r2, ordered[3][0], ordered[3][1])],
        }
        winner = _covering_candidate(lab, full, _case1_candidates(r1, r2, ordered))
        if winner is None:
            details["notes"].append("2+2 case candidates exhausted")
            return None, details
        details["branch"] = BRANCH_CASE1
        details["winning_candidate"] = winner
        return winner, details

    if len(rest) == 1:
        details["case"] = 2
        three, fourth = assigned, rest[0]
        details["j_witnesses"] = {
            f"J{i + 1}": h.witness[(r1, e[0], e[1])] for i, e in enumerate(three)
        }
        details["j_witnesses"]["J4"] = h.witness[(r2, fourth[0], fourth[1])]
        winner = _covering_candidate(
            lab, full, _case2_candidates(lab, r1, r2, fourth)
        )
        if winner is None:
            details["notes"].append("3+1 case candidates exhausted")
            return None, details
        details["branch"] = BRANCH_CASE2
        details["winning_candidate"] = winner
        return winner, details

    if len(rest) > 2:
        details["notes"].append("matching spans more than two red-component links")
        return None, details

    # 4+0: all four matching edges in the r1 link.
    details["case"] = 3
    details["j_witnesses"] = {
        f"J{i + 1}": h.witness[(r1, e[0], e[1])] for i, e in enumerate(edges4)
    }
    others = [e for e in h.edges if e[0] != r1]
    if not others:
        # Every hyperedge passes through r1, so r1 alone covers everything.
        winner = ((0, r1),)
        details["notes"].append("all hyperedges share the pivot red component")
        details["branch"] = BRANCH_CASE3
        details["winning_candidate"] = winner
        return winner, details
    greens = [g for g, _ in edges4]
    blues = [b for _, b in edges4]
    for r2x, gx, bx in others:
        if gx in greens:
            k = greens.index(gx)
            if bx in [b for i, b in enumerate(blues) if i != k]:
                continue  # this hyperedge only re-meets matched components
        details["j_witnesses"]["J4'"] = h.witness[(r2x, gx, bx)]
        winner = _covering_candidate(
            lab, full, _case2_candidates(lab, r1, r2x, (gx, bx))
        )
        if winner is not None:
            details["notes"].append("4+0 case re-routed through a 3+1 analysis")
            details["branch"] = BRANCH_CASE3
            details["winning_candidate"] = winner
            return winner, details
    # No re-route: the first hyperedge outside the r1 link meets a matched
    # green component and a matched blue component of a different edge.
    r2x, gx, bx = others[0]
    details["j_witnesses"]["J5"] = h.witness[(r2x, gx, bx)]
    cands: list[tuple[CompRef, ...]] = []
    green_ids = sorted(lab.members[1])
    blue_ids = sorted(lab.members[2])
    for c in green_ids:
        cands.append(((0, r1), (2, bx), (1, c)))
    for c in blue_ids:
        cands.append(((0, r1), (2, bx), (2, c)))
    for c in green_ids:
        cands.append(((0, r1), (1, gx), (1, c)))
    for c in blue_ids:
        cands.append(((0, r1), (1, gx), (2, c)))
    cands.append(((0, r1), (2, bx), (1, gx)))
    winner = _covering_candidate(lab, full, cands)
    if winner is None:
        details["notes"].append("4+0 case candidates exhausted")
        return None, details
    details["branch"] = BRANCH_CASE3
    details["winning_candidate"] = winner
    return winner, details


def components_to_trees(
    cg: ColouredGraph,
    comps: Iterable[CompRef],
    labelling: ComponentLabelling | None = None,
) -> TreeCover:
    """Breadth-first spanning tree of each component, rooted at its id
    (the smallest vertex).  Raises ValueError if the union of the
    components misses a vertex."""
    lab = labelling if labelling is not None else monochromatic_components(cg)
    refs = tuple(sorted(_dedupe(comps)))
    union = _union_mask(lab, refs)
    if union != cg.graph.full_mask:
        missing = next(iter_bits(cg.graph.full_mask & ~union))
        raise ValueError(f"components do not cover vertex {missing}")
    trees = []
    for c, cid in refs:
        mask = lab.members[c][cid]
        rows = cg.colour_adj[c]
        root = cid
        parent: dict[int, int | None] = {root: None}
        seen = 1 << root
        frontier = [root]
        while frontier:
            nxt: list[int] = []
            for u in frontier:
                novel = rows[u] & mask & ~seen
                seen |= novel
                for v in iter_bits(novel):
                    parent[v] = u
                    nxt.append(v)
            frontier = nxt
        if seen != mask:
            raise RuntimeError(
                f"component ({Colour(c).name}, {cid}) is not connected in its colour"
            )
        trees.append(Tree(Colour(c), root, parent))
    return TreeCover(tuple(trees))


def verify_cover(cg: ColouredGraph, tc: TreeCover) -> list[str]:
    """All violations of the tree-cover contract; empty list means valid.

    Checks, per tree: vertices in range, a unique root, every parent edge
    present in the host graph with the tree's colour, and no cycles in the
    parent relation.  Globally: the tree vertex sets cover the graph.
    """
    issues: list[str] = []
    covered = 0
    for t_index, tree in enumerate(tc.trees):
        label = f"tree {t_index} ({tree.colour.name.lower()}, root {tree.root})"
        verts = set(tree.parent)
        for v in sorted(verts):
            if not 0 <= v < cg.n:
                issues.append(f"{label}: vertex {v} out of range")
        if tree.root not in verts:
            issues.append(f"{label}: root missing from vertex set")
            continue
        if tree.parent[tree.root] is not None:
            issues.append(f"{label}: root has a parent")
        for v in sorted(verts):
            p = tree.parent[v]
            if p is None:
                if v != tree.root:
                    issues.append(f"{label}: second root {v}")
                continue
            if p not in verts:
                issues.append(f"{label}: parent {p} of {v} outside tree")
                continue
            if not (0 <= v < cg.n and 0 <= p < cg.n):
                continue
            if not cg.graph.has_edge(p, v):
                issues.append(f"{label}: missing edge ({p}, {v})")
            elif cg.colour_of(p, v) != tree.colour:
                issues.append(
                    f"{label}: edge ({p}, {v}) is {cg.colour_of(p, v).name.lower()}"
                )
        state: dict[int, int] = {}  # 0 walking, 1 reaches root
        for v in sorted(verts):
            path = []
            u: int | None = v
            while u is not None and u in verts and u not in state:
                state[u] = 0
                path.append(u)
                u = tree.parent[u]
            if u is not None and u in verts and state.get(u) == 0:
                issues.append(f"{label}: cycle through vertex {u}")
                break
            for w in path:
                state[w] = 1
        for v in verts:
            if 0 <= v < cg.n:
                covered |= 1 << v
    uncovered = cg.graph.full_mask & ~covered
    for v in iter_bits(uncovered):
        issues.append(f"uncovered vertex {v}")
    return issues


def solve_cover(
    cg: ColouredGraph, config: SolverConfig = SolverConfig()
) -> tuple[TreeCover, TraceReport]:
    """Cover the vertices of cg with monochromatic trees, at most three on
    every instance the constructive strategies handle.

    Returns the verified tree cover and a trace recording the branch that
    fired, the evidence it used, and the exact optimum whenever the exact
    search ran (always, below `config.exact_component_limit` components).
    The cover size is the smaller of the strategy result and the exact
    result.
    """
    trace = TraceReport()
    f = shortcut_graph(cg)
    lab = f.labelling
    trace.component_count = lab.component_count()
    ac = alpha_class(f)
    trace.alpha = ac.kind

    strategy_cover: tuple[CompRef, ...] | None = None
    branch = BRANCH_FALLBACK
    h: ComponentHypergraph | None = None
    if ac.kind == "one":
        strategy_cover = egp_partition_search(f)
        branch = BRANCH_EGP
    elif ac.kind == "three_plus":
        assert ac.witness is not None
        strategy_cover, details = strategy_alpha_ge3(cg, f, ac.witness)
        _merge_details(trace, details)
        branch = BRANCH_ALPHA3
    else:
        h = build_component_hypergraph(lab)
        strategy_cover, details = strategy_alpha2(cg, f, h)
        _merge_details(trace, details)
        branch = details.get("branch", BRANCH_FALLBACK)
    if strategy_cover is not None:
        trace.strategy_size = len(strategy_cover)

    exact_cover: tuple[CompRef, ...] | None = None
    if strategy_cover is None or trace.component_count <= config.exact_component_limit:
        if h is None:
            h = build_component_hypergraph(lab)
        cert = tau_exact(h)
        assert cert is not None  # unbounded search always returns a cover
        exact_cover = cert.cover
        trace.exact_size = cert.size

    if strategy_cover is None:
        assert exact_cover is not None
        final = exact_cover
        branch = BRANCH_FALLBACK
        trace.notes.append("strategy degenerated; exact cover used")
    elif exact_cover is not None and len(exact_cover) < len(strategy_cover):
        final = exact_cover
        trace.notes.append("exact cover smaller than strategy candidate")
    else:
        final = strategy_cover
    trace.branch = branch
    trace.cover_refs = tuple(sorted(final))

    trees = components_to_trees(cg, final, lab)
    violations = verify_cover(cg, trees)
    if violations:
        raise AssertionError(f"solver produced an invalid cover: {violations}")
    return trees, trace


def _merge_details(trace: TraceReport, details: dict) -> None:
    for note in details.get("notes", []):
        trace.notes.append(note)
    for key in (
        "triple",
        "x_size",
        "colour_pattern",
        "nu_link",
        "matching",
        "case",
        "j_witnesses",
        "winning_candidate",
    ):
        if key in details:
            setattr(trace, key, details[key])
