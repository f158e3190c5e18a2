"""Constructing orientations with bounded or forbidden coordinates.

The workhorse is a flow kernel: every edge must ship its supply to the
vertices it contains, and each vertex has an absorption cap.  Saturation
is equivalent to the existence of an orientation whose position-0 degrees
respect the caps; a failed run yields a vertex set F whose induced edges
outweigh the joint capacity of F, which is exactly the obstruction.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterable, Mapping, Sequence

from .hypercore import (
    BadParams,
    BadPSet,
    Hypergraph,
    HyperfError,
    Orientation,
    PositionIndex,
)
from .netflow import BipartiteGraph, FlowNetwork, NoMatching, perfect_matching


class BudgetDomainMismatch(HyperfError):
    """A per-vertex budget must cover every vertex exactly once."""


class PartsNotDisjoint(HyperfError):
    pass


class PartNotSparse(HyperfError):
    """A part is too dense for the requested within-part degree bound."""


class MatchingImpossible(HyperfError):
    """Internal invariant violation: the per-edge position matching failed."""


class StuckEdge(HyperfError):
    """No ordering of the named edge avoids all forbidden placements."""

    def __init__(self, edge):
        super().__init__(f"no admissible ordering for edge {edge}")
        self.edge = edge


@dataclass(frozen=True)
class Infeasible:
    """Witness that no orientation fits: the edges inside `witness` outnumber
    the total first-position capacity of `witness`."""

    witness: tuple[int, ...]
    edges_inside: int
    capacity: int


def saturating_assignment(
    h: Hypergraph,
    edge_ids: Sequence[int],
    vertex_caps: Mapping[int, int],
    supply: int = 1,
):
    """Ship `supply` units from each listed edge into its vertices.

    Vertex v absorbs at most vertex_caps[v]; listed edges must live inside
    the cap domain.  Returns (flows, None) on saturation, where flows maps
    edge id -> {vertex: units}, else (None, witness) with witness a vertex
    set F satisfying supply * e(F) > sum of caps over F.
    """
    verts = sorted(vertex_caps)
    for v, cap in vertex_caps.items():
        if cap < 0:
            raise BadParams(f"negative cap {cap} for vertex {v}")
    vpos = {v: i for i, v in enumerate(verts)}
    ne = len(edge_ids)
    source = 0
    sink = 1 + ne + len(verts)
    net = FlowNetwork(sink + 1, source, sink)
    big = supply * ne + 1
    edge_arcs = []
    for idx, ei in enumerate(edge_ids):
        net.add_arc(source, 1 + idx, supply)
        arcs = []
        for v in h.edges[ei]:
            if v not in vpos:
                raise BadParams(f"edge {h.edges[ei]} leaves the cap domain")
            arcs.append((v, net.add_arc(1 + idx, 1 + ne + vpos[v], big)))
        edge_arcs.append(arcs)
    for v in verts:
        net.add_arc(1 + ne + vpos[v], sink, vertex_caps[v])
    value = net.max_flow()
    if value == supply * ne:
        flows = {}
        for idx, ei in enumerate(edge_ids):
            flows[ei] = {v: net.flow_on(arc) for v, arc in edge_arcs[idx] if net.flow_on(arc)}
        return flows, None
    side = net.min_cut_source_side()
    witness = tuple(v for v in verts if 1 + ne + vpos[v] in side)
    return None, witness


def orient_budget(h: Hypergraph, budget: Mapping[int, int]) -> Orientation | Infeasible:
    """Orientation with at most budget[v] edges putting v at position 0.

    Feasible exactly when every vertex set F spans at most sum(budget over F)
    edges; otherwise the returned Infeasible carries such an F.
    """
    if set(budget) != set(range(h.n)):
        raise BudgetDomainMismatch(
            f"budget domain must be 0..{h.n - 1}, got {sorted(budget)}"
        )
    flows, witness = saturating_assignment(h, range(h.e), dict(budget))
    if flows is None:
        inside = len(h.edges_inside(witness))
        cap = sum(budget[v] for v in witness)
        assert inside > cap, "min-cut witness must violate the capacity condition"
        return Infeasible(witness, inside, cap)
    orders = []
    for ei, edge in enumerate(h.edges):
        (first,) = flows[ei]
        orders.append((first,) + tuple(v for v in edge if v != first))
    return Orientation(h, tuple(orders))


def orient_max_outdeg(h: Hypergraph, k: int) -> Orientation | Infeasible:
    """Orientation with every position-0 degree at most k, if one exists."""
    if k < 0:
        raise BadParams(f"k must be >= 0, got {k}")
    return orient_budget(h, {v: k for v in range(h.n)})


def orient_from_partition(
    h: Hypergraph,
    k: int,
    parts: Sequence[Iterable[int]],
    remainder: Iterable[int] | None = None,
) -> Orientation:
    """Orientation leaving every vertex of part i deficient at coordinate i.

    Needs each part sparse enough to orient internally with position-0
    degrees <= k-1 (equivalently Mad of the induced part <= r(k-1)).  Edges
    inside part i get that internal orientation rotated so the bounded
    position is i; edges inside the remainder are ascending; every other
    edge gets a position assignment in which no vertex of part i stands at
    position i, found by a perfect matching.  The result has
    deg_i(v) <= k-1 for all v in part i.
    """
    if k < 1:
        raise BadParams(f"k must be >= 1, got {k}")
    if len(parts) > h.r:
        raise BadParams(f"at most r={h.r} parts allowed, got {len(parts)}")
    psets = [sorted(set(part)) for part in parts]
    psets += [[] for _ in range(h.r - len(psets))]
    seen: set[int] = set()
    for part in psets:
        for v in part:
            if not (0 <= v < h.n):
                raise BadParams(f"part vertex {v} out of range")
            if v in seen:
                raise PartsNotDisjoint(f"vertex {v} is in two parts")
            seen.add(v)
    rest = sorted(set(range(h.n)) - seen)
    if remainder is not None and sorted(set(remainder)) != rest:
        raise BadParams("remainder must be exactly the vertices outside the parts")
    part_of = {v: i for i, part in enumerate(psets) for v in part}
    rest_set = set(rest)

    orders: list[tuple[int, ...] | None] = [None] * h.e
    for i, part in enumerate(psets):
        internal = h.edges_inside(part)
        flows, witness = saturating_assignment(h, internal, {v: k - 1 for v in part})
        if flows is None:
            raise PartNotSparse(
                f"part {i} cannot bound coordinate {i} by {k - 1}; "
                f"dense subset {witness}"
            )
        for ei in internal:
            (first,) = flows[ei]
            base = (first,) + tuple(v for v in h.edges[ei] if v != first)
            rotated = [0] * h.r
            for j, v in enumerate(base):
                rotated[(j + i) % h.r] = v
            orders[ei] = tuple(rotated)
    for ei, edge in enumerate(h.edges):
        if orders[ei] is not None:
            continue
        if rest_set.issuperset(edge):
            orders[ei] = edge
            continue
        # crossing edge: position j may not take a vertex of part j
        adj = tuple(
            tuple(t for t, v in enumerate(edge) if part_of.get(v) != j)
            for j in range(h.r)
        )
        match = perfect_matching(BipartiteGraph(h.r, h.r, adj))
        if isinstance(match, NoMatching):
            raise MatchingImpossible(f"edge {edge}: positions {match.violator} blocked")
        orders[ei] = tuple(edge[match[j]] for j in range(h.r))

    result = Orientation(h, tuple(orders))
    for i, part in enumerate(psets):
        for v in part:
            load = sum(1 for order in result.orders if order[i] == v)
            assert load <= k - 1, "partition orientation must bound its coordinate"
    return result


def orient_forbidden(h: Hypergraph, coloring, p: int) -> Orientation:
    """Orientation avoiding, for every colored p-set, its color coordinate.

    A p-set colored c must never occupy the rank-c position subset.  Only
    p = 1 and p = r-1 guarantee a valid ordering of every edge; each edge
    takes the first of its orderings (ascending-lexicographic scan) with no
    forbidden placement, and StuckEdge names any edge with none.
    """
    if p not in (1, h.r - 1):
        raise BadPSet(f"forbidden-coordinate orientations need p in {{1, r-1}}, got {p}")
    colored: Mapping = getattr(coloring, "colored", coloring)
    pidx = PositionIndex(h.r, p)
    for pset, c in colored.items():
        if len(pset) != p:
            raise BadPSet(f"{pset} is not a {p}-set")
        if not (0 <= c < pidx.count):
            raise BadParams(f"color {c} of {pset} outside 0..{pidx.count - 1}")
    orders = []
    for edge in h.edges:
        chosen = None
        for cand in permutations(edge):
            pos = {v: t for t, v in enumerate(cand)}
            ok = True
            for sub in combinations(edge, p):
                c = colored.get(sub)
                if c is not None and pidx.rank(tuple(sorted(pos[v] for v in sub))) == c:
                    ok = False
                    break
            if ok:
                chosen = cand
                break
        if chosen is None:
            raise StuckEdge(edge)
        orders.append(chosen)
    return Orientation(h, tuple(orders))


def deficiency_coloring(d: Orientation, p: int, k: int) -> dict[tuple[int, ...], int]:
    """Color each p-set by its first coordinate with count <= k-1.

    Colors are coordinate indices 0..C(r,p)-1; a p-set whose coordinates
    are all >= k gets the sentinel C(r,p).  The sentinel count is exactly
    the number of p-sets this orientation leaves everywhere-full.
    """
    from .hypercore import degree_vectors

    if k < 0:
        raise BadParams(f"k must be >= 0, got {k}")
    vecs = degree_vectors(d, p)
    out = {}
    for pset, coords in vecs.items():
        color = len(coords)
        for i, c in enumerate(coords):
            if c <= k - 1:
                color = i
                break
        out[pset] = color
    return out
