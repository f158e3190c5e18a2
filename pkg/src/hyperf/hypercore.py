"""Core data model for r-uniform hypergraphs and their orientations.

Vertices are the integers 0..n-1.  An edge is a sorted tuple of r distinct
vertices; the edge list is deduplicated and lexicographically sorted, so a
hypergraph has exactly one stored representation.  An orientation assigns
to each edge an ordering of its r vertices; the vertex at index i of that
ordering occupies position i (0-based, positions 0..r-1).

For 1 <= p <= r-1, the p-subsets of the position set {0..r-1} are ranked
lexicographically (rank 0 is {0..p-1}); the degree vector of a p-set A of
vertices has one coordinate per position-subset, counting the edges in
which A occupies exactly that set of positions.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterable, Mapping, Sequence


class HyperfError(Exception):
    """Base class for all errors raised by this package."""


class BadParams(HyperfError):
    """Parameters outside the documented domain."""


class VertexOutOfRange(HyperfError):
    pass


class RepeatedVertexInEdge(HyperfError):
    pass


class DuplicateEdge(HyperfError):
    """Raised with the offending edge; duplicates are never dropped silently."""


class BadPSet(HyperfError):
    """A p-set argument is not a sorted tuple of distinct in-range vertices."""


class FormatError(HyperfError):
    """Malformed hypergraph/orientation text."""


class BudgetExceeded(HyperfError):
    """An enumeration or search outgrew its explicit budget.

    Carries whatever partial knowledge the search had: `best` (incumbent
    value), and `lower`/`upper` bracketing the true answer when known.
    """

    def __init__(self, message, best=None, lower=None, upper=None):
        super().__init__(message)
        self.best = best
        self.lower = lower
        self.upper = upper


@dataclass(frozen=True)
class Hypergraph:
    """An r-uniform hypergraph in canonical form."""

    n: int
    r: int
    edges: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(tuple(e) for e in self.edges))
        if self.n < 0 or self.r < 2:
            raise BadParams(f"need n >= 0 and r >= 2, got n={self.n} r={self.r}")
        seen = set()
        for e in self.edges:
            _check_edge(e, self.n, self.r)
            if e in seen:
                raise DuplicateEdge(f"duplicate edge {e}")
            seen.add(e)
        if list(self.edges) != sorted(self.edges):
            raise BadParams("edge list not in canonical (lexicographic) order")

    @property
    def e(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return sum(1 for edge in self.edges if v in edge)

    def degrees(self) -> list[int]:
        degs = [0] * self.n
        for edge in self.edges:
            for v in edge:
                degs[v] += 1
        return degs

    def edges_inside(self, vertices: Iterable[int]) -> list[int]:
        """Indices of edges entirely contained in the given vertex set."""
        vs = set(vertices)
        return [i for i, edge in enumerate(self.edges) if vs.issuperset(edge)]


def _check_edge(e: Sequence[int], n: int, r: int):
    if len(e) != r:
        raise BadParams(f"edge {tuple(e)} does not have {r} vertices")
    for v in e:
        if not isinstance(v, int) or not (0 <= v < n):
            raise VertexOutOfRange(f"vertex {v!r} not in 0..{n - 1}")
    if len(set(e)) != r:
        raise RepeatedVertexInEdge(f"repeated vertex in edge {tuple(e)}")
    if list(e) != sorted(e):
        raise BadParams(f"edge {tuple(e)} not sorted")


def canonicalize(raw_edges: Iterable[Sequence[int]], n: int, r: int) -> Hypergraph:
    """Build a Hypergraph from unordered edge tuples.

    Each tuple is sorted, the edge list is sorted lexicographically, and a
    duplicate edge (after sorting) raises DuplicateEdge naming the edge.
    """
    if n < 0 or r < 2:
        raise BadParams(f"need n >= 0 and r >= 2, got n={n} r={r}")
    edges = []
    for raw in raw_edges:
        if len(raw) != r:
            raise BadParams(f"edge {tuple(raw)} does not have {r} vertices")
        for v in raw:
            if not isinstance(v, int) or not (0 <= v < n):
                raise VertexOutOfRange(f"vertex {v!r} not in 0..{n - 1}")
        e = tuple(sorted(raw))
        if len(set(e)) != r:
            raise RepeatedVertexInEdge(f"repeated vertex in edge {tuple(raw)}")
        edges.append(e)
    edges.sort()
    for a, b in zip(edges, edges[1:]):
        if a == b:
            raise DuplicateEdge(f"duplicate edge {a}")
    return Hypergraph(n, r, tuple(edges))


class PositionIndex:
    """Ranking of the p-subsets of the r positions, lexicographic order.

    rank({0..p-1}) == 0; unrank is its inverse.  count == C(r,p).
    """

    def __init__(self, r: int, p: int):
        if not (1 <= p <= r - 1):
            raise BadParams(f"need 1 <= p <= r-1, got p={p} r={r}")
        self.r = r
        self.p = p
        self.sets = tuple(combinations(range(r), p))
        self._rank = {s: i for i, s in enumerate(self.sets)}

    @property
    def count(self) -> int:
        return len(self.sets)

    def rank(self, positions: Sequence[int]) -> int:
        key = tuple(positions)
        if key not in self._rank:
            raise BadParams(f"{key} is not a sorted {self.p}-subset of 0..{self.r - 1}")
        return self._rank[key]

    def unrank(self, i: int) -> tuple[int, ...]:
        if not (0 <= i < len(self.sets)):
            raise BadParams(f"position-set rank {i} out of range 0..{len(self.sets) - 1}")
        return self.sets[i]


@dataclass(frozen=True)
class Orientation:
    """An orientation: one ordering per edge, aligned with base.edges."""

    base: Hypergraph
    orders: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "orders", tuple(tuple(o) for o in self.orders))
        if len(self.orders) != self.base.e:
            raise BadParams("one order per edge required")
        for edge, order in zip(self.base.edges, self.orders):
            if tuple(sorted(order)) != edge:
                raise BadParams(f"order {order} is not a permutation of edge {edge}")


def ascending_orientation(h: Hypergraph) -> Orientation:
    """Every edge ordered by increasing vertex number."""
    return Orientation(h, h.edges)


def random_orientation(h: Hypergraph, seed: int) -> Orientation:
    rng = random.Random(seed)
    orders = []
    for edge in h.edges:
        order = list(edge)
        rng.shuffle(order)
        orders.append(tuple(order))
    return Orientation(h, tuple(orders))


@dataclass(frozen=True)
class DegreeVector:
    """The C(r,p) position-subset counts of one p-set of vertices."""

    pset: tuple[int, ...]
    coords: tuple[int, ...]


def _check_pset(pset: Sequence[int], n: int, r: int) -> tuple[int, ...]:
    t = tuple(pset)
    p = len(t)
    if not (1 <= p <= r - 1):
        raise BadPSet(f"p-set size must be in 1..{r - 1}, got {t}")
    if list(t) != sorted(set(t)):
        raise BadPSet(f"p-set {t} must be sorted and distinct")
    for v in t:
        if not (0 <= v < n):
            raise BadPSet(f"p-set vertex {v} not in 0..{n - 1}")
    return t


def degree_vector(d: Orientation, pset: Sequence[int]) -> DegreeVector:
    """Degree vector of one p-set under the orientation."""
    h = d.base
    a = _check_pset(pset, h.n, h.r)
    pidx = PositionIndex(h.r, len(a))
    coords = [0] * pidx.count
    aset = set(a)
    for edge, order in zip(h.edges, d.orders):
        if aset.issubset(edge):
            positions = tuple(sorted(order.index(v) for v in a))
            coords[pidx.rank(positions)] += 1
    return DegreeVector(a, tuple(coords))


def degree_vectors(d: Orientation, p: int) -> dict[tuple[int, ...], list[int]]:
    """Degree vectors of all C(n,p) p-sets, keyed by sorted tuple.

    One pass over the edges; p-sets contained in no edge get all-zero
    coordinates.
    """
    h = d.base
    if not (1 <= p <= h.r - 1):
        raise BadPSet(f"need 1 <= p <= r-1, got p={p}")
    pidx = PositionIndex(h.r, p)
    acc = {a: [0] * pidx.count for a in combinations(range(h.n), p)}
    for order in d.orders:
        pos = {v: i for i, v in enumerate(order)}
        for sub in combinations(sorted(order), p):
            positions = tuple(sorted(pos[v] for v in sub))
            acc[sub][pidx.rank(positions)] += 1
    return acc


def max_coordinate(d: Orientation, i: int) -> int:
    """Max over vertices of the number of edges placing the vertex at position i."""
    h = d.base
    if not (0 <= i < h.r):
        raise BadParams(f"position {i} not in 0..{h.r - 1}")
    cnt = [0] * h.n
    for order in d.orders:
        cnt[order[i]] += 1
    return max(cnt, default=0)


# ---------------------------------------------------------------- generators


def complete(n: int, r: int) -> Hypergraph:
    """All C(n,r) edges on n vertices."""
    if r < 2 or n < 0:
        raise BadParams(f"need r >= 2 and n >= 0, got n={n} r={r}")
    return Hypergraph(n, r, tuple(combinations(range(n), r)))


def complete_multipartite(sizes: Sequence[int]) -> Hypergraph:
    """Complete multipartite graph; classes are consecutive vertex ranges."""
    if not sizes or any(s <= 0 for s in sizes):
        raise BadParams(f"class sizes must be positive, got {list(sizes)}")
    n = sum(sizes)
    bounds = []
    start = 0
    for s in sizes:
        bounds.append(range(start, start + s))
        start += s
    edges = []
    for i in range(len(sizes)):
        for j in range(i + 1, len(sizes)):
            for u in bounds[i]:
                for w in bounds[j]:
                    edges.append((u, w))
    return canonicalize(edges, n, 2)


def mop_fan(n: int) -> Hypergraph:
    """Fan maximal outerplanar graph: cycle 0..n-1 plus all chords from 0."""
    if n < 3:
        raise BadParams(f"maximal outerplanar graphs need n >= 3, got {n}")
    edges = [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)]
    edges += [(0, i) for i in range(2, n - 1)]
    return canonicalize(edges, n, 2)


def mop_random(n: int, seed: int) -> Hypergraph:
    """Random maximal outerplanar graph: seeded triangulation of an n-cycle."""
    if n < 3:
        raise BadParams(f"maximal outerplanar graphs need n >= 3, got {n}")
    rng = random.Random(seed)
    edges = [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)]

    def tri(a, b):
        # triangulate the polygon arc a..b closed by the chord (a, b)
        if b - a < 2:
            return
        m = rng.randrange(a + 1, b)
        if m - a >= 2:
            edges.append((a, m))
        if b - m >= 2:
            edges.append((m, b))
        tri(a, m)
        tri(m, b)

    tri(0, n - 1)
    return canonicalize(edges, n, 2)


def join_k2(g: Hypergraph) -> Hypergraph:
    """Two copies of a graph with every cross pair added (the join with K2)."""
    if g.r != 2:
        raise BadParams("join_k2 is defined for graphs (r=2)")
    n = g.n
    edges = list(g.edges)
    edges += [(u + n, w + n) for u, w in g.edges]
    edges += [(u, w + n) for u in range(n) for w in range(n)]
    return canonicalize(edges, 2 * n, 2)


def complement(g: Hypergraph) -> Hypergraph:
    if g.r != 2:
        raise BadParams("complement is defined for graphs (r=2)")
    present = set(g.edges)
    edges = [e for e in combinations(range(g.n), 2) if e not in present]
    return canonicalize(edges, g.n, 2)


def random_hypergraph(n: int, r: int, m: int, seed: int) -> Hypergraph:
    """m distinct edges drawn uniformly from the C(n,r) possibilities, seeded."""
    if r < 2 or n < r:
        raise BadParams(f"need n >= r >= 2, got n={n} r={r}")
    total = math.comb(n, r)
    if not (0 <= m <= total):
        raise BadParams(f"need 0 <= m <= C({n},{r}) = {total}, got m={m}")
    rng = random.Random(seed)
    all_edges = list(combinations(range(n), r))
    picks = sorted(rng.sample(range(total), m))
    return Hypergraph(n, r, tuple(all_edges[i] for i in picks))


GENERATORS = {
    "complete": complete,
    "multipartite": complete_multipartite,
    "mop-fan": mop_fan,
    "mop-random": mop_random,
    "join-k2": join_k2,
    "complement": complement,
    "random": random_hypergraph,
}


def generate(family: str, **params) -> Hypergraph:
    """Dispatch to a generator by family name (see GENERATORS)."""
    if family not in GENERATORS:
        raise BadParams(f"unknown family {family!r}; choose from {sorted(GENERATORS)}")
    return GENERATORS[family](**params)


# ------------------------------------------------------------------ file I/O
#
# Line 1: "hypergraph n=<int> r=<int>" or "oriented n=<int> r=<int>".
# Then one line per edge: "e v1 .. vr" (unordered) or "o v1 .. vr" (the
# ordering, position 0 first).  '#' starts a comment, blank lines ignored.
# Writers emit canonical edge order; readers accept any order.


def to_text(obj: Hypergraph | Orientation) -> str:
    lines = []
    if isinstance(obj, Orientation):
        h = obj.base
        lines.append(f"oriented n={h.n} r={h.r}")
        for order in obj.orders:
            lines.append("o " + " ".join(str(v) for v in order))
    elif isinstance(obj, Hypergraph):
        lines.append(f"hypergraph n={obj.n} r={obj.r}")
        for edge in obj.edges:
            lines.append("e " + " ".join(str(v) for v in edge))
    else:
        raise BadParams(f"cannot serialize {type(obj).__name__}")
    return "\n".join(lines) + "\n"


def from_text(text: str) -> Hypergraph | Orientation:
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise FormatError("empty input")
    header = lines[0].split()
    if len(header) != 3 or header[0] not in ("hypergraph", "oriented"):
        raise FormatError(f"bad header line {lines[0]!r}")
    try:
        if not header[1].startswith("n=") or not header[2].startswith("r="):
            raise ValueError
        n = int(header[1][2:])
        r = int(header[2][2:])
    except ValueError:
        raise FormatError(f"bad header line {lines[0]!r}") from None
    kind = header[0]
    tag = "e" if kind == "hypergraph" else "o"
    rows = []
    for line in lines[1:]:
        parts = line.split()
        if parts[0] != tag:
            raise FormatError(f"expected {tag!r} lines in a {kind} file, got {line!r}")
        try:
            row = [int(x) for x in parts[1:]]
        except ValueError:
            raise FormatError(f"non-integer vertex in {line!r}") from None
        if len(row) != r:
            raise FormatError(f"row {line!r} does not have {r} vertices")
        rows.append(tuple(row))
    if kind == "hypergraph":
        return canonicalize(rows, n, r)
    keyed = sorted((tuple(sorted(row)), row) for row in rows)
    base = canonicalize([k for k, _ in keyed], n, r)
    return Orientation(base, tuple(row for _, row in keyed))


def read_path(path) -> Hypergraph | Orientation:
    with open(path, "r", encoding="utf-8") as fh:
        return from_text(fh.read())


def write_path(obj: Hypergraph | Orientation, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(to_text(obj))
