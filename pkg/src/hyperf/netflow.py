"""Integral max-flow and bipartite matching with witnesses.

Deterministic by construction: breadth-first augmentation scans arcs in
insertion order, so ties always resolve toward the lowest-numbered arc.
Max-flow reports the source side of a min cut; a failed perfect matching
reports a Hall violator (a left set Q with |N(Q)| < |Q|).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .hypercore import BadParams, HyperfError


class SizeMismatch(HyperfError):
    """Perfect matching requires equal side sizes."""


class FlowNetwork:
    """Directed network with integer capacities; parallel arcs allowed."""

    def __init__(self, num_nodes: int, source: int, sink: int):
        if not (0 <= source < num_nodes and 0 <= sink < num_nodes) or source == sink:
            raise BadParams(f"bad source/sink {source}/{sink} for {num_nodes} nodes")
        self.num_nodes = num_nodes
        self.source = source
        self.sink = sink
        self._to: list[int] = []
        self._cap: list[int] = []
        self._adj: list[list[int]] = [[] for _ in range(num_nodes)]

    def add_arc(self, u: int, v: int, cap: int) -> int:
        """Add u->v with the given capacity; returns the arc id."""
        if cap < 0:
            raise BadParams(f"negative capacity {cap}")
        for x in (u, v):
            if not (0 <= x < self.num_nodes):
                raise BadParams(f"node {x} out of range")
        arc = len(self._to)
        # forward arc at even id, residual reverse arc at arc ^ 1
        self._to.extend((v, u))
        self._cap.extend((cap, 0))
        self._adj[u].append(arc)
        self._adj[v].append(arc ^ 1)
        return arc

    def max_flow(self) -> int:
        """Run shortest-augmenting-path flow to completion; returns the value."""
        total = 0
        while True:
            parent_arc = self._bfs()
            if parent_arc is None:
                return total
            # walk sink -> source to find the bottleneck, then push
            bottleneck = None
            v = self.sink
            while v != self.source:
                arc = parent_arc[v]
                if bottleneck is None or self._cap[arc] < bottleneck:
                    bottleneck = self._cap[arc]
                v = self._to[arc ^ 1]
            v = self.sink
            while v != self.source:
                arc = parent_arc[v]
                self._cap[arc] -= bottleneck
                self._cap[arc ^ 1] += bottleneck
                v = self._to[arc ^ 1]
            total += bottleneck

    def _bfs(self):
        parent_arc = [-1] * self.num_nodes
        parent_arc[self.source] = -2
        queue = deque([self.source])
        while queue:
            u = queue.popleft()
            for arc in self._adj[u]:
                v = self._to[arc]
                if self._cap[arc] > 0 and parent_arc[v] == -1:
                    parent_arc[v] = arc
                    if v == self.sink:
                        return parent_arc
                    queue.append(v)
        return None

    def flow_on(self, arc: int) -> int:
        """Flow carried by a forward arc (its reverse residual capacity)."""
        if not (0 <= arc < len(self._to)) or arc % 2 == 1:
            raise BadParams(f"{arc} is not a forward arc id")
        return self._cap[arc ^ 1]

    def min_cut_source_side(self) -> set[int]:
        """Residual-reachable nodes from the source; call after max_flow."""
        seen = {self.source}
        queue = deque([self.source])
        while queue:
            u = queue.popleft()
            for arc in self._adj[u]:
                v = self._to[arc]
                if self._cap[arc] > 0 and v not in seen:
                    seen.add(v)
                    queue.append(v)
        return seen


@dataclass(frozen=True)
class BipartiteGraph:
    """Left/right vertex sets 0..size-1 with adjacency lists from the left."""

    left_size: int
    right_size: int
    adj: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "adj", tuple(tuple(row) for row in self.adj))
        if len(self.adj) != self.left_size:
            raise BadParams("one adjacency row per left vertex required")
        for row in self.adj:
            if len(set(row)) != len(row):
                raise BadParams(f"duplicate right vertex in row {row}")
            for w in row:
                if not (0 <= w < self.right_size):
                    raise BadParams(f"right vertex {w} out of range")


@dataclass(frozen=True)
class NoMatching:
    """Hall violator: left set Q whose joint neighborhood is smaller than Q."""

    violator: tuple[int, ...]
    neighborhood: tuple[int, ...]


def perfect_matching(bg: BipartiteGraph) -> list[int] | NoMatching:
    """Perfect matching as a list (left index -> right index), or a violator.

    Greedy seeding then augmenting paths, both scanning candidates in
    ascending order, so the result is the sequential lowest-index outcome.
    """
    if bg.left_size != bg.right_size:
        raise SizeMismatch(f"left {bg.left_size} != right {bg.right_size}")
    match_l = [-1] * bg.left_size
    match_r = [-1] * bg.right_size
    for u in range(bg.left_size):
        for w in bg.adj[u]:
            if match_r[w] == -1:
                match_l[u] = w
                match_r[w] = u
                break

    def augment(u, visited):
        for w in bg.adj[u]:
            if w not in visited:
                visited.add(w)
                if match_r[w] == -1 or augment(match_r[w], visited):
                    match_l[u] = w
                    match_r[w] = u
                    return True
        return False

    for u in range(bg.left_size):
        if match_l[u] == -1 and not augment(u, set()):
            # alternating reachability from u certifies the Hall violation
            q = {u}
            nbhd = set()
            frontier = [u]
            while frontier:
                nxt = []
                for x in frontier:
                    for w in bg.adj[x]:
                        if w not in nbhd:
                            nbhd.add(w)
                            y = match_r[w]
                            if y != -1 and y not in q:
                                q.add(y)
                                nxt.append(y)
                frontier = nxt
            return NoMatching(tuple(sorted(q)), tuple(sorted(nbhd)))
    return match_l
