"""Ramsey p-chromatic numbers and the largest safely colorable p-set family.

Color every p-set of vertices; an edge is p-monochromatic when all of its
C(r,p) p-subsets share one color.  chi_r(H,p) is the fewest colors with
no p-monochromatic edge.  b(H,p) caps the palette at C(r,p) colors but
lets p-sets stay uncolored, and asks for the most colored p-sets such
that no fully colored edge is p-monochromatic; a maximum family yields,
for p in {1, r-1}, an orientation showing f(H,p,1) = C(n,p) - b(H,p).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from .hypercore import (
    BadParams,
    BadPSet,
    BudgetExceeded,
    Hypergraph,
    canonicalize,
)
from .extremal import TooLarge, chromatic_exact
from .fcalc import FReport, f_count
from .orient import orient_forbidden


@dataclass(frozen=True)
class PSetColoring:
    """Partial coloring of the p-sets of a vertex set with colors 0..colors-1."""

    p: int
    colors: int
    colored: dict

    def __post_init__(self):
        for pset, c in self.colored.items():
            if len(pset) != self.p or list(pset) != sorted(set(pset)):
                raise BadPSet(f"{pset} is not a sorted {self.p}-set")
            if not (0 <= c < self.colors):
                raise BadParams(f"color {c} outside 0..{self.colors - 1}")

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "colors": self.colors,
            "colored": [[list(a), c] for a, c in sorted(self.colored.items())],
        }

    @staticmethod
    def from_dict(d: dict) -> "PSetColoring":
        return PSetColoring(d["p"], d["colors"], {tuple(a): c for a, c in d["colored"]})


def check_mono(h: Hypergraph, coloring: PSetColoring) -> list[tuple[int, ...]]:
    """Edges whose p-subsets are all colored and all alike."""
    bad = []
    for edge in h.edges:
        cs = {coloring.colored.get(s) for s in combinations(edge, coloring.p)}
        if None not in cs and len(cs) == 1:
            bad.append(edge)
    return bad


def derived_pset_hypergraph(h: Hypergraph, p: int) -> Hypergraph:
    """The C(r,p)-uniform hypergraph on p-set ranks induced by the edges.

    A coloring of the p-sets avoids p-monochromatic edges exactly when it
    is a proper coloring of this hypergraph, so chi_r reduces to exact
    hypergraph coloring.
    """
    if not (1 <= p <= h.r - 1):
        raise BadPSet(f"need 1 <= p <= r-1, got p={p}")
    ranks = {a: i for i, a in enumerate(combinations(range(h.n), p))}
    edges = [
        tuple(sorted(ranks[s] for s in combinations(edge, p))) for edge in h.edges
    ]
    return canonicalize(edges, len(ranks), math.comb(h.r, p))


def chi_r(h: Hypergraph, p: int, budget: int = 10**7) -> int:
    """Fewest colors on all p-sets leaving no edge p-monochromatic."""
    if not (1 <= p <= h.r - 1):
        raise BadPSet(f"need 1 <= p <= r-1, got p={p}")
    if h.e == 0:
        return 1
    try:
        return chromatic_exact(derived_pset_hypergraph(h, p), budget)
    except TooLarge as exc:
        raise BudgetExceeded(
            f"chi_r search exceeded {budget} nodes", lower=exc.lower, upper=exc.upper
        ) from None


@dataclass(frozen=True)
class BValueResult:
    value: int
    coloring: PSetColoring


def b_value(h: Hypergraph, p: int, budget: int = 10**7) -> BValueResult:
    """Most p-sets colorable with C(r,p) colors, no fully colored edge
    p-monochromatic, with a witness coloring.

    Branch and bound over p-sets in decreasing edge-incidence order; each
    p-set takes a color (new colors in increasing order) or, as the last
    choice, stays uncolored.  A monochromatic completion is rejected at
    the moment the last p-subset of an edge takes the shared color.
    """
    if not (1 <= p <= h.r - 1):
        raise BadPSet(f"need 1 <= p <= r-1, got p={p}")
    palette = math.comb(h.r, p)
    psets = list(combinations(range(h.n), p))
    edge_subs = [tuple(combinations(edge, p)) for edge in h.edges]
    incidence: dict[tuple, list[int]] = {a: [] for a in psets}
    for ei, subs in enumerate(edge_subs):
        for s in subs:
            incidence[s].append(ei)
    order = sorted(psets, key=lambda a: (-len(incidence[a]), a))
    total = len(order)
    assign: dict[tuple, int] = {}
    best = [-1, {}]
    counter = [0]

    def rec(i, colored, max_used):
        counter[0] += 1
        if counter[0] > budget:
            exc = BudgetExceeded(
                f"b search exceeded {budget} nodes", best=best[0]
            )
            exc.coloring = PSetColoring(p, palette, dict(best[1]))
            raise exc
        if colored + (total - i) <= best[0]:
            return
        if i == total:
            best[0] = colored
            best[1] = dict(assign)
            return
        a = order[i]
        for c in range(min(palette - 1, max_used + 1) + 1):
            ok = True
            for ei in incidence[a]:
                if all(assign.get(s) == c for s in edge_subs[ei] if s != a):
                    ok = False
                    break
            if ok:
                assign[a] = c
                rec(i + 1, colored + 1, max(max_used, c))
                del assign[a]
        rec(i + 1, colored, max_used)

    rec(0, 0, -1)
    return BValueResult(best[0], PSetColoring(p, palette, best[1]))


def f_p1_exact(h: Hypergraph, p: int, budget: int = 10**7) -> FReport:
    """f(H,p,1) for p in {1, r-1}: C(n,p) - b(H,p), certified.

    The forbidden-coordinate orientation built from a maximum coloring
    zeroes each colored p-set at its color coordinate, and the identity
    forces every uncolored p-set to stay everywhere-positive, so the
    certificate attains the value exactly; this is re-verified.
    """
    if p not in (1, h.r - 1):
        raise BadPSet(f"exact route needs p in {{1, r-1}}, got {p}")
    res = b_value(h, p, budget)
    value = math.comb(h.n, p) - res.value
    d = orient_forbidden(h, res.coloring, p)
    achieved = f_count(d, p, 1)
    assert achieved == value, "forbidden-coordinate orientation must attain the value"
    return FReport(
        value=value,
        method="via-b",
        orientation=d,
        witness_coloring=dict(res.coloring.colored),
    )
