"""The orientation invariant f(H,p,k) and its closed forms and bounds.

Under an orientation, a p-set is everywhere-full at level k when all of
its C(r,p) coordinates are >= k; f(D,p,k) counts such p-sets and f(H,p,k)
is the minimum over orientations.  For p = 1 the minimum equals
n - M(H,k-1) and is certified by a partition-derived orientation; for
complete hypergraphs a closed form applies; everything else falls back to
budgeted brute force over all (r!)^e orientations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations

from .hypercore import (
    BadParams,
    BudgetExceeded,
    Hypergraph,
    HyperfError,
    Orientation,
    PositionIndex,
    ascending_orientation,
    canonicalize,
    complete,
    degree_vectors,
)
from .extremal import (
    TooLarge,
    alpha,
    beta,
    chromatic_exact,
    hit_triangles,
    m_value,
)
from .orient import orient_from_partition

DEFAULT_SCAN_BUDGET = 10**8
DEFAULT_NODE_BUDGET = 10**7


class ThresholdUnknown(HyperfError):
    """No computed or recorded value of the threshold f(r,p,k) is available."""


# ------------------------------------------------------------------- reports


@dataclass(frozen=True)
class FReport:
    """Result of an f computation with its certificate."""

    value: int
    method: str
    orientation: Orientation | None = None
    witness_parts: tuple[tuple[int, ...], ...] | None = None
    witness_remainder: tuple[int, ...] | None = None
    witness_coloring: dict | None = None
    budget_used: int | None = None

    def to_dict(self) -> dict:
        d = {"value": self.value, "method": self.method, "budget_used": self.budget_used}
        if self.orientation is not None:
            d["orientation"] = orientation_to_dict(self.orientation)
        if self.witness_parts is not None:
            d["witness_parts"] = [list(p) for p in self.witness_parts]
        if self.witness_remainder is not None:
            d["witness_remainder"] = list(self.witness_remainder)
        if self.witness_coloring is not None:
            d["witness_coloring"] = [[list(a), c] for a, c in sorted(self.witness_coloring.items())]
        return d

    @staticmethod
    def from_dict(d: dict) -> "FReport":
        ori = d.get("orientation")
        coloring = d.get("witness_coloring")
        return FReport(
            value=d["value"],
            method=d["method"],
            orientation=orientation_from_dict(ori) if ori else None,
            witness_parts=tuple(tuple(p) for p in d["witness_parts"])
            if d.get("witness_parts") is not None
            else None,
            witness_remainder=tuple(d["witness_remainder"])
            if d.get("witness_remainder") is not None
            else None,
            witness_coloring={tuple(a): c for a, c in coloring} if coloring else None,
            budget_used=d.get("budget_used"),
        )


def orientation_to_dict(d: Orientation) -> dict:
    return {"n": d.base.n, "r": d.base.r, "orders": [list(o) for o in d.orders]}


def orientation_from_dict(d: dict) -> Orientation:
    rows = [tuple(o) for o in d["orders"]]
    keyed = sorted((tuple(sorted(row)), row) for row in rows)
    base = canonicalize([key for key, _ in keyed], d["n"], d["r"])
    return Orientation(base, tuple(row for _, row in keyed))


# ------------------------------------------------------------------ counting


def f_count(d: Orientation, p: int, k: int) -> int:
    """Number of p-sets whose coordinates are all >= k under d."""
    if k < 0:
        raise BadParams(f"k must be >= 0, got {k}")
    return sum(1 for coords in degree_vectors(d, p).values() if min(coords) >= k)


def f_bruteforce(h: Hypergraph, p: int, k: int, budget: int = DEFAULT_SCAN_BUDGET) -> FReport:
    """Exact f(H,p,k) by enumerating all orientations in mixed-radix order.

    Edge orderings are scanned lexicographically (all-ascending first) and
    the lexicographically first minimizing orientation is reported.  A
    prefix's everywhere-full count only grows as further edges are
    oriented, so subtrees that cannot beat the incumbent are skipped
    without affecting the minimum or the chosen minimizer.
    """
    if k < 0:
        raise BadParams(f"k must be >= 0, got {k}")
    pidx = PositionIndex(h.r, p)
    total = math.factorial(h.r) ** h.e
    if total > budget:
        raise BudgetExceeded(
            f"{total} orientations exceed the budget of {budget}", upper=None
        )
    if k == 0:
        return FReport(
            value=math.comb(h.n, p),
            method="brute",
            orientation=ascending_orientation(h),
            budget_used=1,
        )
    npos = pidx.count
    psets = list(combinations(range(h.n), p))
    pid = {a: i for i, a in enumerate(psets)}
    edge_orders = []
    edge_updates = []
    for edge in h.edges:
        orders = sorted(permutations(edge))
        ups = []
        for order in orders:
            pos = {v: t for t, v in enumerate(order)}
            ups.append(
                tuple(
                    pid[sub] * npos + pidx.rank(tuple(sorted(pos[v] for v in sub)))
                    for sub in combinations(edge, p)
                )
            )
        edge_orders.append(orders)
        edge_updates.append(ups)

    coords = [0] * (len(psets) * npos)
    deficit = [npos] * len(psets)
    state = {"qualified": 0, "best": math.inf, "pick": None, "leaves": 0}
    choice = [0] * h.e

    def rec(ei):
        if state["qualified"] >= state["best"]:
            return
        if ei == h.e:
            state["leaves"] += 1
            state["best"] = state["qualified"]
            state["pick"] = tuple(choice)
            return
        for j, ups in enumerate(edge_updates[ei]):
            choice[ei] = j
            for idx in ups:
                coords[idx] += 1
                if coords[idx] == k:
                    pi = idx // npos
                    deficit[pi] -= 1
                    if deficit[pi] == 0:
                        state["qualified"] += 1
            rec(ei + 1)
            for idx in ups:
                if coords[idx] == k:
                    pi = idx // npos
                    if deficit[pi] == 0:
                        state["qualified"] -= 1
                    deficit[pi] += 1
                coords[idx] -= 1

    rec(0)
    pick = state["pick"]
    assert pick is not None
    orders = tuple(edge_orders[ei][j] for ei, j in enumerate(pick))
    return FReport(
        value=int(state["best"]),
        method="brute",
        orientation=Orientation(h, orders),
        budget_used=state["leaves"],
    )


def f_via_m(h: Hypergraph, k: int, budget: int = DEFAULT_NODE_BUDGET) -> FReport:
    """f(H,1,k) = n - M(H,k-1), certified by a partition orientation.

    The optimal parts leave each of their vertices deficient at one
    coordinate, so the constructed orientation attains the value exactly;
    this is re-verified before returning.
    """
    if k < 1:
        raise BadParams(f"k must be >= 1, got {k}")
    res = m_value(h, k - 1, budget)
    value = h.n - res.value
    d = orient_from_partition(h, k, res.parts, res.remainder)
    achieved = f_count(d, 1, k)
    assert achieved == value, "partition orientation must attain n - M(H,k-1)"
    return FReport(
        value=value,
        method="via-m",
        orientation=d,
        witness_parts=res.parts,
        witness_remainder=res.remainder,
    )


# --------------------------------------------------------------- closed forms


def complete_part_size(r: int, k: int) -> int:
    """Largest t with C(t-1, r-1) <= (k-1)r; parts of this size stay sparse."""
    if r < 2 or k < 1:
        raise BadParams(f"need r >= 2 and k >= 1, got r={r} k={k}")
    cap = (k - 1) * r
    t = 1
    while math.comb(t, r - 1) <= cap:
        t += 1
    return t


def closed_form_complete(n: int, r: int, k: int) -> int:
    """f for the complete r-uniform hypergraph on n vertices: max(n - rt, 0)."""
    if n < 0:
        raise BadParams(f"n must be >= 0, got {n}")
    return max(n - r * complete_part_size(r, k), 0)


@dataclass(frozen=True)
class MultipartiteResult:
    applicable: bool
    value: int | None
    failed: tuple[str, ...]


def closed_form_multipartite(sizes, k: int) -> MultipartiteResult:
    """f for complete multipartite graphs: sum of the classes beyond the two
    largest, minus 2k-2, valid when the listed size conditions hold."""
    if k < 1:
        raise BadParams(f"k must be >= 1, got {k}")
    if not sizes or any(s <= 0 for s in sizes):
        raise BadParams(f"class sizes must be positive, got {list(sizes)}")
    ns = sorted(sizes, reverse=True)
    t = len(ns)
    failed = []
    if t < 3:
        failed.append(f"need at least 3 classes, got {t}")
    else:
        need = k * k - k + 1
        if ns[0] < need:
            failed.append(f"largest class {ns[0]} below k^2-k+1 = {need}")
        if ns[1] < need:
            failed.append(f"second class {ns[1]} below k^2-k+1 = {need}")
        if not (ns[2] >= 2 * k - 2 or (t >= 4 and ns[2] >= k - 1 and ns[3] >= k - 1)):
            failed.append(
                f"need third class >= 2k-2 = {2 * k - 2}, or third and fourth >= k-1 = {k - 1}"
            )
    if failed:
        return MultipartiteResult(False, None, tuple(failed))
    return MultipartiteResult(True, sum(ns[2:]) - 2 * k + 2, ())


# -------------------------------------------------------------------- bounds


@dataclass(frozen=True)
class Bound:
    name: str
    side: str  # "lower" or "upper"
    value: int | Fraction | None
    applicable: bool
    inputs: dict = field(default_factory=dict)
    note: str = ""

    def to_dict(self) -> dict:
        val = self.value
        if isinstance(val, Fraction):
            val = f"{val.numerator}/{val.denominator}"
        return {
            "name": self.name,
            "side": self.side,
            "value": val,
            "applicable": self.applicable,
            "inputs": dict(self.inputs),
            "note": self.note,
        }


def bounds(h: Hypergraph, k: int, budget: int = DEFAULT_NODE_BUDGET) -> list[Bound]:
    """Every evaluable lower/upper bound on f(H,1,k), with its inputs.

    Bounds whose hypotheses fail, or whose ingredient searches blow the
    budget, are listed as inapplicable with the reason.
    """
    if k < 1:
        raise BadParams(f"k must be >= 1, got {k}")
    n, r = h.n, h.r
    out = []

    def guarded(fn):
        try:
            return fn(), None
        except TooLarge:
            return None, "search budget exceeded"

    a, why = guarded(lambda: alpha(h, budget))
    out.append(
        Bound("independence", "lower", None if a is None else n - a * r * (r * k - r + 1),
              a is not None, {"alpha": a}, why or "")
    )
    bu, why = guarded(lambda: beta(h, r * k - 1, budget))
    out.append(
        Bound("degenerate-upper", "upper", None if bu is None else n - bu,
              bu is not None, {"beta": bu, "d": r * k - 1}, why or "")
    )
    bl, why = guarded(lambda: beta(h, r * (k - 1), budget))
    out.append(
        Bound("degenerate-lower", "lower", None if bl is None else n - r * bl,
              bl is not None, {"beta": bl, "d": r * (k - 1)}, why or "")
    )
    chi, chi_why = guarded(lambda: chromatic_exact(h, budget))
    out.append(
        Bound("chromatic", "lower", None if chi is None else chi - r * (r * (k - 1) + 1),
              chi is not None, {"chi": chi}, chi_why or "")
    )
    if r == 2 and n > 0:
        avg = Fraction(2 * h.e, n)
        if avg >= 4 * k - 2:
            val = (avg - (2 * k - 1)) / (avg + 1) * n
            out.append(Bound("average-degree", "upper", val, True,
                             {"avg_degree": f"{avg.numerator}/{avg.denominator}"}))
        else:
            out.append(Bound("average-degree", "upper", None, False,
                             {"avg_degree": f"{avg.numerator}/{avg.denominator}"},
                             f"needs average degree >= 4k-2 = {4 * k - 2}"))
        if k == 1:
            out.append(Bound("independence-upper", "upper",
                             None if a is None else n - a, a is not None,
                             {"alpha": a}, "" if a is not None else "search budget exceeded"))
            if chi is None:
                out.append(Bound("chromatic-ratio", "upper", None, False,
                                 {}, chi_why or ""))
            elif chi >= 2:
                out.append(Bound("chromatic-ratio", "upper", (chi - 2) * n // chi,
                                 True, {"chi": chi}))
            else:
                out.append(Bound("chromatic-ratio", "upper", None, False,
                                 {"chi": chi}, "needs at least one edge"))
            ht, why = guarded(lambda: hit_triangles(h, budget))
            out.append(Bound("triangle-hitting", "lower", ht, ht is not None,
                             {"hitting_number": ht}, why or ""))
        if n >= 1:
            degs = h.degrees()
            delta = min(degs)
            bestv = None
            bestt = None
            for t in range(1, n + 1):
                if delta * t >= (t - 1) * n:
                    val = (t - 4 * k + 2) * (n // t)
                    if bestv is None or val > bestv:
                        bestv, bestt = val, t
            out.append(Bound("clique-factor", "lower", bestv, bestv is not None,
                             {"min_degree": delta, "t": bestt}))
    return out


@dataclass(frozen=True)
class EdgeBound:
    value: int
    capped: bool
    exact_ratio: bool

    def to_dict(self) -> dict:
        return {"value": self.value, "capped": self.capped, "exact_ratio": self.exact_ratio}


def edge_bound(n: int, r: int, k: int) -> EdgeBound:
    """Largest edge count compatible with f(H,1,k) = 0 on n vertices.

    C(n,r) - r*C(n/r,r) + (k-1)n, with n/r floored (flagged) when r does
    not divide n, and capped at C(n,r) (flagged) when the formula exceeds
    the trivial maximum.
    """
    if n < 0 or r < 2 or k < 1:
        raise BadParams(f"need n >= 0, r >= 2, k >= 1, got n={n} r={r} k={k}")
    total = math.comb(n, r)
    base = total - r * math.comb(n // r, r) + (k - 1) * n
    return EdgeBound(min(base, total), base > total, n % r == 0)


# ---------------------------------------------------------------- thresholds

# Reference threshold values recorded from the literature, never computed
# here; kind "recorded" is exact, "recorded-upper" only an upper bound.
KNOWN_THRESHOLDS = {
    (3, 2, 1): (17, "recorded"),
    (4, 3, 1): (15202, "recorded-upper"),
}


def get_known_threshold(r: int, p: int, k: int):
    """(value, kind) from the recorded table, or None."""
    return KNOWN_THRESHOLDS.get((r, p, k))


@dataclass(frozen=True)
class ThresholdResult:
    r: int
    p: int
    k: int
    found: int | None
    scanned: tuple[tuple[int, int], ...]  # (n, f(n,r,p,k)) pairs
    skipped: tuple[int, ...]
    method: str

    def to_dict(self) -> dict:
        return {
            "r": self.r, "p": self.p, "k": self.k, "found": self.found,
            "scanned": [list(x) for x in self.scanned],
            "skipped": list(self.skipped), "method": self.method,
        }


def f_threshold(r: int, p: int, k: int, n_max: int, budget: int = DEFAULT_SCAN_BUDGET) -> ThresholdResult:
    """Smallest n <= n_max with f(n,r,p,k) > 0, by the cheapest exact route.

    p = 1 uses the closed form; p = r-1 with k = 1 goes through the p-set
    family number b; anything else brute-forces the complete hypergraph.
    Budget-blown n values are skipped and reported, which voids any
    "not found up to n_max" reading.
    """
    if not (1 <= p <= r - 1) or k < 1 or n_max < 1:
        raise BadParams(f"bad threshold query r={r} p={p} k={k} n_max={n_max}")
    scanned = []
    skipped = []
    if p == 1:
        method = "closed-form"
    elif k == 1 and p == r - 1:
        method = "via-b"
    else:
        method = "brute"
    for n in range(r, n_max + 1):
        try:
            if method == "closed-form":
                val = closed_form_complete(n, r, k)
            elif method == "via-b":
                from .ramsey import b_value

                val = math.comb(n, p) - b_value(complete(n, r), p, budget).value
            else:
                val = f_bruteforce(complete(n, r), p, k, budget).value
        except BudgetExceeded:
            skipped.append(n)
            continue
        scanned.append((n, val))
        if val > 0:
            return ThresholdResult(r, p, k, n, tuple(scanned), tuple(skipped), method)
    return ThresholdResult(r, p, k, None, tuple(scanned), tuple(skipped), method)


def tset_threshold_q(r: int, p: int, k: int) -> int:
    """Smallest q with (k-1)C(q,p) < C(q,r): guarantees a large all-deficient
    family cannot color every p-set of a q-set away from a full coordinate."""
    if not (1 <= p <= r - 1) or k < 1:
        raise BadParams(f"need 1 <= p <= r-1 and k >= 1, got r={r} p={p} k={k}")
    q = r
    while not ((k - 1) * math.comb(q, p) < math.comb(q, r)):
        q += 1
    return q


def find_tset(d: Orientation, p: int, k: int, t: int, budget: int = DEFAULT_NODE_BUDGET):
    """Lexicographically first t-set whose p-subsets are all everywhere-full
    at level k, or None when no such t-set exists."""
    h = d.base
    if t < 0:
        raise BadParams(f"t must be >= 0, got {t}")
    if t > h.n:
        return None
    good = {a for a, coords in degree_vectors(d, p).items() if min(coords) >= k}
    if t < p:
        return tuple(range(t))
    if p == 1:
        verts = sorted(v for (v,) in good)
        return tuple(verts[:t]) if len(verts) >= t else None
    counter = [0]

    def rec(cur, start):
        counter[0] += 1
        if counter[0] > budget:
            raise BudgetExceeded(f"t-set search exceeded {budget} nodes")
        if len(cur) == t:
            return tuple(cur)
        if len(cur) + (h.n - start) < t:
            return None
        for v in range(start, h.n):
            if all(tuple(sorted(sub + (v,))) in good for sub in combinations(cur, p - 1)):
                cur.append(v)
                res = rec(cur, v + 1)
                if res is not None:
                    return res
                cur.pop()
        return None

    return rec([], 0)


# -------------------------------------------------------------------- packing


@dataclass(frozen=True)
class PackingResult:
    m: int
    blocks: tuple[tuple[int, ...], ...]
    count: int

    def to_dict(self) -> dict:
        return {"m": self.m, "blocks": [list(b) for b in self.blocks], "count": self.count}


def greedy_packing(n: int, m: int, p: int) -> list[tuple[int, ...]]:
    """Greedy lexicographic m-set packing: accept a block when none of its
    p-subsets appears in an earlier accepted block."""
    if not (1 <= p <= m):
        raise BadParams(f"need 1 <= p <= m, got p={p} m={m}")
    if n < 0:
        raise BadParams(f"n must be >= 0, got {n}")
    used = set()
    blocks = []
    for block in combinations(range(n), m):
        subs = list(combinations(block, p))
        if all(s not in used for s in subs):
            blocks.append(block)
            used.update(subs)
    return blocks


def packing_bound(n: int, r: int, p: int, k: int, m: int | None = None) -> PackingResult:
    """Packing lower bound on f(n,r,p,k): each block of a greedy packing by
    m-sets, m = f(r,p,k), must contain an everywhere-full p-set, and blocks
    share none.  m is resolved from the closed form (p=1) or the recorded
    exact table unless given."""
    if m is None:
        if p == 1:
            m = r * complete_part_size(r, k) + 1
        else:
            known = KNOWN_THRESHOLDS.get((r, p, k))
            if known is None or known[1] != "recorded":
                raise ThresholdUnknown(
                    f"f({r},{p},{k}) is neither computable here nor recorded exactly"
                )
            m = known[0]
    blocks = greedy_packing(n, m, p)
    return PackingResult(m, tuple(blocks), len(blocks))
