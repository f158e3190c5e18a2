"""Verification suites cross-checking the exact solvers against each other.

Every suite pits two independent routes to the same quantity (or a proved
inequality between quantities) against each other on small seeded instances
and records each comparison with exact integer arithmetic.  A suite passes
iff every check passes.  Suites are deterministic given a seed; ``SUITES``
maps the public names to the suite functions and ``verify_suite`` dispatches
by name.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field
from math import comb

from .hypercore import (
    Hypergraph,
    HyperfError,
    canonicalize,
    complement,
    complete,
    complete_multipartite,
    degree_vectors,
    join_k2,
    mop_fan,
    mop_random,
    random_hypergraph,
    random_orientation,
)
from .orient import Infeasible, orient_max_outdeg
from .extremal import alpha, alpha2, hit_triangles, m_value, mad_bruteforce
from .fcalc import (
    closed_form_complete,
    closed_form_multipartite,
    f_bruteforce,
    f_count,
    f_via_m,
)
from .ramsey import b_value, chi_r, f_p1_exact


class UnknownSuite(HyperfError):
    """Raised when a verification suite name is not registered."""


@dataclass
class CheckResult:
    """One exact comparison inside a suite: what was compared, on what, and
    whether the two sides agreed."""

    instance: str
    relation: str
    values: dict
    ok: bool

    def to_dict(self) -> dict:
        return {
            "instance": self.instance,
            "relation": self.relation,
            "values": dict(self.values),
            "ok": self.ok,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "CheckResult":
        return cls(
            instance=data["instance"],
            relation=data["relation"],
            values=dict(data["values"]),
            ok=bool(data["ok"]),
        )


@dataclass
class VerifySuiteReport:
    """Outcome of one suite run: every check, the seed, and the wall time."""

    suite: str
    seed: int
    checks: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> int:
        return sum(1 for c in self.checks if c.ok)

    @property
    def failed(self) -> int:
        return sum(1 for c in self.checks if not c.ok)

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "seed": self.seed,
            "passed": self.passed,
            "failed": self.failed,
            "seconds": self.seconds,
            "checks": [c.to_dict() for c in self.checks],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "VerifySuiteReport":
        return cls(
            suite=data["suite"],
            seed=data["seed"],
            checks=[CheckResult.from_dict(c) for c in data["checks"]],
            seconds=data["seconds"],
        )


def _finish(name, seed, checks, t0) -> VerifySuiteReport:
    return VerifySuiteReport(
        suite=name,
        seed=seed,
        checks=checks,
        seconds=round(time.perf_counter() - t0, 3),
    )


def _budget_kw(budget):
    return {} if budget is None else {"budget": budget}


def random_corpus(count, seed, ranks=(2, 3, 4), n_max=10, e_max=12):
    """Deterministic list of small random hypergraphs used by the suites."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        r = rng.choice(ranks)
        n = rng.randint(r, n_max)
        m = rng.randint(0, min(e_max, comb(n, r)))
        out.append(random_hypergraph(n, r, m, seed=rng.randrange(1 << 30)))
    return out


def _first_position_degrees(d):
    vec = [0] * d.base.n
    for order in d.orders:
        vec[order[0]] += 1
    return vec


def suite_hakimi(seed=1, budget=None):
    """Orientability with first-position degree <= k at every vertex is
    equivalent to Mad(H) <= r*k; the feasible orientations really attain
    the bound and the flow route agrees with subset enumeration."""
    t0 = time.perf_counter()
    checks = []
    for idx, h in enumerate(random_corpus(200, seed)):
        mad = mad_bruteforce(h)
        bad = []
        for k in range(4):
            result = orient_max_outdeg(h, k)
            feasible = not isinstance(result, Infeasible)
            if feasible != (mad <= h.r * k):
                bad.append(f"k={k} feasibility mismatch")
            if feasible and max(_first_position_degrees(result)) > k:
                bad.append(f"k={k} bound not attained")
        checks.append(
            CheckResult(
                instance=f"random #{idx} n={h.n} r={h.r} e={h.e}",
                relation="orientable(first-position degree <= k) <=> Mad <= r*k",
                values={"mad": str(mad), "mismatches": bad},
                ok=not bad,
            )
        )
    return _finish("hakimi", seed, checks, t0)


def suite_via_m(seed=1, budget=None):
    """f(H,1,k) computed by full orientation scan equals n - M(H,k-1), and
    the partition-built certificate orientation attains the value."""
    t0 = time.perf_counter()
    kw = _budget_kw(budget)
    checks = []
    for idx, h in enumerate(random_corpus(100, seed, ranks=(2, 3), n_max=6, e_max=6)):
        for k in (1, 2):
            brute = f_bruteforce(h, 1, k, **kw)
            via = f_via_m(h, k, **kw)
            attained = f_count(via.orientation, 1, k)
            checks.append(
                CheckResult(
                    instance=f"random #{idx} n={h.n} r={h.r} e={h.e} k={k}",
                    relation="f(H,1,k) == n - M(H,k-1) == value of certificate",
                    values={"brute": brute.value, "via_m": via.value,
                            "certificate": attained},
                    ok=brute.value == via.value == attained,
                )
            )
    return _finish("via-m", seed, checks, t0)


def suite_closed_form(seed=1, budget=None):
    """Complete hypergraphs: the partition route matches the closed form
    max(n - r*t, 0), and the full orientation scan confirms it at the
    smallest sizes."""
    t0 = time.perf_counter()
    kw = _budget_kw(budget)
    checks = []
    for r in (2, 3):
        for n in range(r, 13):
            for k in (1, 2):
                via = f_via_m(complete(n, r), k, **kw).value
                closed = closed_form_complete(n, r, k)
                checks.append(
                    CheckResult(
                        instance=f"complete n={n} r={r} k={k}",
                        relation="f via M == max(n - r*t, 0)",
                        values={"via_m": via, "closed": closed},
                        ok=via == closed,
                    )
                )
    for n in range(2, 7):
        brute = f_bruteforce(complete(n, 2), 1, 1, **kw).value
        checks.append(
            CheckResult(
                instance=f"complete n={n} r=2 k=1",
                relation="orientation scan == n - 2",
                values={"brute": brute, "expected": n - 2},
                ok=brute == n - 2,
            )
        )
    for n in (4, 5):
        brute = f_bruteforce(complete(n, 3), 1, 1, **kw).value
        checks.append(
            CheckResult(
                instance=f"complete n={n} r=3 k=1",
                relation="orientation scan == 0",
                values={"brute": brute, "expected": 0},
                ok=brute == 0,
            )
        )
    return _finish("closed-form", seed, checks, t0)


def suite_ramsey_chi(seed=1, budget=None):
    """Ramsey pair-chromatic numbers of small complete 3-uniform
    hypergraphs: 2 up to five vertices, 3 at six."""
    t0 = time.perf_counter()
    kw = _budget_kw(budget)
    checks = []
    for n, expected in ((3, 2), (4, 2), (5, 2), (6, 3)):
        got = chi_r(complete(n, 3), 2, **kw)
        checks.append(
            CheckResult(
                instance=f"complete n={n} r=3 p=2",
                relation=f"chi_R == {expected}",
                values={"chi_r": got, "expected": expected},
                ok=got == expected,
            )
        )
    return _finish("ramsey-chi", seed, checks, t0)


def suite_via_b(seed=1, budget=None):
    """k=1 exact identity f(H,p,1) == C(n,p) - b(H,p) for p in {1, r-1},
    with the forbidden-coordinate certificate attaining the value."""
    t0 = time.perf_counter()
    kw = _budget_kw(budget)
    checks = []
    for idx, h in enumerate(random_corpus(50, seed, ranks=(3,), n_max=6, e_max=6)):
        for p in (1, 2):
            brute = f_bruteforce(h, p, 1, **kw)
            rep = f_p1_exact(h, p, **kw)
            attained = f_count(rep.orientation, p, 1)
            checks.append(
                CheckResult(
                    instance=f"random #{idx} n={h.n} e={h.e} p={p}",
                    relation="f(H,p,1) == C(n,p) - b(H,p) == value of certificate",
                    values={"brute": brute.value, "via_b": rep.value,
                            "certificate": attained},
                    ok=brute.value == rep.value == attained,
                )
            )
    return _finish("via-b", seed, checks, t0)


def suite_multipartite(seed=1, budget=None):
    """Complete multipartite closed form: sum of the class sizes beyond the
    two largest, minus 2k - 2, matched by the partition route."""
    t0 = time.perf_counter()
    kw = _budget_kw(budget)
    checks = []
    for sizes in ((7, 7, 3), (3, 3, 2), (4, 4, 2, 2)):
        k = 2
        formula = closed_form_multipartite(sizes, k)
        via = f_via_m(complete_multipartite(sizes), k, **kw).value
        checks.append(
            CheckResult(
                instance=f"multipartite {sizes} k={k}",
                relation="f via M == sum(sizes[2:]) - 2k + 2",
                values={"applicable": formula.applicable,
                        "formula": formula.value, "via_m": via},
                ok=formula.applicable and via == formula.value,
            )
        )
    return _finish("multipartite", seed, checks, t0)


def suite_perfect_graph(seed=1, budget=None):
    """On complete multipartite and bipartite graphs, f(G,1) equals the
    minimum number of vertices meeting every triangle."""
    t0 = time.perf_counter()
    kw = _budget_kw(budget)
    rng = random.Random(seed)
    checks = []
    for n in range(1, 9):
        for parts in _partitions(n):
            g = complete_multipartite(parts)
            fv = f_via_m(g, 1, **kw).value
            hv = hit_triangles(g, **kw)
            checks.append(
                CheckResult(
                    instance=f"multipartite {parts}",
                    relation="f(G,1) == min triangle transversal",
                    values={"f": fv, "hit": hv},
                    ok=fv == hv,
                )
            )
    for idx in range(30):
        a = rng.randint(1, 4)
        b = rng.randint(1, 9 - a)
        m = rng.randint(0, min(14, a * b))
        g = _random_bipartite(a, b, m, rng.randrange(1 << 30))
        fv = f_via_m(g, 1, **kw).value
        hv = hit_triangles(g, **kw)
        checks.append(
            CheckResult(
                instance=f"bipartite #{idx} sides={a},{b} e={g.e}",
                relation="f(G,1) == min triangle transversal (both 0)",
                values={"f": fv, "hit": hv},
                ok=fv == hv == 0,
            )
        )
    return _finish("perfect-graph", seed, checks, t0)


def suite_complement(seed=1, budget=None):
    """f(G,1) + f(complement(G),1) >= n - 4 for every graph on up to six
    vertices, with equality on disjoint unions of two cliques; the clique
    union / complete bipartite pair meets both closed-form bounds at k=1."""
    t0 = time.perf_counter()
    kw = _budget_kw(budget)
    rng = random.Random(seed)
    checks = []
    for n in range(1, 7):
        pairs = list(itertools.combinations(range(n), 2))
        total = 1 << len(pairs)
        two_part = [0] * total
        for mask in range(total):
            two_part[mask] = alpha2(_graph_of_mask(n, pairs, mask), **kw)
        full = total - 1
        violations = sum(
            1 for mask in range(total) if two_part[mask] + two_part[full ^ mask] > n + 4
        )
        checks.append(
            CheckResult(
                instance=f"all graphs n={n}",
                relation="f(G,1) + f(comp G,1) >= n - 4 (exhaustive)",
                values={"graphs": total, "violations": violations},
                ok=violations == 0,
            )
        )
        if n == 6:
            sample_bad = 0
            for mask in rng.sample(range(total), 100):
                g = _graph_of_mask(n, pairs, mask)
                if f_via_m(g, 1, **kw).value != n - two_part[mask]:
                    sample_bad += 1
            checks.append(
                CheckResult(
                    instance="sample of 100 graphs n=6",
                    relation="f via M == n - (largest union of two independent sets)",
                    values={"mismatches": sample_bad},
                    ok=sample_bad == 0,
                )
            )
    for a in range(2, 9):
        for b in range(a, 11 - a):
            n = a + b
            bipart = complete_multipartite((a, b))
            cliques = complement(bipart)
            total_f = f_via_m(cliques, 1, **kw).value + f_via_m(bipart, 1, **kw).value
            checks.append(
                CheckResult(
                    instance=f"cliques {a}+{b} vs complete bipartite",
                    relation="sum == n - 16k + 12 == n - 8k + 4 at k=1",
                    values={"sum": total_f, "expected": n - 4},
                    ok=total_f == n - 4,
                )
            )
    return _finish("complement", seed, checks, t0)


def suite_mop(seed=1, budget=None):
    """Maximal outerplanar graphs: 1 <= f(G,1) <= n/3, and the fan
    triangulation attains the lower end."""
    t0 = time.perf_counter()
    kw = _budget_kw(budget)
    rng = random.Random(seed)
    checks = []
    for idx in range(50):
        n = rng.randint(3, 12)
        g = mop_random(n, seed=rng.randrange(1 << 30))
        fv = f_via_m(g, 1, **kw).value
        checks.append(
            CheckResult(
                instance=f"random mop #{idx} n={n}",
                relation="1 <= f(G,1) and 3*f(G,1) <= n",
                values={"f": fv},
                ok=1 <= fv and 3 * fv <= n,
            )
        )
    for n in (3, 6, 9, 12):
        fv = f_via_m(mop_fan(n), 1, **kw).value
        checks.append(
            CheckResult(
                instance=f"fan mop n={n}",
                relation="f(G,1) == 1",
                values={"f": fv},
                ok=fv == 1,
            )
        )
    return _finish("mop", seed, checks, t0)


def suite_accounting(seed=1, budget=None):
    """Bookkeeping identities on random orientations: per-position degree
    sums equal the edge count, degree-vector coordinates of a p-set sum to
    its plain degree, and the qualifying-count is monotone in k."""
    t0 = time.perf_counter()
    rng = random.Random(seed)
    checks = []
    block_bad = []
    done = 0
    for idx in range(500):
        r = rng.choice((2, 3, 4))
        n = rng.randint(r, 8)
        m = rng.randint(0, min(10, comb(n, r)))
        h = random_hypergraph(n, r, m, seed=rng.randrange(1 << 30))
        d = random_orientation(h, seed=rng.randrange(1 << 30))
        problems = []
        singles = degree_vectors(d, 1)
        for i in range(r):
            if sum(singles[(v,)][i] for v in range(n)) != h.e:
                problems.append(f"position {i} sum != e")
        for p in range(1, r):
            vecs = degree_vectors(d, p)
            for pset, vec in vecs.items():
                plain = sum(1 for edge in h.edges if set(pset) <= set(edge))
                if sum(vec) != plain:
                    problems.append(f"p={p} pset {pset} coordinate sum != degree")
                    break
            counts = [f_count(d, p, k) for k in range(4)]
            if counts[0] != comb(n, p):
                problems.append(f"p={p} k=0 count != C(n,p)")
            if any(counts[i + 1] > counts[i] for i in range(3)):
                problems.append(f"p={p} count not monotone in k")
        if problems:
            block_bad.append((idx, problems))
        done += 1
        if done % 100 == 0:
            checks.append(
                CheckResult(
                    instance=f"orientations {done - 99}..{done}",
                    relation="position sums, coordinate sums, monotonicity",
                    values={"failures": block_bad},
                    ok=not block_bad,
                )
            )
            block_bad = []
    return _finish("accounting", seed, checks, t0)


def suite_join_reduction(seed=1, budget=None):
    """Two copies of a graph with all cross edges: the largest two-part
    sparse cover of the join doubles the independence number, threshold by
    threshold."""
    t0 = time.perf_counter()
    kw = _budget_kw(budget)
    rng = random.Random(seed)
    checks = []
    for idx in range(30):
        n = rng.randint(3, 8)
        m = rng.randint(0, min(14, comb(n, 2)))
        g = random_hypergraph(n, 2, m, seed=rng.randrange(1 << 30))
        a = alpha(g, **kw)
        joined = join_k2(g)
        mv = m_value(joined, 0, **kw).value
        mismatch = [
            t for t in range(2 * n + 2) if (a >= t) != (mv >= 2 * t)
        ]
        checks.append(
            CheckResult(
                instance=f"random graph #{idx} n={n} e={g.e}",
                relation="alpha(G) >= t <=> M(join, 0) >= 2t",
                values={"alpha": a, "m_join": mv, "bad_t": mismatch},
                ok=not mismatch,
            )
        )
    return _finish("join-reduction", seed, checks, t0)


def _partitions(n, max_part=None):
    if n == 0:
        yield ()
        return
    top = n if max_part is None else min(n, max_part)
    for first in range(top, 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def _graph_of_mask(n, pairs, mask) -> Hypergraph:
    edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
    return canonicalize(edges, n, 2)


def _random_bipartite(a, b, m, seed) -> Hypergraph:
    rng = random.Random(seed)
    chosen = rng.sample([(i, a + j) for i in range(a) for j in range(b)], m)
    return canonicalize(chosen, a + b, 2)


SUITES = {
    "hakimi": suite_hakimi,
    "via-m": suite_via_m,
    "closed-form": suite_closed_form,
    "ramsey-chi": suite_ramsey_chi,
    "via-b": suite_via_b,
    "multipartite": suite_multipartite,
    "perfect-graph": suite_perfect_graph,
    "complement": suite_complement,
    "mop": suite_mop,
    "accounting": suite_accounting,
    "join-reduction": suite_join_reduction,
}


def verify_suite(name, seed=1, budget=None) -> VerifySuiteReport:
    """Run one registered suite; raises UnknownSuite for unregistered names."""
    if name not in SUITES:
        known = ", ".join(sorted(SUITES))
        raise UnknownSuite(f"no suite named {name!r}; known suites: {known}")
    return SUITES[name](seed=seed, budget=budget)


def run_all(seed=1, budget=None) -> list:
    """Run every registered suite in name-stable order."""
    return [SUITES[name](seed=seed, budget=budget) for name in SUITES]
