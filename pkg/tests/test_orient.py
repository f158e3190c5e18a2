"""Orientation-construction tests: degree budgets, partitions, forbidden
coordinates, and deficiency colorings."""

import random
from math import comb

import pytest

from hyperf import (
    BadPSet,
    BudgetDomainMismatch,
    BadParams,
    Infeasible,
    Orientation,
    PartNotSparse,
    PartsNotDisjoint,
    StuckEdge,
    complete,
    deficiency_coloring,
    f_count,
    mad_bruteforce,
    orient_budget,
    orient_forbidden,
    orient_from_partition,
    orient_max_outdeg,
    random_hypergraph,
    random_orientation,
)


def _first_position_degrees(d):
    out = [0] * d.base.n
    for order in d.orders:
        out[order[0]] += 1
    return out


def test_triangle_orientable_with_unit_outdegree():
    d = orient_max_outdeg(complete(3, 2), 1)
    assert isinstance(d, Orientation)
    assert _first_position_degrees(d) == [1, 1, 1]


def test_k4_unit_outdegree_infeasible_with_witness():
    result = orient_max_outdeg(complete(4, 2), 1)
    assert result == Infeasible(witness=(0, 1, 2, 3), edges_inside=6, capacity=4)


def test_complete_triple_systems_feasibility_threshold():
    # five vertices: ten triples need total first-position budget >= 10
    assert isinstance(orient_max_outdeg(complete(4, 3), 1), Orientation)
    dense = orient_max_outdeg(complete(5, 3), 1)
    assert isinstance(dense, Infeasible)
    assert dense.edges_inside == 10 and dense.capacity == 5
    assert isinstance(orient_max_outdeg(complete(5, 3), 2), Orientation)


def test_per_vertex_budgets():
    k3 = complete(3, 2)
    d = orient_budget(k3, {0: 2, 1: 1, 2: 0})
    assert d.orders == ((0, 1), (0, 2), (1, 2))
    bad = orient_budget(k3, {0: 3, 1: 0, 2: 0})
    assert bad == Infeasible(witness=(1, 2), edges_inside=1, capacity=0)
    with pytest.raises(BudgetDomainMismatch):
        orient_budget(k3, {0: 1, 1: 1})


def test_infeasible_witness_certifies_overload():
    rng = random.Random(6)
    for _ in range(40):
        r = rng.choice((2, 3))
        n = rng.randint(r, 8)
        h = random_hypergraph(n, r, rng.randint(0, min(10, comb(n, r))), seed=rng.randrange(10**6))
        k = rng.randint(0, 2)
        result = orient_max_outdeg(h, k)
        if isinstance(result, Infeasible):
            assert len(h.edges_inside(result.witness)) == result.edges_inside
            assert result.edges_inside > result.capacity == k * len(result.witness)
            assert mad_bruteforce(h) > h.r * k
        else:
            assert max(_first_position_degrees(result), default=0) <= k
            assert mad_bruteforce(h) <= h.r * k


def test_partition_orientation_clears_every_vertex():
    d = orient_from_partition(complete(6, 2), 2, ((0, 1, 2), (3, 4, 5)))
    assert f_count(d, 1, 2) == 0
    # vertices of part j stay below k at coordinate j
    for j, part in enumerate(((0, 1, 2), (3, 4, 5))):
        for v in part:
            coord = sum(1 for order in d.orders if order[j] == v)
            assert coord <= 1


def test_partition_orientation_rejects_bad_parts():
    with pytest.raises(PartsNotDisjoint):
        orient_from_partition(complete(6, 2), 2, ((0, 1, 2), (2, 3, 4)))
    with pytest.raises(PartNotSparse):
        orient_from_partition(complete(4, 2), 1, ((0, 1, 2),))
    with pytest.raises(BadParams):
        orient_from_partition(complete(4, 2), 1, ((0, 1), (2, 3), (0,)))


def test_forbidden_coordinates_vertex_case():
    d = orient_forbidden(complete(3, 2), {(0,): 0, (1,): 1}, 1)
    assert d.orders == ((1, 0), (2, 0), (1, 2))
    with pytest.raises(StuckEdge) as err:
        orient_forbidden(complete(3, 2), {(0,): 0, (1,): 0}, 1)
    assert err.value.edge == (0, 1)


def test_forbidden_coordinates_pair_case():
    d = orient_forbidden(complete(3, 3), {(0, 1): 0, (0, 2): 1, (1, 2): 2}, 2)
    assert d.orders == ((1, 2, 0),)


def test_forbidden_coordinates_needs_boundary_p():
    with pytest.raises(BadPSet):
        orient_forbidden(complete(5, 4), {(0, 1): 0}, 2)


def test_deficiency_coloring_transitive_triangle():
    transitive = Orientation(complete(3, 2), ((0, 1), (0, 2), (1, 2)))
    assert deficiency_coloring(transitive, 1, 1) == {(0,): 1, (1,): 2, (2,): 0}


def test_deficiency_sentinel_counts_full_psets():
    rng = random.Random(13)
    for _ in range(30):
        r = rng.choice((2, 3))
        n = rng.randint(r, 7)
        h = random_hypergraph(n, r, rng.randint(0, min(9, comb(n, r))), seed=rng.randrange(10**6))
        d = random_orientation(h, seed=rng.randrange(10**6))
        for p in (1, r - 1):
            for k in (1, 2):
                coloring = deficiency_coloring(d, p, k)
                sentinel = comb(r, p)
                full = sum(1 for c in coloring.values() if c == sentinel)
                assert full == f_count(d, p, k)
                assert len(coloring) == comb(n, p)
