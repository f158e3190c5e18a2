"""Data-model tests: validation, position indexing, generators, file I/O."""

import random
from math import comb

import pytest

from hyperf import (
    BadParams,
    DuplicateEdge,
    Hypergraph,
    FormatError,
    Orientation,
    PositionIndex,
    RepeatedVertexInEdge,
    VertexOutOfRange,
    ascending_orientation,
    canonicalize,
    complement,
    complete,
    complete_multipartite,
    degeneracy,
    degree_vector,
    degree_vectors,
    from_text,
    generate,
    join_k2,
    max_coordinate,
    mop_fan,
    mop_random,
    random_hypergraph,
    random_orientation,
    read_path,
    to_text,
    write_path,
)


def test_canonicalize_sorts_edges_and_vertices():
    h = canonicalize([(2, 1), (0, 2), (1, 0)], 3, 2)
    assert h.edges == ((0, 1), (0, 2), (1, 2))
    assert (h.n, h.r, h.e) == (3, 2, 3)


def test_canonicalize_rejects_bad_edges():
    with pytest.raises(VertexOutOfRange):
        canonicalize([(0, 5)], 3, 2)
    with pytest.raises(RepeatedVertexInEdge):
        canonicalize([(1, 1)], 3, 2)
    with pytest.raises(DuplicateEdge):
        canonicalize([(0, 1), (1, 0)], 3, 2)
    with pytest.raises(BadParams):
        canonicalize([(0, 1)], 3, 3)


def test_degrees_and_edges_inside():
    h = complete(4, 2)
    assert h.degrees() == [3, 3, 3, 3]
    assert h.degree(0) == 3
    assert h.edges_inside([0, 1, 2]) == [0, 1, 3]
    assert h.edges_inside([3]) == []


def test_position_index_rank_unrank_roundtrip():
    for r in range(2, 7):
        for p in range(1, r):
            idx = PositionIndex(r, p)
            assert idx.count == comb(r, p)
            assert list(idx.sets) == sorted(idx.sets)
            for i, s in enumerate(idx.sets):
                assert idx.rank(s) == i
                assert idx.unrank(i) == s


def test_orientation_requires_permutations_of_edges():
    h = complete(3, 2)
    with pytest.raises(BadParams):
        Orientation(h, ((0, 1), (0, 1), (1, 2)))
    with pytest.raises(BadParams):
        Orientation(h, ((0, 1), (0, 2)))


def test_degree_vector_triangle_orientations():
    h = complete(3, 2)
    cyclic = Orientation(h, ((0, 1), (2, 0), (1, 2)))
    vecs = degree_vectors(cyclic, 1)
    assert all(vecs[(v,)] == [1, 1] for v in range(3))
    transitive = Orientation(h, ((0, 1), (0, 2), (1, 2)))
    assert degree_vectors(transitive, 1) == {(0,): [2, 0], (1,): [1, 1], (2,): [0, 2]}


def test_degree_vector_pair_in_triple_system():
    d = ascending_orientation(complete(4, 3))
    dv = degree_vector(d, (0, 1))
    assert dv.pset == (0, 1)
    assert tuple(dv.coords) == (2, 0, 0)
    assert max_coordinate(d, 0) >= 1


def test_random_orientation_is_seed_deterministic():
    h = complete(5, 2)
    assert random_orientation(h, 7) == random_orientation(h, 7)
    assert random_orientation(h, 7) != random_orientation(h, 8)


def test_complete_generator_edge_counts():
    for n, r in ((5, 2), (6, 3), (6, 4)):
        assert complete(n, r).e == comb(n, r)


def test_multipartite_generator():
    g = complete_multipartite((3, 2, 2))
    assert g.n == 7
    assert g.e == 3 * 2 + 3 * 2 + 2 * 2
    for a, b in g.edges:
        assert (a < 3) + (3 <= b < 5) + (b >= 5) >= 1


def test_mop_generators_are_triangulations():
    for n in range(3, 13):
        fan = mop_fan(n)
        assert fan.e == 2 * n - 3
        assert degeneracy(fan)[0] == 2 or n == 3
        rnd = mop_random(n, seed=n)
        assert rnd.e == 2 * n - 3
        cycle = {tuple(sorted((i, (i + 1) % n))) for i in range(n)}
        assert cycle <= set(rnd.edges)
    assert mop_random(9, seed=1) == mop_random(9, seed=1)


def test_join_and_complement():
    g = canonicalize([(0, 1)], 3, 2)
    j = join_k2(g)
    assert (j.n, j.e) == (6, 2 * g.e + 9)
    c = complement(g)
    assert c.e == comb(3, 2) - 1
    assert complement(c) == g


def test_generate_dispatch():
    assert generate("complete", n=4, r=2) == complete(4, 2)
    with pytest.raises(BadParams):
        generate("no-such-family", n=1)


def test_random_hypergraph_bounds_and_determinism():
    h = random_hypergraph(8, 3, 12, seed=3)
    assert (h.n, h.r, h.e) == (8, 3, 12)
    assert h == random_hypergraph(8, 3, 12, seed=3)
    assert h != random_hypergraph(8, 3, 12, seed=4)


def test_text_roundtrip_hypergraph():
    h = random_hypergraph(7, 3, 9, seed=5)
    assert from_text(to_text(h)) == h


def test_text_roundtrip_orientation():
    d = random_orientation(random_hypergraph(6, 3, 7, seed=2), seed=9)
    back = from_text(to_text(d))
    assert isinstance(back, Orientation)
    assert back == d


def test_from_text_accepts_comments_and_any_order():
    text = "# demo\nhypergraph n=3 r=2\ne 2 1\n\ne 0 1  # inline\n"
    assert from_text(text) == canonicalize([(1, 2), (0, 1)], 3, 2)


def test_from_text_rejects_malformed_input():
    with pytest.raises(FormatError):
        from_text("net n=3 r=2\n")
    with pytest.raises(FormatError):
        from_text("hypergraph n=3 r=2\ne 0\n")
    with pytest.raises(FormatError):
        from_text("hypergraph n=3 r=2\nx 0 1\n")
    with pytest.raises(FormatError):
        from_text("hypergraph n=3\n")


def test_write_and_read_path(tmp_path):
    h = complete(5, 3)
    target = tmp_path / "h.hg"
    write_path(h, target)
    assert read_path(target) == h


def test_rank_corpus_matches_combinations():
    rng = random.Random(1)
    for _ in range(50):
        r = rng.randint(2, 8)
        p = rng.randint(1, r - 1)
        idx = PositionIndex(r, p)
        i = rng.randrange(idx.count)
        assert idx.rank(idx.unrank(i)) == i
