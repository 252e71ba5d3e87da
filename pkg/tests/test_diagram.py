"""Diagram builders, deletion, joins and the two-block order."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coxkit.diagram import (Diagram, OddCycle, SeifertMatrix, bipartite_order,
                            build, disjoint_union, from_name, from_text, join,
                            parse_name, random_tree, to_text)
from coxkit.errors import BadRank, DomainError, UnknownVertex


def test_build_a1_single_vertex():
    d = build("A", 1)
    assert d.n == 1 and d.edges() == ()


def test_build_affine_a2_is_triangle():
    d = build("affA", 2)
    assert d.n == 3
    assert d.edges() == ((0, 1, 1), (0, 2, 1), (1, 2, 1))


def test_build_bad_rank():
    with pytest.raises(BadRank):
        build("E", 9)
    with pytest.raises(BadRank):
        build("D", 3)
    with pytest.raises(BadRank):
        build("affA", 0)


def test_affine_a1_weight_two_edge():
    d = build("affA", 1)
    assert d.n == 2 and d.weight(0, 1) == 2


def test_families_have_unit_weights_and_right_sizes():
    for fam, n, size in [("A", 5, 5), ("D", 6, 6), ("E", 7, 7),
                         ("affA", 4, 5), ("affD", 5, 6), ("affE", 8, 9)]:
        d = build(fam, n)
        assert d.n == size
        if (fam, n) != ("affA", 1):
            assert all(w == 1 for (_, _, w) in d.edges())


def test_delete_middle_of_path():
    d = build("A", 3).delete([1])
    assert d.n == 2 and d.edges() == ()


def test_delete_affine_vertex_gives_euclidean():
    for fam, n in [("affE", 6), ("affE", 7), ("affE", 8), ("affD", 5)]:
        d = build(fam, n).delete([0])
        e = build(fam.replace("aff", ""), n)
        assert sorted(d.degree(v) for v in range(d.n)) == \
            sorted(e.degree(v) for v in range(e.n))


def test_delete_everything():
    d = build("A", 4).delete([0, 1, 2, 3])
    assert d.n == 0


def test_delete_unknown_vertex():
    with pytest.raises(UnknownVertex):
        build("A", 2).delete([5])


def test_join_of_three_a1_is_star():
    d = join([(build("A", 1), 0)] * 3)
    assert d.n == 4
    degs = sorted(d.degree(v) for v in range(4))
    assert degs == [1, 1, 1, 3]
    e = build("D", 4)
    assert sorted(e.degree(v) for v in range(4)) == degs


def test_join_path_extension():
    d = join([(build("A", 3), 2)])
    degs = sorted(d.degree(v) for v in range(4))
    assert degs == sorted(build("A", 4).degree(v) for v in range(4))


def test_join_then_delete_center_restores_parts():
    parts = [(build("A", 2), 0), (build("A", 3), 1)]
    d = join(parts)
    back = d.delete([0])
    want = disjoint_union(parts[0][0], parts[1][0])
    assert back.edges() == want.edges() and back.n == want.n


def test_join_marked_vertex_range():
    with pytest.raises(UnknownVertex):
        join([(build("A", 2), 7)])


def _has_two_block_cut(d, split) -> bool:
    for cut in range(d.n + 1):
        left = set(split[:cut])
        if all((i in left) != (j in left) for (i, j, _) in d.edges()):
            return True
    return not d.edges()


def test_bipartite_trees_always_succeed():
    rng = random.Random(5)
    for _ in range(60):
        d = random_tree(rng, rng.randint(1, 10), (1, 2))
        split = bipartite_order(d)
        assert not isinstance(split, OddCycle)
        assert sorted(split) == list(range(d.n))
        assert _has_two_block_cut(d, split)


def test_bipartite_blocks_have_no_internal_edges():
    for fam, n in [("A", 6), ("D", 7), ("affE", 6), ("affA", 3), ("affA", 5)]:
        d = build(fam, n)
        split = bipartite_order(d)
        assert not isinstance(split, OddCycle)
        assert _has_two_block_cut(d, split)


def test_bipartite_odd_cycle_witness():
    out = bipartite_order(build("affA", 4))
    assert isinstance(out, OddCycle)
    cyc = out.cycle
    assert len(cyc) % 2 == 1 and len(cyc) >= 3
    d = build("affA", 4)
    for a, b in zip(cyc, cyc[1:] + cyc[:1]):
        assert d.weight(a, b) != 0


def test_bipartite_even_cycle_ok():
    assert not isinstance(bipartite_order(build("affA", 3)), OddCycle)


def test_weight_symmetry_and_no_loops():
    d = build("affD", 6)
    for i in range(d.n):
        assert d.weight(i, i) == 0
        for j in range(d.n):
            assert d.weight(i, j) == d.weight(j, i)
    with pytest.raises(DomainError):
        Diagram(2, [((0, 0), 1)])


def test_seifert_matrix_shape():
    d = build("A", 3)
    s = SeifertMatrix.from_diagram(d)
    assert s.entries == ((1, -1, 0), (0, 1, -1), (0, 0, 1))
    c = s.c_matrix()
    assert c == [[2, -1, 0], [-1, 2, -1], [0, -1, 2]]


def test_seifert_respects_order():
    d = build("A", 3).with_order((2, 0, 1))
    s = SeifertMatrix.from_diagram(d)
    assert s.entries == ((1, 0, -1), (0, 1, -1), (0, 0, 1))


def test_parse_and_file_roundtrip():
    assert parse_name("~E7") == ("affE", 7)
    assert parse_name("A5") == ("A", 5)
    d = build("affD", 5).with_order((5, 4, 3, 2, 1, 0))
    again = from_text(to_text(d))
    assert again == d
    assert from_name("D4").edges() == build("D", 4).edges()


def test_from_text_errors():
    with pytest.raises(DomainError):
        from_text("1 2 1\n")  # missing header


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 9), st.integers(0, 10 ** 6))
def test_random_tree_is_tree(n, seed):
    d = random_tree(random.Random(seed), n, (1, 2))
    assert d.is_tree()
    assert len(d.edges()) == n - 1
