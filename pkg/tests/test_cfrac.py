"""Branching continued fractions: expansion, evaluation, rendering."""

import random

import pytest

from coxkit.algebra import Laurent, Poly, RatFunc, z_substitute
from coxkit.cfrac import (Branch, Closing, evaluate, expand_cycle,
                          expand_tree, render, tree_ratio, z_count)
from coxkit.coxeter import char_poly
from coxkit.diagram import build, from_name, random_tree
from coxkit.errors import DomainError, NotATree
from coxkit.kostant import klein_data


def test_single_vertex_is_one_over_z():
    node = expand_tree(build("A", 1), 0)
    assert node == Branch(())
    assert evaluate(node) == RatFunc(Poly.one(), Poly.x())


def test_affine_d4_shape():
    node = expand_tree(build("affD", 4), 0)
    assert len(node.children) == 1
    inner = node.children[0][1]
    assert len(inner.children) == 3
    assert all(child == Branch(()) and w == 1 for w, child in inner.children)


def test_path_fraction_is_chebyshev_quotient():
    d = build("A", 6)
    node = expand_tree(d, 0)
    cur = node
    seen = 0
    while cur.children:
        assert len(cur.children) == 1
        seen += 1
        cur = cur.children[0][1]
    assert seen + 1 == 6
    assert evaluate(node) == RatFunc(char_poly(build("A", 5)), char_poly(d))


def test_tree_requirement():
    with pytest.raises(NotATree):
        expand_tree(build("affA", 3), 0)


def test_round_trip_random_trees_all_roots():
    rng = random.Random(13)
    for _ in range(25):
        d = random_tree(rng, rng.randint(1, 10), (1, 2))
        for root in range(d.n):
            node = expand_tree(d, root)
            assert z_count(node) == d.n
            assert evaluate(node) == tree_ratio(d, root)


def test_branch_shape_mirrors_diagram():
    d = build("affE", 7)
    node = expand_tree(d, 0)

    def walk(nd, vertex, parent):
        kids = [u for u in d.neighbors(vertex) if u != parent]
        assert len(nd.children) == len(kids)
        for (w, child), u in zip(nd.children, sorted(kids)):
            assert w == d.weight(vertex, u) ** 2
            walk(child, u, vertex)

    walk(node, 0, -1)


def test_cycle_counts_and_closings():
    n2 = expand_cycle(2)
    assert z_count(n2) == 3
    closings = _collect_closings(n2)
    assert all(c.value == RatFunc(Poly.one(), Poly.one()) for c in closings)
    n3 = expand_cycle(3)
    assert z_count(n3) == 3
    closings = _collect_closings(n3)
    assert all(c.value == RatFunc(Poly.x(), Poly.const(2)) for c in closings)
    for n in range(1, 11):
        node = expand_cycle(n)
        assert z_count(node) == (n if n % 2 else n + 1)


def _collect_closings(node):
    if isinstance(node, Closing):
        return [node]
    out = []
    for _, child in node.children:
        out.extend(_collect_closings(child))
    return out


def test_cycle_evaluation_matches_char_ratio():
    for n in range(1, 11):
        d = build("affA", n)
        want = RatFunc(char_poly(d.delete([0])), char_poly(d))
        assert evaluate(expand_cycle(n)) == want


def test_cycle_rejects_other_depths():
    expand_cycle(5, 2)
    with pytest.raises(DomainError):
        expand_cycle(5, 1)


def test_evaluate_hand_nested():
    # 1/(z - 1/z) = z / (z^2 - 1)
    node = Branch(((1, Branch(())),))
    assert evaluate(node) == RatFunc(Poly.x(), Poly((-1, 0, 1)))


def test_affine_fraction_values_against_coxeter():
    # for the bipartite affine trees the fraction equals the Coxeter-ratio
    for name in ("~D4", "~E6", "~E7", "~E8"):
        d = from_name(name)
        val = evaluate(expand_tree(d, 0))
        num_q = z_substitute(val.num)
        den_q = z_substitute(val.den)
        from coxkit.coxeter import coxeter_poly
        from coxkit.diagram import bipartite_order
        split = bipartite_order(d)
        full = coxeter_poly(d.with_order(split))
        cut = d.delete([0])
        cut_split = bipartite_order(cut)
        part = coxeter_poly(cut.with_order(cut_split))
        assert num_q * full == den_q * part


def test_fraction_equals_scaled_poincare_series():
    for fam, n in [("affD", 4), ("affE", 6), ("affA", 6), ("affA", 5)]:
        data = klein_data(fam, n)
        node = (expand_cycle(n) if fam == "affA"
                else expand_tree(data.diagram(), 0))
        val = evaluate(node)
        lhs = z_substitute(val.num) * data.denominator()
        rhs = Laurent.q(1) * data.z_table[0] * z_substitute(val.den)
        assert lhs == rhs


def test_latex_render():
    assert render(Branch(()), "latex") == r"\cfrac{1}{z}"
    latex = render(expand_tree(build("affD", 4), 0), "latex")
    assert latex.count(r"\cfrac{1}{z}") == 3
    cyc = render(expand_cycle(3), "latex")
    assert cyc.count("z/2") == 2


def test_ascii_render_two_levels():
    text = render(expand_tree(build("A", 2), 0), "ascii")
    lines = text.splitlines()
    assert len(lines) == 2
    assert lines[1].startswith("  ")


def test_weighted_edge_renders_weight():
    node = expand_tree(build("affA", 1), 0)  # weight-2 edge: child weight 4
    latex = render(node, "latex")
    assert "4\\," in latex
