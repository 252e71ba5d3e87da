"""Klein-group Poincare series: tables, systems, ratios, closed forms."""

import pytest

from coxkit.algebra import Laurent, RatFunc, z_substitute
from coxkit.cfrac import evaluate, expand_cycle, expand_tree
from coxkit.coxeter import char_poly, coxeter_poly
from coxkit.diagram import build
from coxkit.errors import BadType, IndexOutOfRange
from coxkit.kostant import (PoincareVector, a2m_closed_form, a2m_recurrence,
                            cramer_z_table, ebeling_ratios, klein_data,
                            klein_types, perfect_square_check,
                            poincare_series, prop2_squares, verify_system,
                            walk_series_check)


def test_e6_data():
    data = klein_data("affE", 6)
    assert (data.a, data.b) == (6, 8)
    assert data.z_table[0] == Laurent({0: 1, 12: 1})
    assert data.h == 12 and data.order_b == 24


def test_e8_data():
    data = klein_data("affE", 8)
    assert data.z_table[0] == Laurent({0: 1, 30: 1})
    assert data.order_b == 120
    assert (data.a, data.b) == (12, 20)


def test_e7_data():
    data = klein_data("affE", 7)
    assert (data.a, data.b) == (8, 12) and data.order_b == 48


def test_cycle_numerators():
    data = klein_data("affA", 3)
    assert data.z_table[1] == Laurent({1: 1, 3: 1})
    assert data.z_table[0] == Laurent({0: 1, 4: 1})


def test_d_family_exponents():
    for n in (4, 7, 12):
        data = klein_data("affD", n)
        assert (data.a, data.b) == (4, 2 * n - 4)
        assert data.order_b == 4 * (n - 2)


def test_bad_type():
    with pytest.raises(BadType):
        klein_data("affE", 9)
    with pytest.raises(BadType):
        klein_data("affA", 0)


def test_arithmetic_invariants_all_types():
    for fam, n in klein_types(12):
        data = klein_data(fam, n)
        assert data.a + data.b == data.h + 2
        assert data.a * data.b == 2 * data.order_b
        for z in data.z_table:
            assert z.min_exp >= 0 and z.max_exp <= data.h
            assert all(c > 0 for _, c in z.items())
        assert data.z_table[0] == Laurent({0: 1, data.h: 1})
        one = Laurent.one()
        assert data.z_minus1 == Laurent.q(-1) * (one - Laurent.q(data.a)) \
            * (one - Laurent.q(data.b))


# -- series expansion -----------------------------------------------------------

def test_series_e8_invariants():
    data = klein_data("affE", 8)
    # series-division oracle: (1+q^30)/((1-q^12)(1-q^20)) through q^30
    assert poincare_series(data, 0, 30) == \
        Laurent({0: 1, 12: 1, 20: 1, 24: 1, 30: 1})


def test_series_virtual_vertex_is_inverse_q():
    for fam, n in [("affA", 5), ("affD", 6), ("affE", 7)]:
        data = klein_data(fam, n)
        assert poincare_series(data, -1, 40) == Laurent.q(-1)


def test_series_constant_term():
    for fam, n in [("affA", 2), ("affD", 4), ("affE", 6)]:
        data = klein_data(fam, n)
        assert poincare_series(data, 0, 0) == Laurent.one()
        assert poincare_series(data, 1, 0).coeff(0) == 0


def test_series_positivity_to_200():
    data = klein_data("affE", 8)
    for i in range(data.vertex_count):
        series = poincare_series(data, i, 200)
        assert all(c >= 0 for _, c in series.items())


def test_series_matches_rational_function():
    data = klein_data("affD", 5)
    for i in range(data.vertex_count):
        series = poincare_series(data, i, 60)
        # multiply back and compare through the truncation order
        prod = series * data.denominator()
        diff = prod - data.z_table[i]
        assert diff.is_zero or diff.min_exp > 60 - data.h


def test_series_index_range():
    data = klein_data("affA", 2)
    with pytest.raises(IndexOutOfRange):
        poincare_series(data, 5, 10)


# -- linear systems ---------------------------------------------------------------

def test_system_15_triangle():
    assert verify_system(klein_data("affA", 2), 15).holds


def test_system_14_e6():
    assert verify_system(klein_data("affE", 6), 14).holds


def test_system_16_any_tree():
    assert verify_system(klein_data("affD", 7), 16).holds


def test_all_systems_all_types():
    for fam, n in klein_types(8):
        data = klein_data(fam, n)
        for which in (14, 15, 16):
            assert verify_system(data, which).holds, (fam, n, which)


def test_cramer_recompute_matches_tables():
    for fam, n in klein_types(12):
        data = klein_data(fam, n)
        rec = cramer_z_table(data)
        assert list(data.z_table) == rec, (fam, n)


# -- ratio formulas ----------------------------------------------------------------

def test_ebeling_e8_all_vertices():
    assert all(r.holds for r in ebeling_ratios(klein_data("affE", 8)))


def test_ebeling_odd_cycle_uses_char_poly():
    data = klein_data("affA", 4)
    assert all(r.holds for r in ebeling_ratios(data))
    # the anchor genuinely differs from the Coxeter polynomial here
    d = data.diagram()
    assert z_substitute(char_poly(d)) != coxeter_poly(d)


def test_ebeling_all_types():
    for fam, n in klein_types(12):
        assert all(r.holds for r in ebeling_ratios(klein_data(fam, n))), \
            (fam, n)


# -- odd-cycle closed form ------------------------------------------------------------

def test_a2m_m0():
    rep = a2m_closed_form(0)
    assert rep.holds
    # q (z - 2) at z = q + 1/q is (q-1)^2
    assert Laurent.q(1) * z_substitute(a2m_recurrence(0)) == \
        (Laurent.q(1) - Laurent.one()) ** 2


def test_a2m_m1_triangle():
    rep = a2m_closed_form(1)
    assert rep.holds
    assert a2m_recurrence(1) == char_poly(build("affA", 2))
    want = (Laurent.q(3) - Laurent.one()) ** 2
    assert Laurent.q(1) * z_substitute(char_poly(build("affA", 2))) == \
        want.shifted(-2)


def test_a2m_sweep():
    for m in range(9):
        assert a2m_closed_form(m).holds


# -- squares and walks ----------------------------------------------------------------

def test_prop2_squares_examples():
    assert prop2_squares(klein_data("affE", 6), 2).holds  # branch vertex
    data = klein_data("affD", 4)
    for leaf in (1, 3, 4):
        assert prop2_squares(data, leaf).holds
    data = klein_data("affA", 3)
    for i in (1, 2, 3):
        assert prop2_squares(data, i).holds


def test_prop2_squares_all_small_types():
    for fam, n in [("affA", 1), ("affA", 2), ("affA", 5), ("affD", 5),
                   ("affE", 7), ("affE", 8)]:
        data = klein_data(fam, n)
        for i in range(1, data.vertex_count):
            assert prop2_squares(data, i).holds, (fam, n, i)


def test_walk_series_trivial_start():
    data = klein_data("affE", 6)
    from coxkit.coxeter import walk_gf
    assert walk_gf(data.diagram(), 0, 0, 0) == [1]


def test_walk_series_examples():
    data = klein_data("affE", 6)
    for i in range(data.vertex_count):
        assert walk_series_check(data, i, 20).holds
    data = klein_data("affA", 2)
    assert walk_series_check(data, 1, 10).holds


def test_perfect_squares():
    assert perfect_square_check(klein_data("affE", 6)) == 2
    assert perfect_square_check(klein_data("affE", 8)) == 8
    assert perfect_square_check(klein_data("affA", 1)) == 0
    for fam, n in klein_types(12):
        data = klein_data(fam, n)
        assert perfect_square_check(data) == abs(data.a - data.b)


def test_poincare_vector():
    data = klein_data("affA", 2)
    vec = PoincareVector.of(data)
    assert vec.entries[0] == RatFunc(Laurent.q(-1), Laurent.one())
    assert len(vec.entries) == data.vertex_count + 1
    assert vec.entries[1] == data.series(0)


# -- cross-module: fractions equal scaled series -----------------------------------------

def test_fraction_equals_q_times_p0():
    for fam, n in [("affD", 4), ("affD", 6), ("affE", 6), ("affE", 8)]:
        data = klein_data(fam, n)
        val = evaluate(expand_tree(data.diagram(), 0))
        lhs = z_substitute(val.num) * data.denominator()
        rhs = Laurent.q(1) * data.z_table[0] * z_substitute(val.den)
        assert lhs == rhs
    for n in (2, 3, 7, 8):
        data = klein_data("affA", n)
        val = evaluate(expand_cycle(n))
        lhs = z_substitute(val.num) * data.denominator()
        rhs = Laurent.q(1) * data.z_table[0] * z_substitute(val.den)
        assert lhs == rhs


def test_subfractions_are_series_ratios():
    # the fraction hanging below vertex i inside the full expansion equals
    # P_i / P_parent(i): rebuild it as the expansion of i's branch
    for fam, n in [("affD", 5), ("affE", 6), ("affE", 7)]:
        data = klein_data(fam, n)
        d = data.diagram()
        parent = {0: None}
        queue = [0]
        while queue:
            v = queue.pop(0)
            for u in d.neighbors(v):
                if u not in parent:
                    parent[u] = v
                    queue.append(u)
        for i in range(1, d.n):
            cut = d.delete([parent[i]])
            comp = next(c for c in cut.components()
                        if any(cut.labels[v] == d.labels[i] for v in c))
            keep = set(comp)
            sub = cut.delete([v for v in range(cut.n) if v not in keep])
            root = next(v for v in range(sub.n)
                        if sub.labels[v] == d.labels[i])
            val = evaluate(expand_tree(sub, root))
            # value = P_i / P_parent = Z_i / Z_parent
            lhs = z_substitute(val.den) * data.z_table[i]
            rhs = z_substitute(val.num) * data.z_table[parent[i]]
            assert lhs == rhs, (fam, n, i)
