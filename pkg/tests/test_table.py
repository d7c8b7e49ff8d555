"""Tests for cilab._table: maps, tables and structural predicates."""

import itertools
import pytest
from cilab import (
    CayleyTable,
    EntryOutOfRange,
    NotBijective,
    OrderMismatch,
    OrderTooLarge,
    Permutation,
    TotalMap,
    WrongLength,
    compose,
    configure,
    identity_element,
    identity_map,
    invert,
    is_automorphism,
    is_bijective,
    is_latin_square,
    is_left_quasigroup,
    is_quasigroup,
    is_right_quasigroup,
    left_identity_elements,
    left_translation,
    make_table,
    random_quasigroup,
    relabel,
    right_identity_elements,
    right_translation,
    solve_right,
    table_from_rows,
    transpose,
)


class TestMakeTable:
    def test_z2(self):
        t = make_table(2, [0, 1, 1, 0])
        assert t.order == 2
        assert t.rows() == [(0, 1), (1, 0)]

    def test_trivial(self):
        t = make_table(1, [0])
        assert t.entry(0, 0) == 0

    def test_entry_out_of_range(self):
        with pytest.raises(EntryOutOfRange):
            make_table(2, [0, 1, 1, 2])

    def test_wrong_length(self):
        with pytest.raises(WrongLength):
            make_table(2, [0, 1, 1])

    def test_errors_are_value_errors(self):
        with pytest.raises(ValueError):
            make_table(2, [0, 1, 1, -1])

    def test_order_cap(self):
        configure(max_order=3)
        with pytest.raises(OrderTooLarge):
            make_table(4, [0] * 16)

    def test_table_from_rows_rejects_ragged(self):
        with pytest.raises(WrongLength):
            table_from_rows([[0, 1], [1]])

    def test_grid_is_read_only(self, z3):
        assert z3.grid.shape == (3, 3)
        with pytest.raises(ValueError):
            z3.grid[0, 0] = 2


class TestMaps:
    def test_out_of_range_image(self):
        with pytest.raises(EntryOutOfRange):
            TotalMap((0, 2))

    def test_permutation_rejects_repeats(self):
        with pytest.raises(NotBijective):
            Permutation((0, 0))

    def test_equality_ignores_subclass(self):
        assert TotalMap((1, 0)) == Permutation((1, 0))
        assert hash(TotalMap((1, 0))) == hash(Permutation((1, 0)))

    @pytest.mark.parametrize("image,expected", [((1, 2, 0), True), ((0, 0), False), ((0,), True)])
    def test_is_bijective(self, image, expected):
        assert is_bijective(TotalMap(image)) is expected

    def test_compose(self):
        assert compose(TotalMap((1, 0)), TotalMap((1, 0))) == identity_map(2)
        assert compose(TotalMap((1, 2, 0)), TotalMap((2, 0, 1))) == identity_map(3)
        m = TotalMap((2, 2, 0))
        assert compose(m, identity_map(3)) == m
        assert compose(identity_map(3), m) == m

    def test_compose_applies_right_map_first(self):
        f = TotalMap((1, 1, 2))
        g = TotalMap((2, 0, 1))
        assert compose(f, g).image == (2, 1, 1)

    def test_compose_order_mismatch(self):
        with pytest.raises(OrderMismatch):
            compose(TotalMap((0,)), TotalMap((0, 1)))

    @pytest.mark.parametrize("image,expected", [
        ((1, 2, 0), (2, 0, 1)),
        ((0, 1), (0, 1)),
        ((0, 2, 1), (0, 2, 1)),
    ])
    def test_invert(self, image, expected):
        assert invert(TotalMap(image)).image == expected

    def test_invert_rejects_non_bijection(self):
        with pytest.raises(NotBijective):
            invert(TotalMap((0, 0)))

    def test_inverse_laws_for_all_permutations_of_four(self):
        e = identity_map(4)
        for image in itertools.permutations(range(4)):
            p = Permutation(image)
            assert compose(p, invert(p)) == e
            assert compose(invert(p), p) == e


class TestTranslations:
    def test_left(self, z3, z2, constant2):
        assert left_translation(z3, 1).image == (1, 2, 0)
        assert left_translation(z2, 0).image == (0, 1)
        assert left_translation(constant2, 1).image == (0, 0)

    def test_right(self, z3, z2, y_minus_x):
        assert right_translation(z3, 1).image == (1, 2, 0)
        assert right_translation(z2, 0).image == (0, 1)
        assert right_translation(y_minus_x, 0).image == (0, 2, 1)

    def test_element_out_of_range(self, z2):
        with pytest.raises(EntryOutOfRange):
            left_translation(z2, 2)

    def test_rows_and_columns_agree_through_transpose(self):
        for seed in range(20):
            t = random_quasigroup(5, seed)
            tt = transpose(t)
            for a in range(5):
                assert left_translation(t, a) == right_translation(tt, a)
                for y in range(5):
                    assert left_translation(t, a)(y) == t.entry(a, y)
                    assert right_translation(t, a)(y) == t.entry(y, a)


class TestQuasigroupPredicates:
    def test_left(self, z3, constant2):
        assert is_left_quasigroup(z3)
        assert not is_left_quasigroup(constant2)
        assert is_left_quasigroup(table_from_rows([[0, 1], [0, 1]]))

    def test_right(self, z3, trivial):
        assert is_right_quasigroup(z3)
        assert not is_right_quasigroup(table_from_rows([[0, 1], [0, 1]]))
        assert is_right_quasigroup(trivial)

    def test_quasigroup(self, z2, y_minus_x):
        assert is_quasigroup(z2)
        assert not is_quasigroup(table_from_rows([[0, 1], [0, 1]]))
        assert is_quasigroup(y_minus_x)

    def test_latin_square_agrees_on_all_order_two_and_three_tables(self):
        for n in (2, 3):
            for entries in itertools.islice(itertools.product(range(n), repeat=n * n), 5000):
                t = CayleyTable(n, entries)
                assert is_latin_square(t) == is_quasigroup(t)


class TestIdentity:
    def test_identity_element(self, z3, y_minus_x, trivial):
        assert identity_element(z3) == 0
        assert identity_element(y_minus_x) is None
        assert identity_element(trivial) == 0

    def test_one_sided_identities(self, y_minus_x):
        assert left_identity_elements(y_minus_x) == [0]
        assert right_identity_elements(y_minus_x) == []

    def test_identity_need_not_be_zero(self):
        t = table_from_rows([[1, 0], [0, 1]])
        assert identity_element(t) == 1

    def test_identity_row_and_column_are_identity(self):
        for seed in range(30):
            t = random_quasigroup(4, seed)
            e = identity_element(t)
            if e is not None:
                assert left_translation(t, e) == identity_map(4)
                assert right_translation(t, e) == identity_map(4)


class TestAutomorphism:
    def test_negation_of_z3(self, z3):
        assert is_automorphism(z3, TotalMap((0, 2, 1)))

    def test_rotation_of_z3_is_not(self, z3):
        assert not is_automorphism(z3, TotalMap((1, 2, 0)))

    def test_identity_map_always(self, y_minus_x, constant2):
        assert is_automorphism(y_minus_x, identity_map(3))
        assert is_automorphism(constant2, identity_map(2))

    def test_non_bijection_is_not(self, constant2):
        assert not is_automorphism(constant2, TotalMap((0, 0)))


class TestRelabel:
    def test_relabel_by_swap(self, z2):
        swapped = relabel(z2, TotalMap((1, 0)))
        assert swapped.rows() == [(1, 0), (0, 1)]

    def test_relabel_preserves_quasigroup(self):
        t = random_quasigroup(5, 7)
        sigma = TotalMap((3, 0, 4, 1, 2))
        u = relabel(t, sigma)
        assert is_quasigroup(u)
        for x in range(5):
            for y in range(5):
                assert u.entry(sigma(x), sigma(y)) == sigma(t.entry(x, y))

    def test_relabel_order_mismatch(self, z2):
        with pytest.raises(OrderMismatch):
            relabel(z2, identity_map(3))


def test_solve_right(z3):
    for a in range(3):
        for b in range(3):
            y = solve_right(z3, a, b)
            assert z3.entry(y, a) == b


def test_solve_right_needs_bijective_column():
    with pytest.raises(NotBijective):
        solve_right(table_from_rows([[0, 1], [0, 1]]), 0, 1)
