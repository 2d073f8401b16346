import itertools
import math
import random
import unittest

from hypothesis import given, settings
from hypothesis import strategies as st

from steinberg_rs.errors import DomainError
from steinberg_rs.insertion import (
    Bijection,
    column_insert,
    column_word,
    rectify,
    row_insert,
    row_uninsert,
    row_word,
    rs_inverse,
    rs_pair,
    star,
    star_skew,
    steinberg_classical,
)
from steinberg_rs.partitions import Partition, partitions_of
from steinberg_rs.tableau import SkewTableau, Tableau, enumerate_standard_tableaux

EXAMPLE = Tableau(((1, 2, 7), (3, 6), (5, 9), (8,)))

distinct_words = st.lists(st.integers(min_value=-20, max_value=20), unique=True, max_size=9)
permutations = st.integers(min_value=0, max_value=7).flatmap(
    lambda n: st.permutations(list(range(1, n + 1)))
)


def bijection_of(targets) -> Bijection:
    return Bijection.from_lists(list(range(1, len(targets) + 1)), list(targets))


class TestBijection(unittest.TestCase):
    def test_sorted_by_source(self):
        w = Bijection(((3, 1), (1, 2)))
        self.assertEqual(w.pairs, ((1, 2), (3, 1)))
        self.assertEqual(w(3), 1)
        self.assertEqual(w.inverse().pairs, ((1, 3), (2, 1)))

    def test_rejects_repeated_target(self):
        with self.assertRaises(DomainError):
            Bijection(((1, 2), (3, 2)))

    def test_unknown_source(self):
        with self.assertRaises(DomainError):
            Bijection.identity(2)(5)


class TestInsertion(unittest.TestCase):
    def test_row_insert(self):
        self.assertEqual(row_insert(EXAMPLE, 4), Tableau(((1, 2, 4), (3, 6, 7), (5, 9), (8,))))

    def test_column_insert(self):
        self.assertEqual(column_insert(4, EXAMPLE), Tableau(((1, 2, 6, 7), (3, 5), (4, 9), (8,))))

    def test_rejects_present_value(self):
        with self.assertRaises(DomainError):
            row_insert(EXAMPLE, 6)
        with self.assertRaises(DomainError):
            column_insert(6, EXAMPLE)

    def test_uninsert(self):
        grown = row_insert(EXAMPLE, 4)
        self.assertEqual(row_uninsert(grown, 1), (EXAMPLE, 4))

    def test_uninsert_requires_corner(self):
        with self.assertRaises(DomainError):
            row_uninsert(EXAMPLE, 1)

    def test_column_word_of_increasing_values(self):
        self.assertEqual(column_word([1, 2, 3]), Tableau(((1,), (2,), (3,))))
        self.assertEqual(row_word([1, 2, 3]), Tableau(((1, 2, 3),)))

    @given(distinct_words)
    @settings(max_examples=200, deadline=None)
    def test_column_word_is_reversed_row_word(self, values):
        self.assertEqual(column_word(values), row_word(list(reversed(values))))

    @given(distinct_words, st.data())
    @settings(max_examples=200, deadline=None)
    def test_uninsert_inverts_insert(self, values, data):
        t = row_word(values)
        fresh = data.draw(st.integers(min_value=-30, max_value=30).filter(lambda v: v not in values))
        grown = row_insert(t, fresh)
        row = next(i for i in range(len(grown.rows)) if grown.shape.row(i) > t.shape.row(i))
        self.assertEqual(row_uninsert(grown, row), (t, fresh))


class TestRobinsonSchensted(unittest.TestCase):
    def test_identity(self):
        p, q = rs_pair(Bijection.identity(3))
        self.assertEqual(p, Tableau(((1, 2, 3),)))
        self.assertEqual(q, p)

    def test_reversal(self):
        p, q = rs_pair(bijection_of([3, 2, 1]))
        self.assertEqual(p, Tableau(((1,), (2,), (3,))))
        self.assertEqual(q, p)

    def test_partial_bijection(self):
        p, q = rs_pair(Bijection(((2, 1), (3, 2))))
        self.assertEqual(p, Tableau(((1, 2),)))
        self.assertEqual(q, Tableau(((2, 3),)))

    def test_classical_steinberg(self):
        self.assertEqual(steinberg_classical(bijection_of([2, 3, 1])), Partition((2, 1)))
        with self.assertRaises(DomainError):
            steinberg_classical(Bijection(((2, 1),)))

    @given(permutations)
    @settings(max_examples=200, deadline=None)
    def test_inverse_round_trip(self, targets):
        w = bijection_of(targets)
        p, q = rs_pair(w)
        self.assertEqual(p.shape, q.shape)
        self.assertEqual(rs_inverse(p, q), w)

    @given(permutations)
    @settings(max_examples=200, deadline=None)
    def test_inverse_permutation_swaps_tableaux(self, targets):
        w = bijection_of(targets)
        p, q = rs_pair(w)
        self.assertEqual(rs_pair(w.inverse()), (q, p))

    def test_bijection_onto_same_shape_pairs(self):
        for n in range(6):
            images = {rs_pair(bijection_of(targets)) for targets in itertools.permutations(range(1, n + 1))}
            expected = {
                (p, q)
                for lam in partitions_of(n)
                for p in enumerate_standard_tableaux(lam)
                for q in enumerate_standard_tableaux(lam)
            }
            self.assertEqual(images, expected, str(n))
            self.assertEqual(len(images), math.factorial(n))

    def test_shape_mismatch(self):
        with self.assertRaises(DomainError):
            rs_inverse(Tableau(((1, 2),)), Tableau(((1,), (2,))))


class TestJeuDeTaquin(unittest.TestCase):
    SKEW = SkewTableau(
        Partition((3, 3, 3, 1)),
        Partition((2, 1)),
        ((3,), (4, 7), (1, 6, 9), (8,)),
    )

    def test_rectify(self):
        self.assertEqual(rectify(self.SKEW), Tableau(((1, 3, 7), (4, 9), (6,), (8,))))

    def test_rectify_straight_is_identity(self):
        self.assertEqual(rectify(SkewTableau.straight(EXAMPLE)), EXAMPLE)

    def test_star(self):
        t = Tableau(((5, 7), (9,)))
        s = Tableau(((1, 3, 4), (2, 8)))
        self.assertEqual(star(t, s), Tableau(((1, 3, 4), (2, 7, 8), (5,), (9,))))

    def test_rectify_top_corner_first(self):
        self.assertEqual(rectify(self.SKEW, policy=min), rectify(self.SKEW))

    def test_star_rejects_shared_entries(self):
        with self.assertRaises(DomainError):
            star_skew(Tableau(((1,),)), Tableau(((1, 2),)))

    def test_star_with_empty(self):
        self.assertEqual(star(Tableau(()), EXAMPLE), EXAMPLE)
        self.assertEqual(star(EXAMPLE, Tableau(())), EXAMPLE)

    @given(
        st.lists(st.integers(min_value=1, max_value=40), unique=True, min_size=1, max_size=12),
        st.integers(min_value=0, max_value=11),
        st.integers(min_value=0, max_value=10_000),
    )
    @settings(max_examples=200, deadline=None)
    def test_rectification_ignores_corner_order(self, values, cut, seed):
        cut = min(cut, len(values))
        t, s = row_word(values[:cut]), row_word(values[cut:])
        rng = random.Random(seed)
        self.assertEqual(star(t, s, policy=rng.choice), star(t, s))

    @given(st.lists(st.integers(min_value=1, max_value=40), unique=True, max_size=12), st.integers(0, 12))
    @settings(max_examples=200, deadline=None)
    def test_star_matches_insertion(self, values, cut):
        cut = min(cut, len(values))
        t, s = row_word(values[:cut]), row_word(values[cut:])
        expected = t
        for row in reversed(s.rows):
            for v in row:
                expected = row_insert(expected, v)
        self.assertEqual(star(t, s), expected)

    @given(st.permutations(list(range(1, 13))), st.integers(0, 12), st.integers(0, 12))
    @settings(max_examples=200, deadline=None)
    def test_star_is_associative(self, values, a, b):
        a, b = sorted((a, b))
        t, s, u = row_word(values[:a]), row_word(values[a:b]), row_word(values[b:])
        self.assertEqual(star(star(t, s), u), star(t, star(s, u)))

    @given(st.lists(st.integers(min_value=1, max_value=40), unique=True, max_size=12), st.integers(0, 12))
    @settings(max_examples=200, deadline=None)
    def test_top_corner_policy_agrees(self, values, cut):
        cut = min(cut, len(values))
        skew = star_skew(row_word(values[:cut]), row_word(values[cut:]))
        self.assertEqual(rectify(skew, policy=min), rectify(skew))


if __name__ == "__main__":
    unittest.main()
