import unittest

from hypothesis import given, settings
from hypothesis import strategies as st

from steinberg_rs.errors import DomainError
from steinberg_rs.partitions import (
    Partition,
    dominance_partition,
    partitions_of,
    square_jordan_type,
    square_zero_condition,
)


def partitions(max_size: int = 8):
    return st.integers(min_value=0, max_value=max_size).flatmap(
        lambda n: st.sampled_from(list(partitions_of(n)))
    )


class TestPartition(unittest.TestCase):
    def test_rejects_increasing_parts(self):
        with self.assertRaises(DomainError):
            Partition((1, 2))

    def test_rejects_zero_part(self):
        with self.assertRaises(DomainError):
            Partition((2, 0))

    def test_empty_partition(self):
        empty = Partition(())
        self.assertEqual(empty.size, 0)
        self.assertEqual(empty.num_columns, 0)
        self.assertEqual(str(empty), "()")

    def test_column_counts(self):
        lam = Partition((4, 2, 2, 1))
        self.assertEqual(lam.column_counts(4), [4, 7, 8, 9])
        self.assertEqual(lam.conjugate(), Partition((4, 3, 1, 1)))

    def test_column_strip(self):
        self.assertTrue(Partition((3, 2, 1)).is_column_strip_over(Partition((2, 1))))
        self.assertFalse(Partition((3,)).is_column_strip_over(Partition((1,))))

    def test_partitions_of_counts(self):
        self.assertEqual([len(list(partitions_of(n))) for n in range(7)], [1, 1, 2, 3, 5, 7, 11])

    @given(partitions())
    @settings(max_examples=200, deadline=None)
    def test_conjugate_is_involution(self, lam):
        self.assertEqual(lam.conjugate().conjugate(), lam)


class TestDominance(unittest.TestCase):
    def test_reflexive(self):
        self.assertTrue(dominance_partition(Partition((1, 1, 1)), Partition((1, 1, 1))))

    def test_two_one_below_three(self):
        self.assertTrue(dominance_partition(Partition((2, 1)), Partition((3,))))

    def test_three_not_below_two_one(self):
        self.assertFalse(dominance_partition(Partition((3,)), Partition((2, 1))))

    def test_size_mismatch(self):
        with self.assertRaises(DomainError):
            dominance_partition(Partition((2,)), Partition((1,)))


class TestSquareZero(unittest.TestCase):
    def test_examples(self):
        self.assertTrue(square_zero_condition(Partition((2, 2, 1))))
        self.assertFalse(square_zero_condition(Partition((3, 1))))
        self.assertTrue(square_zero_condition(Partition((1,))))

    def test_square_jordan_type_examples(self):
        self.assertEqual(square_jordan_type(Partition((4,))), Partition((2, 2)))
        self.assertEqual(square_jordan_type(Partition((3,))), Partition((2, 1)))
        self.assertEqual(square_jordan_type(Partition((1,))), Partition((1,)))

    @given(partitions())
    @settings(max_examples=200, deadline=None)
    def test_squares_satisfy_condition(self, mu):
        self.assertTrue(square_zero_condition(square_jordan_type(mu)))

    def test_every_square_zero_shape_is_a_square(self):
        for n in range(9):
            squares = {square_jordan_type(mu) for mu in partitions_of(n)}
            for lam in partitions_of(n):
                if square_zero_condition(lam):
                    self.assertIn(lam, squares)


if __name__ == "__main__":
    unittest.main()
