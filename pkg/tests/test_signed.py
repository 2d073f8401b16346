import unittest

from steinberg_rs.errors import DomainError, InconsistentCountsError
from steinberg_rs.partitions import Partition, square_zero_condition
from steinberg_rs.signed import (
    SignedYoungDiagram,
    column_counts,
    dominance_signed,
    duplicate_signed,
    expected_components,
    maximal_elements,
    sign_prefix_partitions,
    signed_from_column_counts,
    square_zero_witness,
    swap_signs,
)


def diagram(*rows: str) -> SignedYoungDiagram:
    return SignedYoungDiagram.from_strings(rows)


class TestSignedYoungDiagram(unittest.TestCase):
    def test_from_strings(self):
        d = diagram("-+-+", "-+")
        self.assertEqual(d.to_strings(), ["-+-+", "-+"])
        self.assertEqual(d.n, 3)
        self.assertEqual(d.shape, Partition((4, 2)))

    def test_rows_sorted_plus_first(self):
        d = diagram("-", "+", "-+", "+-")
        self.assertEqual(d.to_strings(), ["+-", "-+", "+", "-"])

    def test_unicode_minus(self):
        self.assertEqual(diagram("+−"), diagram("+-"))

    def test_rejects_unbalanced_signature(self):
        with self.assertRaises(DomainError):
            diagram("+-+")

    def test_rejects_non_alternating_row(self):
        with self.assertRaises(DomainError):
            diagram("++", "--")

    def test_count(self):
        d = diagram("-+-+", "-+")
        self.assertEqual(d.count("+", 1), 0)
        self.assertEqual(d.count("-", 1), 2)
        self.assertEqual(d.count("+", 4), 3)


class TestColumnCounts(unittest.TestCase):
    def test_counts(self):
        self.assertEqual(column_counts(diagram("-+-+", "-+")), ([0, 2, 2, 3], [2, 2, 3, 3]))

    def test_rebuild(self):
        self.assertEqual(
            signed_from_column_counts([0, 2, 2, 3], [2, 2, 3, 3]).to_strings(),
            ["-+-+", "-+"],
        )

    def test_rebuild_every_component(self):
        for n in range(1, 7):
            for d in expected_components(n):
                self.assertEqual(signed_from_column_counts(*column_counts(d)), d)

    def test_final_counts_must_agree(self):
        with self.assertRaises(InconsistentCountsError):
            signed_from_column_counts([1], [0])

    def test_decreasing_counts(self):
        with self.assertRaises(InconsistentCountsError):
            signed_from_column_counts([2, 1], [2, 1])

    def test_length_mismatch(self):
        with self.assertRaises(InconsistentCountsError):
            signed_from_column_counts([1, 2], [2])


class TestOperations(unittest.TestCase):
    def test_duplicate(self):
        self.assertEqual(duplicate_signed(Partition((2, 1))).to_strings(), ["+-", "-+", "+", "-"])

    def test_swap(self):
        self.assertEqual(swap_signs(diagram("+-+", "-")).to_strings(), ["-+-", "+"])

    def test_sign_prefix(self):
        plus, minus = sign_prefix_partitions(diagram("+-+-"))
        self.assertEqual(plus, Partition((2,)))
        self.assertEqual(minus, Partition((1,)))

    def test_dominance(self):
        small = diagram("+", "+", "-", "-")
        big = diagram("+-", "-+")
        self.assertTrue(dominance_signed(small, big))
        self.assertFalse(dominance_signed(big, small))
        self.assertTrue(dominance_signed(big, big))

    def test_dominance_size_mismatch(self):
        with self.assertRaises(DomainError):
            dominance_signed(diagram("+-"), diagram("+-", "-+"))

    def test_maximal_elements(self):
        small = diagram("+", "+", "-", "-")
        big = diagram("+-", "-+")
        self.assertEqual(maximal_elements([small, big, big]), [big])


class TestComponents(unittest.TestCase):
    def test_n1(self):
        self.assertEqual([d.to_strings() for d in expected_components(1)], [["+-"], ["-+"]])

    def test_n2(self):
        self.assertEqual(
            [d.to_strings() for d in expected_components(2)],
            [["+-", "+-"], ["+-", "-+"], ["-+", "-+"]],
        )

    def test_n3(self):
        self.assertEqual(
            [d.to_strings() for d in expected_components(3)],
            [["+-+-", "+-"], ["+-+", "-+-"], ["-+-+", "-+"]],
        )

    def test_components_are_pairwise_incomparable(self):
        for n in range(2, 7):
            comps = expected_components(n)
            self.assertEqual(maximal_elements(comps), comps)

    def test_rejects_n0(self):
        with self.assertRaises(DomainError):
            expected_components(0)

    def test_witness(self):
        w = square_zero_witness(3)
        self.assertEqual(w.to_strings(), ["+-+-", "+", "-"])
        plus, _ = sign_prefix_partitions(w)
        self.assertFalse(square_zero_condition(plus))


if __name__ == "__main__":
    unittest.main()
