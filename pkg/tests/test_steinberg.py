import os
import unittest

from steinberg_rs.errors import DomainError
from steinberg_rs.partial_perm import PartialPermutation, enumerate_partial_permutations, partial_permutation_count
from steinberg_rs.partitions import Partition, partitions_of
from steinberg_rs.signed import SignedYoungDiagram, duplicate_signed
from steinberg_rs.steinberg import (
    Triple,
    fiber_count_formula,
    fiber_enumeration,
    phi,
    phi_fibers,
    strip_bases,
    triangle,
    triangle_by_erasure,
    triangle_for,
    triple,
    triple_inverse,
    xi_k_generic,
    xi_s_counts,
    xi_s_generic,
)
from steinberg_rs.tableau import Tableau

SLOW = os.environ.get("STEINBERG_SLOW") == "1"


def tau(*word: int) -> PartialPermutation:
    return PartialPermutation.from_word(word)


def shapes(a, b):
    return Partition(tuple(a)), Partition(tuple(b))


class TestPhi(unittest.TestCase):
    def test_full_rank(self):
        self.assertEqual(phi(tau(1, 2, 3)), shapes((3,), (3,)))
        self.assertEqual(phi(tau(3, 2, 1)), shapes((1, 1, 1), (1, 1, 1)))

    def test_partial(self):
        self.assertEqual(phi(tau(0, 1, 2)), shapes((3,), (3,)))
        self.assertEqual(phi(tau(1, 2, 0)), shapes((3,), (2, 1)))
        self.assertEqual(phi(tau(0, 2, 3)), shapes((2, 1), (3,)))
        self.assertEqual(phi(tau(0, 0, 0)), shapes((1, 1, 1), (1, 1, 1)))

    def test_empty(self):
        self.assertEqual(phi(PartialPermutation(0, ())), shapes((), ()))

    def test_agrees_with_triple_shapes(self):
        for n in range(5):
            for t in enumerate_partial_permutations(n):
                self.assertEqual(phi(t), triple(t).shapes, str(t))
                self.assertEqual(xi_k_generic(t), phi(t))


class TestTriple(unittest.TestCase):
    def test_example(self):
        t = triple(tau(0, 1, 2))
        self.assertEqual(t.T1, Tableau(((1, 2, 3),)))
        self.assertEqual(t.T2, Tableau(((1, 2, 3),)))
        self.assertEqual(t.nu, Partition((2,)))

    def test_inverse_example(self):
        t = Triple(T1=Tableau(((1, 2, 3),)), T2=Tableau(((1, 3), (2,))), nu=Partition((2,)))
        self.assertEqual(triple_inverse(t), tau(1, 0, 2))

    def test_zero(self):
        t = triple(tau(0, 0, 0))
        self.assertEqual(t.T1, Tableau(((1,), (2,), (3,))))
        self.assertEqual(t.T2, t.T1)
        self.assertEqual(t.nu, Partition(()))

    def test_rejects_non_strip(self):
        with self.assertRaises(DomainError):
            Triple(T1=Tableau(((1, 2, 3),)), T2=Tableau(((1, 2, 3),)), nu=Partition((1,)))

    def test_rejects_non_standard(self):
        with self.assertRaises(DomainError):
            Triple(T1=Tableau(((1, 4),)), T2=Tableau(((1, 2),)), nu=Partition((1,)))

    def test_round_trip(self):
        for n in range(5):
            for t in enumerate_partial_permutations(n):
                self.assertEqual(triple_inverse(triple(t)), t)

    def test_bijective_onto_valid_triples(self):
        for n in range(4):
            image = {triple(t) for t in enumerate_partial_permutations(n)}
            self.assertEqual(len(image), partial_permutation_count(n))
            everything = set()
            for lam in partitions_of(n):
                for mu in partitions_of(n):
                    everything.update(fiber_enumeration(lam, mu, n))
            self.assertEqual(image, everything)

    def test_fiber_enumeration_rejects_wrong_size(self):
        with self.assertRaises(DomainError):
            list(fiber_enumeration(Partition((2,)), Partition((1,)), 2))


class TestTriangle(unittest.TestCase):
    def test_example(self):
        skew = triangle(
            Tableau(((1, 3), (4, 6), (5,))),
            Tableau(((2, 4), (3, 6), (7,))),
            [2, 7],
            [1, 5],
            7,
        )
        self.assertEqual(skew.outer, Partition((4, 2, 2, 1)))
        self.assertEqual(skew.inner, Partition((1, 1)))
        self.assertEqual(skew.as_rows_with_gaps(), [[None, 1, 2, 7], [None, 3], [4, 6], [5]])

    def test_single_row(self):
        for n in range(2, 7):
            skew = triangle(
                Tableau((tuple(range(1, n)),)),
                Tableau((tuple(range(2, n + 1)),)),
                [n],
                [1],
                n,
            )
            self.assertEqual(skew.as_rows_with_gaps(), [[None] + list(range(1, n + 1))])

    def test_no_kernel(self):
        t = Tableau(((1, 3), (2,)))
        skew = triangle(t, t, [], [], 3)
        self.assertEqual(skew.inner, Partition(()))
        self.assertEqual(skew.rows, t.rows)

    def test_rejects_bad_input(self):
        t = Tableau(((1, 2),))
        with self.assertRaises(DomainError):
            triangle(t, Tableau(((1,), (2,))), [3], [3], 3)
        with self.assertRaises(DomainError):
            triangle(t, t, [3], [], 3)
        with self.assertRaises(DomainError):
            triangle(t, t, [2], [3], 3)

    def test_two_constructions_agree(self):
        for n in range(5):
            for t in enumerate_partial_permutations(n):
                self.assertEqual(triangle_for(t), triangle_by_erasure(t), str(t))

    @unittest.skipUnless(SLOW, "set STEINBERG_SLOW=1 for the n = 5 sweep")
    def test_two_constructions_agree_n5(self):
        for t in enumerate_partial_permutations(5):
            self.assertEqual(triangle_for(t), triangle_by_erasure(t), str(t))


class TestXiS(unittest.TestCase):
    def test_counts_example(self):
        self.assertEqual(xi_s_counts(tau(0, 1, 2)), ([0, 2, 2, 3], [2, 2, 3, 3]))

    def test_examples(self):
        cases = {
            (1, 2, 3): ["+-+", "-+-"],
            (1, 3, 2): ["+-", "-+", "+", "-"],
            (3, 2, 1): ["+", "+", "+", "-", "-", "-"],
            (0, 1, 2): ["-+-+", "-+"],
            (1, 2, 0): ["+-+", "-+", "-"],
            (2, 0, 1): ["-+", "-+", "+", "-"],
            (0, 0, 0): ["-+", "-+", "-+"],
        }
        for word, expected in cases.items():
            self.assertEqual(xi_s_generic(tau(*word)).to_strings(), expected, word)

    def test_permutations_give_doubled_shapes(self):
        for n in range(1, 5):
            for t in enumerate_partial_permutations(n):
                if not t.is_permutation():
                    continue
                self.assertEqual(xi_s_generic(t), duplicate_signed(phi(t)[0]), str(t))

    def test_signature(self):
        for n in range(5):
            for t in enumerate_partial_permutations(n):
                d = xi_s_generic(t)
                self.assertIsInstance(d, SignedYoungDiagram)
                self.assertEqual(d.n, n)


class TestFibers(unittest.TestCase):
    def test_formula_examples(self):
        self.assertEqual(fiber_count_formula(*shapes((2, 1), (2, 1))), 16)
        self.assertEqual(fiber_count_formula(*shapes((3,), (3,))), 2)
        self.assertEqual(fiber_count_formula(*shapes((3,), (1, 1, 1))), 0)

    def test_strip_bases(self):
        self.assertEqual(
            strip_bases(*shapes((2, 1), (2, 1))),
            [Partition((2, 1)), Partition((1, 1)), Partition((2,)), Partition((1,))],
        )

    def test_counts_match_formula(self):
        for n in range(6):
            fibers = phi_fibers(n)
            for lam in partitions_of(n):
                for mu in partitions_of(n):
                    self.assertEqual(fibers.get((lam, mu), 0), fiber_count_formula(lam, mu))
            self.assertEqual(sum(fibers.values()), partial_permutation_count(n))


if __name__ == "__main__":
    unittest.main()
