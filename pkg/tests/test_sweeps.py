import os
import unittest

from steinberg_rs.config import SteinbergConfig
from steinberg_rs.sweeps import VERIFY_TARGETS, verify, verify_bijection, verify_counting, verify_phi

SLOW = os.environ.get("STEINBERG_SLOW") == "1"


class TestVerify(unittest.TestCase):
    def test_all_targets_small(self):
        for n in range(4):
            results = verify(n, "all", SteinbergConfig())
            self.assertEqual([r.target for r in results], list(VERIFY_TARGETS))
            for r in results:
                self.assertTrue(r.ok, (r.target, n, r.mismatches))

    def test_checked_counts(self):
        self.assertEqual(verify_bijection(3).checked, 34)
        self.assertEqual(verify_counting(3).checked, 9)

    def test_phi_against_oracle_n4(self):
        result = verify_phi(4, SteinbergConfig())
        self.assertEqual(result.checked, 209)
        self.assertTrue(result.ok, result.mismatches[:5])

    def test_unknown_target(self):
        with self.assertRaises(ValueError):
            verify(2, "everything")

    @unittest.skipUnless(SLOW, "set STEINBERG_SLOW=1 for the n = 4 and 5 sweeps")
    def test_all_targets_larger(self):
        for n in (4, 5):
            for r in verify(n, "all", SteinbergConfig()):
                self.assertTrue(r.ok, (r.target, n, r.mismatches[:5]))

    @unittest.skipUnless(SLOW, "set STEINBERG_SLOW=1 for the n = 6 combinatorial sweeps")
    def test_combinatorial_targets_n6(self):
        for what in ("bijection", "counting", "triangle"):
            for r in verify(6, what, SteinbergConfig()):
                self.assertTrue(r.ok, (r.target, r.mismatches[:5]))


if __name__ == "__main__":
    unittest.main()
