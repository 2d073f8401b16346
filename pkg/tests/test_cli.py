import io
import json
import unittest
from contextlib import redirect_stderr

from steinberg_rs.cli import EXIT_DOMAIN_ERROR, EXIT_OK, run


def invoke(*argv: str):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stderr(err):
        status = run(list(argv), out=out)
    return status, out.getvalue().strip(), err.getvalue()


class TestCli(unittest.TestCase):
    def test_phi_json(self):
        status, out, _ = invoke("phi", "1,2,3")
        self.assertEqual(status, EXIT_OK)
        self.assertEqual(json.loads(out), [[3], [3]])

    def test_phi_text(self):
        self.assertEqual(invoke("phi", "1,2,0", "--format", "text")[1], "(3),(2,1)")

    def test_format_before_subcommand(self):
        self.assertEqual(invoke("--format", "text", "xi-s", "0,1,2")[1], "-+-+/-+")

    def test_xi_s_json(self):
        self.assertEqual(invoke("xi-s", "0,1,2")[1], '["-+-+","-+"]')

    def test_xi_k(self):
        self.assertEqual(json.loads(invoke("xi-k", "0,0,0")[1]), [[1, 1, 1], [1, 1, 1]])

    def test_rs(self):
        self.assertEqual(json.loads(invoke("rs", "0,1,2")[1]), {"P": [[1, 2]], "Q": [[2, 3]]})

    def test_triple_text(self):
        self.assertEqual(invoke("triple", "1,2,0", "--format", "text")[1], "123, 12/3, (2)")

    def test_untriple(self):
        payload = '{"T1": [[1,2,3]], "T2": [[1,3],[2]], "nu": [2]}'
        self.assertEqual(json.loads(invoke("untriple", payload)[1]), {"n": 3, "word": [1, 0, 2]})

    def test_triangle(self):
        payload = '{"T1": [[1,2]], "T2": [[2,3]], "ells": [3], "ms": [1], "n": 3}'
        self.assertEqual(invoke("triangle", payload, "--format", "text")[1], "·123")

    def test_canon_matrix(self):
        out = invoke("canon-matrix", '{"matrix": [[1,1],[1,1]]}')[1]
        self.assertEqual(json.loads(out), {"n": 2, "word": [2, 0]})

    def test_canon_grass(self):
        out = invoke("canon-grass", '{"matrix": [[0,1,0],[0,0,1],[0,0,0],[1,0,0],[0,1,0],[0,0,1]]}', "--format", "text")[1]
        self.assertEqual(out, "(1,2,0;2,3,1)")

    def test_orbits(self):
        data = json.loads(invoke("orbits", "--n", "2")[1])
        self.assertEqual((data["count"], data["closed_count"]), (16, 16))

    def test_count_fibers(self):
        data = json.loads(invoke("count-fibers", "--n", "3", "--lambda", "2,1", "--mu", "(2,1)")[1])
        self.assertEqual(data["total"], 34)
        self.assertEqual(data["fibers"], [{"shapes": [[2, 1], [2, 1]], "count": 16, "formula": 16}])

    def test_count_fibers_needs_both_shapes(self):
        status, _, err = invoke("count-fibers", "--n", "3", "--lambda", "2,1")
        self.assertEqual(status, EXIT_DOMAIN_ERROR)
        self.assertIn("--mu", err)

    def test_verify(self):
        status, out, _ = invoke("verify", "--n", "2", "--what", "counting", "--format", "text")
        self.assertEqual(status, EXIT_OK)
        self.assertEqual(out, "counting n=2: 4 checked, ok")

    def test_image_components(self):
        data = json.loads(invoke("image-components", "--n", "1")[1])
        self.assertEqual(data["maximal"], [["+-"], ["-+"]])
        self.assertTrue(data["checks"]["maximal_matches_components"])

    def test_table_markdown(self):
        lines = invoke("table", "--n", "2", "--format", "markdown")[1].splitlines()
        self.assertEqual(len(lines), 2 + 7)

    def test_invalid_word(self):
        status, out, err = invoke("phi", "1,1,2")
        self.assertEqual(status, EXIT_DOMAIN_ERROR)
        self.assertEqual(out, "")
        self.assertTrue(err.startswith("error:"))

    def test_invalid_payload(self):
        status, _, err = invoke("untriple", '{"T1": [[1]]}')
        self.assertEqual(status, EXIT_DOMAIN_ERROR)
        self.assertIn("invalid payload", err)

    def test_not_a_triple(self):
        status, _, _ = invoke("untriple", '{"T1": [[1,2,3]], "T2": [[1,2,3]], "nu": [1]}')
        self.assertEqual(status, EXIT_DOMAIN_ERROR)

    def test_prime_flag(self):
        status, _, err = invoke("canon-matrix", '{"matrix": [[1]]}', "--prime", "15")
        self.assertEqual(status, EXIT_DOMAIN_ERROR)
        self.assertIn("prime", err)


if __name__ == "__main__":
    unittest.main()
