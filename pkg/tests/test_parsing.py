import json
import tempfile
import unittest
from pathlib import Path

from pydantic import ValidationError

from steinberg_rs.models import MatrixRequest, TripleModel
from steinberg_rs.parsing import parse_json_payload, parse_partial_permutation, parse_partition, parse_word


class TestParsing(unittest.TestCase):
    def test_parse_word_single(self):
        self.assertEqual(parse_word("3"), [3])

    def test_parse_word_csv(self):
        self.assertEqual(parse_word("0, 1,2"), [0, 1, 2])

    def test_parse_word_rejects_empty(self):
        with self.assertRaises(ValueError):
            parse_word("")

    def test_parse_word_rejects_non_numeric(self):
        with self.assertRaises(ValueError):
            parse_word("1,abc")

    def test_parse_word_rejects_negative(self):
        with self.assertRaises(ValueError):
            parse_word("1,-2")

    def test_parse_partial_permutation_validates(self):
        self.assertEqual(parse_partial_permutation("0,1,2").word, (0, 1, 2))
        with self.assertRaises(ValueError):
            parse_partial_permutation("1,1")

    def test_parse_partition(self):
        self.assertEqual(parse_partition("2,1"), [2, 1])
        self.assertEqual(parse_partition("(3)"), [3])
        self.assertEqual(parse_partition("()"), [])

    def test_parse_partition_rejects_garbage(self):
        with self.assertRaises(ValueError):
            parse_partition("2;1")


class TestJsonPayload(unittest.TestCase):
    def test_inline(self):
        req = parse_json_payload('{"matrix": [[1, 1], [1, 1]]}', MatrixRequest)
        self.assertEqual(req.matrix, [[1, 1], [1, 1]])

    def test_from_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "triple.json"
            path.write_text(json.dumps({"T1": [[1, 2, 3]], "T2": [[1, 3], [2]], "nu": [2]}), encoding="utf-8")
            req = parse_json_payload(f"@{path}", TripleModel)
        self.assertEqual(req.nu, [2])
        self.assertEqual(req.to_domain().T2.shape.parts, (2, 1))

    def test_invalid_json(self):
        with self.assertRaises(ValueError):
            parse_json_payload("{matrix", MatrixRequest)

    def test_extra_field_rejected(self):
        with self.assertRaises(ValidationError):
            parse_json_payload('{"matrix": [[1]], "prime": 5}', MatrixRequest)

    def test_missing_file(self):
        with self.assertRaises(OSError):
            parse_json_payload("@/nonexistent/payload.json", MatrixRequest)


if __name__ == "__main__":
    unittest.main()
