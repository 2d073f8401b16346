from __future__ import annotations

import json
import re
from typing import Any, List, Type, TypeVar

from pydantic import BaseModel

from .partial_perm import PartialPermutation

ModelT = TypeVar("ModelT", bound=BaseModel)


def parse_word(value: str) -> List[int]:
    """Parse a word such as "0,1,2" or "3, 0, 1"; 0 marks a kernel position."""

    raw = [v.strip() for v in value.split(",") if v.strip()]
    if not raw:
        raise ValueError("word is empty")

    out: List[int] = []
    for token in raw:
        if not re.fullmatch(r"\d+", token):
            raise ValueError(f"invalid word entry: {token!r}")
        out.append(int(token))
    return out


def parse_partial_permutation(value: str) -> PartialPermutation:
    return PartialPermutation.from_word(parse_word(value))


def parse_partition(value: str) -> List[int]:
    """Parse "2,1" or "(2,1)" into row lengths; "()" or "" is the empty partition."""

    text = value.strip()
    if text.startswith("(") and text.endswith(")"):
        text = text[1:-1]
    raw = [v.strip() for v in text.split(",") if v.strip()]
    out: List[int] = []
    for token in raw:
        if not re.fullmatch(r"\d+", token):
            raise ValueError(f"invalid partition part: {token!r}")
        out.append(int(token))
    return out


def parse_json_payload(value: str, model: Type[ModelT]) -> ModelT:
    """Validate a JSON document against `model`; "@path" reads the document from a file."""

    text = value
    if value.startswith("@"):
        with open(value[1:], encoding="utf-8") as fh:
            text = fh.read()
    try:
        data: Any = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"invalid JSON payload: {exc}") from None
    return model.model_validate(data)
