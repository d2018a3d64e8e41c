"""Versioned JSON text documents for systems, strips, exchanges and matrices.

Documents are written with sorted keys and a fixed indent, and integers that
can grow (matrix entries, polynomial coefficients, rationals) are decimal
strings, so ``dumps(loads(text)) == text``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any

from .curveweb import CurveSystem
from .exactnum.matrix import IntMatrix
from .strips import IntervalExchange, StripModel


class DocumentError(ValueError):
    pass


def dumps(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


@dataclass(frozen=True)
class MatrixRecord:
    """An action matrix as read back from a document, with its labelling."""

    matrix: IntMatrix
    basis: tuple[str, ...] = ()
    word: Any = None  # the serialized word, kept verbatim
    word_text: str | None = None

    def to_document(self) -> dict:
        doc: dict[str, Any] = {"schema": "aytwist.matrix", "version": 1, "rows": self.matrix.to_json(), "basis": list(self.basis)}
        if self.word is not None:
            doc["word"] = self.word
            doc["word_text"] = self.word_text
        return doc


def matrix_document(m: IntMatrix, basis=(), word=None) -> dict:
    if word is None:
        return MatrixRecord(m, tuple(basis)).to_document()
    return MatrixRecord(m, tuple(basis), word.to_json(), str(word)).to_document()


def to_document(obj) -> dict:
    if isinstance(obj, CurveSystem):
        return obj.to_document()
    if isinstance(obj, (StripModel, IntervalExchange)):
        return obj.to_json()
    if isinstance(obj, MatrixRecord):
        return obj.to_document()
    if isinstance(obj, IntMatrix):
        return matrix_document(obj)
    raise DocumentError(f"no document form for {type(obj).__name__}")


def from_document(doc: dict):
    schema = doc.get("schema")
    if schema == "aytwist.curve-system":
        return CurveSystem.from_document(doc)
    if schema == "aytwist.family-instance":
        return CurveSystem.from_document(doc["system"])
    if schema == "aytwist.strip":
        return StripModel.from_json(doc)
    if schema == "aytwist.iet":
        return IntervalExchange.from_json(doc)
    if schema == "aytwist.matrix":
        if doc.get("version") != 1:
            raise DocumentError("unsupported matrix document version")
        return MatrixRecord(IntMatrix.from_json(doc["rows"]), tuple(doc.get("basis", ())), doc.get("word"), doc.get("word_text"))
    raise DocumentError(f"unknown schema {schema!r}")


def loads(text: str):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"not a JSON document: {exc}") from exc
    if not isinstance(doc, dict):
        raise DocumentError("document must be a JSON object")
    return from_document(doc)
