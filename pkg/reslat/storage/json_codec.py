"""JSON mirror of the ``frl 1`` format."""
import json
import logging
from typing import Any, Dict, List

from reslat.exceptions import FrlSyntaxError
from reslat.models import FinRL

from .base import BaseCodec, algebra_from_tables

logger = logging.getLogger(__name__)

_REQUIRED = ("size", "unit", "bot", "top", "le", "mul")


def _table(doc: Dict[str, Any], key: str, n: int):
    rows = doc.get(key)
    if rows is None:
        return None
    if not isinstance(rows, list) or len(rows) != n:
        raise FrlSyntaxError(f"{key} must list {n} rows", 1, 1, f"{n} rows")
    table = []
    for row in rows:
        if not isinstance(row, list) or len(row) != n or not all(isinstance(v, int) and 0 <= v < n for v in row):
            raise FrlSyntaxError(f"{key} row {row!r} is malformed", 1, 1, f"{n} indices in 0..{n - 1}")
        table.append(tuple(row))
    return tuple(table)


def _order(rows: List[str], n: int) -> List[List[bool]]:
    if not isinstance(rows, list) or len(rows) != n:
        raise FrlSyntaxError(f"le must list {n} rows", 1, 1, f"{n} rows")
    matrix = []
    for row in rows:
        if not isinstance(row, str) or len(row) != n or set(row) - {"0", "1"}:
            raise FrlSyntaxError(f"le row {row!r} is malformed", 1, 1, f"{n} characters 0/1")
        matrix.append([ch == "1" for ch in row])
    return matrix


def _index(doc: Dict[str, Any], key: str, n: int, nullable: bool):
    value = doc[key]
    if value is None and nullable:
        return None
    if not isinstance(value, int) or isinstance(value, bool) or not 0 <= value < n:
        raise FrlSyntaxError(f"{key}={value!r} is not an index", 1, 1, f"0..{n - 1}")
    return value


class JsonCodec(BaseCodec[FinRL]):
    """Codec for the JSON object produced by ``FinRL.to_dict``."""

    def parse(self, text: str) -> FinRL:
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as e:
            raise FrlSyntaxError(e.msg, e.lineno, e.colno, "valid JSON") from e
        if not isinstance(doc, dict):
            raise FrlSyntaxError("document is not an object", 1, 1, "a JSON object")
        if doc.get("format", "frl") != "frl" or doc.get("version", 1) != 1:
            raise FrlSyntaxError("unsupported format or version", 1, 1, "format frl, version 1")
        missing = [key for key in _REQUIRED if key not in doc]
        if missing:
            raise FrlSyntaxError(f"missing keys: {', '.join(missing)}", 1, 1, ", ".join(missing))

        n = doc["size"]
        if not isinstance(n, int) or n < 1:
            raise FrlSyntaxError(f"size={n!r} is not positive", 1, 1, "a positive integer")
        names = doc.get("names")
        if names is not None and (not isinstance(names, list) or len(names) != n):
            raise FrlSyntaxError("names must list one label per element", 1, 1, f"{n} names")

        return algebra_from_tables(
            _order(doc["le"], n),
            _table(doc, "mul", n),
            _index(doc, "unit", n, nullable=False),
            _index(doc, "bot", n, nullable=True),
            _index(doc, "top", n, nullable=True),
            names=names,
            ldiv=_table(doc, "ldiv", n),
            rdiv=_table(doc, "rdiv", n),
        )

    def render(self, value: FinRL) -> str:
        return json.dumps(value.to_dict(), indent=2) + "\n"
