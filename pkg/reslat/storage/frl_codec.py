"""The line-oriented ``frl 1`` algebra format.

Layout::

    frl 1
    size <n>
    unit <i>
    bot <i|none>
    top <i|none>
    names <label> ... (optional)
    le
    <n lines of n characters 0/1>
    mul
    <n lines of n indices>
    ldiv (optional, same shape as mul)
    rdiv (optional)
    end

Blank lines are ignored. Indices are authoritative; names are labels.
"""
import logging
from typing import List, Optional, Tuple

from reslat.exceptions import FrlSyntaxError
from reslat.models import FinRL, Table

from .base import BaseCodec, algebra_from_tables

logger = logging.getLogger(__name__)


class _Reader:
    """Cursor over the non-blank lines of a document."""

    def __init__(self, text: str):
        self.lines: List[Tuple[int, str]] = [
            (number, line.rstrip()) for number, line in enumerate(text.splitlines(), start=1) if line.strip()
        ]
        self.pos = 0

    def peek(self) -> Optional[str]:
        return self.lines[self.pos][1] if self.pos < len(self.lines) else None

    def next(self, expected: str) -> Tuple[int, str]:
        if self.pos >= len(self.lines):
            last = self.lines[-1][0] if self.lines else 0
            raise FrlSyntaxError("unexpected end of document", last + 1, 1, expected)
        self.pos += 1
        return self.lines[self.pos - 1]

    def keyword(self, word: str) -> List[str]:
        """Consume ``word arg…`` and return the arguments."""
        number, line = self.next(word)
        tokens = line.split()
        if tokens[0] != word:
            raise FrlSyntaxError(f"found {tokens[0]!r}", number, _column(line, 0), word)
        return tokens[1:]


def _column(line: str, token: int) -> int:
    """1-based column of the token-th whitespace-separated token."""
    col, seen, inside = 0, -1, False
    for col, ch in enumerate(line):
        if not ch.isspace() and not inside:
            seen += 1
            if seen == token:
                return col + 1
        inside = not ch.isspace()
    return len(line) + 1


def _int(token: str, number: int, line: str, position: int, expected: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise FrlSyntaxError(f"{token!r} is not an integer", number, _column(line, position), expected) from None


def _single(reader: _Reader, word: str, allow_none: bool = False) -> Optional[int]:
    number = reader.lines[reader.pos][0] if reader.pos < len(reader.lines) else 0
    args = reader.keyword(word)
    line = reader.lines[reader.pos - 1][1]
    if len(args) != 1:
        raise FrlSyntaxError(f"{word} takes one value", number, _column(line, 1), "a single value")
    if allow_none and args[0] == "none":
        return None
    return _int(args[0], number, line, 1, "an integer" + (" or none" if allow_none else ""))


def _check_index(value: int, n: int, number: int, line: str, position: int) -> int:
    if not 0 <= value < n:
        raise FrlSyntaxError(f"index {value} is outside the carrier", number, _column(line, position), f"0..{n - 1}")
    return value


def _read_le(reader: _Reader, n: int) -> List[List[bool]]:
    rows = []
    for _ in range(n):
        number, line = reader.next("a row of 0/1 characters")
        row = line.strip()
        if len(row) != n:
            raise FrlSyntaxError(f"row has {len(row)} characters", number, 1, f"{n} characters")
        for i, ch in enumerate(row):
            if ch not in "01":
                raise FrlSyntaxError(f"character {ch!r}", number, line.index(row) + i + 1, "0 or 1")
        rows.append([ch == "1" for ch in row])
    return rows


def _read_table(reader: _Reader, n: int) -> Table:
    rows = []
    for _ in range(n):
        number, line = reader.next(f"a row of {n} indices")
        tokens = line.split()
        if len(tokens) != n:
            raise FrlSyntaxError(f"row has {len(tokens)} entries", number, _column(line, min(len(tokens), n)), f"{n} entries")
        rows.append(
            tuple(_check_index(_int(t, number, line, i, "an index"), n, number, line, i) for i, t in enumerate(tokens))
        )
    return tuple(rows)


class FrlCodec(BaseCodec[FinRL]):
    """Codec for the ``frl 1`` text format."""

    def parse(self, text: str) -> FinRL:
        reader = _Reader(text)
        number, line = reader.next("frl 1")
        if line.split() != ["frl", "1"]:
            raise FrlSyntaxError("bad header", number, 1, "frl 1")

        number = reader.lines[reader.pos][0] if reader.pos < len(reader.lines) else number + 1
        n = _single(reader, "size")
        if n < 1:
            raise FrlSyntaxError("size must be positive", number, 6, "a positive integer")
        constants = {}
        for word in ("unit", "bot", "top"):
            number = reader.lines[reader.pos][0] if reader.pos < len(reader.lines) else number + 1
            value = _single(reader, word, allow_none=word != "unit")
            if value is not None:
                _check_index(value, n, number, reader.lines[reader.pos - 1][1], 1)
            constants[word] = value

        names = None
        if reader.peek() is not None and reader.peek().split()[0] == "names":
            number, line = reader.lines[reader.pos]
            names = reader.keyword("names")
            if len(names) != n:
                raise FrlSyntaxError(f"{len(names)} names given", number, 1, f"{n} names")

        reader.keyword("le")
        le = _read_le(reader, n)
        reader.keyword("mul")
        mul = _read_table(reader, n)
        divisions = {}
        for word in ("ldiv", "rdiv"):
            if reader.peek() is not None and reader.peek().split()[0] == word:
                reader.keyword(word)
                divisions[word] = _read_table(reader, n)
        reader.keyword("end")
        if reader.peek() is not None:
            number, line = reader.lines[reader.pos]
            raise FrlSyntaxError("content after end", number, 1, "end of document")

        return algebra_from_tables(
            le,
            mul,
            constants["unit"],
            constants["bot"],
            constants["top"],
            names=names,
            ldiv=divisions.get("ldiv"),
            rdiv=divisions.get("rdiv"),
        )

    def render(self, value: FinRL) -> str:
        lines = [
            "frl 1",
            f"size {value.size}",
            f"unit {value.unit}",
            f"bot {'none' if value.bot is None else value.bot}",
            f"top {'none' if value.top is None else value.top}",
        ]
        if value.names is not None:
            lines.append("names " + " ".join(value.names))
        lines.append("le")
        lines += ["".join("1" if v else "0" for v in row) for row in value.leq]
        for name in ("mul", "ldiv", "rdiv"):
            lines.append(name)
            lines += [" ".join(str(v) for v in row) for row in getattr(value, name)]
        lines.append("end")
        return "\n".join(lines) + "\n"
