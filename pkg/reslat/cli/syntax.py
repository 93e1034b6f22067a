"""Textual syntax for group signatures and downsets.

Signatures::

    (m; p2:[2,1]; p3:[3,1,1])

with the rank flag m ∈ {0, 1} first and partitions tagged by the actual
prime. Downsets are s-expressions::

    (union C ...) | C
    C := (principal SIG) | (tower SIG pP) | (family [parts] pP [SIG])
"""
import logging
import re
from typing import List, Optional, Tuple

from pydantic import ValidationError

from reslat.exceptions import InvalidParameters, SignatureSyntaxError
from reslat.models import DownsetDesc, ExpTower, GroupSig, PrimeFamily, Principal
from reslat.services.signatures import prime_at, prime_index

logger = logging.getLogger(__name__)

_TOKEN = re.compile(r"\s*(?:([()\[\];:,])|(p\d+)|(\d+)|([A-Za-z]+)|(\S))")


class SyntaxParser:
    """Recursive-descent parser over one input string."""

    def __init__(self, text: str):
        self.text = text
        self.tokens: List[Tuple[str, str, int]] = []
        for match in _TOKEN.finditer(text):
            punct, prime, number, word, junk = match.groups()
            if junk is not None:
                raise self._error(f"unexpected character {junk!r}", match.start(5))
            if punct is not None:
                self.tokens.append(("punct", punct, match.start(1)))
            elif prime is not None:
                self.tokens.append(("prime", prime, match.start(2)))
            elif number is not None:
                self.tokens.append(("int", number, match.start(3)))
            elif word is not None:
                self.tokens.append(("word", word, match.start(4)))
        self.pos = 0

    def _error(self, message: str, offset: Optional[int] = None) -> SignatureSyntaxError:
        if offset is None:
            offset = self.tokens[self.pos][2] if self.pos < len(self.tokens) else len(self.text)
        return SignatureSyntaxError(f"column {offset + 1}: {message}", witness=(offset + 1,))

    def _peek(self, ahead: int = 0) -> Optional[Tuple[str, str, int]]:
        i = self.pos + ahead
        return self.tokens[i] if i < len(self.tokens) else None

    def _take(self, kind: str, value: Optional[str] = None) -> str:
        token = self._peek()
        if token is None or token[0] != kind or (value is not None and token[1] != value):
            found = "end of input" if token is None else repr(token[1])
            raise self._error(f"expected {value or kind}, found {found}")
        self.pos += 1
        return token[1]

    def _at(self, kind: str, value: Optional[str] = None) -> bool:
        token = self._peek()
        return token is not None and token[0] == kind and (value is None or token[1] == value)

    def finish(self) -> None:
        if self._peek() is not None:
            raise self._error("trailing input")

    def prime(self) -> int:
        """A ``pP`` tag, returned as a prime index."""
        offset = self._peek()[2] if self._peek() else len(self.text)
        tag = self._take("prime")
        try:
            return prime_index(int(tag[1:]))
        except InvalidParameters:
            raise self._error(f"{tag[1:]} is not a prime", offset) from None

    def parts(self) -> Tuple[int, ...]:
        self._take("punct", "[")
        values = [int(self._take("int"))]
        while self._at("punct", ","):
            self._take("punct", ",")
            values.append(int(self._take("int")))
        self._take("punct", "]")
        if any(v == 0 for v in values):
            raise self._error("partition parts must be positive")
        return tuple(values)

    def signature(self) -> GroupSig:
        self._take("punct", "(")
        flag = int(self._take("int"))
        if flag not in (0, 1):
            raise self._error(f"rank flag must be 0 or 1, got {flag}")
        torsion = {}
        while self._at("punct", ";"):
            self._take("punct", ";")
            if self._at("punct", ")"):
                break
            index = self.prime()
            if index in torsion:
                raise self._error(f"prime p{prime_at(index)} is listed twice")
            self._take("punct", ":")
            torsion[index] = self.parts()
        self._take("punct", ")")
        return GroupSig(rank_flag=flag, torsion=torsion)

    def component(self):
        self._take("punct", "(")
        word = self._take("word")
        if word == "principal":
            result = Principal(sig=self.signature())
        elif word == "tower":
            base = self.signature()
            result = ExpTower(base=base, index=self.prime())
        elif word == "family":
            shape = self.parts()
            start = self.prime()
            base = self.signature() if self._at("punct", "(") else GroupSig()
            result = PrimeFamily(shape=shape, start_index=start, base=base)
        else:
            raise self._error(f"unknown component {word!r}")
        self._take("punct", ")")
        return result

    def downset(self) -> DownsetDesc:
        if self._at("punct", "(") and self._peek(1) is not None and self._peek(1)[1] == "union":
            self._take("punct", "(")
            self._take("word", "union")
            components = []
            while self._at("punct", "("):
                components.append(self.component())
            self._take("punct", ")")
            return DownsetDesc(components=tuple(components))
        return DownsetDesc.of(self.component())


def parse_signature(text: str) -> GroupSig:
    parser = SyntaxParser(text)
    try:
        sig = parser.signature()
    except ValidationError as e:
        raise SignatureSyntaxError(f"invalid signature: {e.errors()[0]['msg']}") from e
    parser.finish()
    return sig


def parse_downset(text: str) -> DownsetDesc:
    parser = SyntaxParser(text)
    try:
        downset = parser.downset()
    except ValidationError as e:
        raise SignatureSyntaxError(f"invalid downset: {e.errors()[0]['msg']}") from e
    parser.finish()
    logger.debug(f"Parsed downset with {len(downset.components)} components")
    return downset


def format_signature(a: GroupSig) -> str:
    """Inverse of parse_signature."""
    items = [str(a.rank_flag)]
    items += [f"p{prime_at(n)}:[{','.join(str(p) for p in parts)}]" for n, parts in a.torsion]
    return "(" + "; ".join(items) + ")"
