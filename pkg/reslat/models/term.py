"""Terms over the residuated-lattice signature."""
from enum import Enum
from typing import FrozenSet, Optional, Tuple

from pydantic import BaseModel, ConfigDict, model_validator


class TermOp(str, Enum):
    """Node kinds of a term tree."""

    VAR = "var"
    ONE = "1"
    BOT = "bot"
    TOP = "top"
    MEET = "meet"
    JOIN = "join"
    MUL = "mul"
    LDIV = "ldiv"
    RDIV = "rdiv"


_ARITY = {
    TermOp.VAR: 0,
    TermOp.ONE: 0,
    TermOp.BOT: 0,
    TermOp.TOP: 0,
    TermOp.MEET: 2,
    TermOp.JOIN: 2,
    TermOp.MUL: 2,
    TermOp.LDIV: 2,
    TermOp.RDIV: 2,
}

_SYMBOL = {
    TermOp.MEET: "∧",
    TermOp.JOIN: "∨",
    TermOp.MUL: "·",
    TermOp.LDIV: "\\",
    TermOp.RDIV: "/",
}


class Term(BaseModel):
    """A term tree.

    ``LDIV`` nodes hold (x, z) for x\\z and ``RDIV`` nodes hold (z, x) for
    z/x, matching the argument order of the algebra tables.
    """

    model_config = ConfigDict(frozen=True)

    op: TermOp
    args: Tuple["Term", ...] = ()
    name: Optional[str] = None

    @model_validator(mode="after")
    def check_arity(self) -> "Term":
        """Validate arity and variable naming."""
        if len(self.args) != _ARITY[self.op]:
            raise ValueError(f"{self.op.value} takes {_ARITY[self.op]} arguments")
        if (self.op is TermOp.VAR) != (self.name is not None):
            raise ValueError("exactly the variable nodes carry a name")
        return self

    def __and__(self, other: "Term") -> "Term":
        return Term(op=TermOp.MEET, args=(self, other))

    def __or__(self, other: "Term") -> "Term":
        return Term(op=TermOp.JOIN, args=(self, other))

    def __mul__(self, other: "Term") -> "Term":
        return Term(op=TermOp.MUL, args=(self, other))

    def under(self, other: "Term") -> "Term":
        """self\\other."""
        return Term(op=TermOp.LDIV, args=(self, other))

    def over(self, other: "Term") -> "Term":
        """self/other."""
        return Term(op=TermOp.RDIV, args=(self, other))

    def variables(self) -> FrozenSet[str]:
        if self.op is TermOp.VAR:
            return frozenset({self.name})
        found: FrozenSet[str] = frozenset()
        for arg in self.args:
            found |= arg.variables()
        return found

    def __str__(self) -> str:
        if self.op is TermOp.VAR:
            return self.name
        if not self.args:
            return {TermOp.ONE: "1", TermOp.BOT: "⊥", TermOp.TOP: "⊤"}[self.op]
        left, right = self.args
        return f"({left} {_SYMBOL[self.op]} {right})"


Term.model_rebuild()


def var(name: str) -> Term:
    """Variable term."""
    return Term(op=TermOp.VAR, name=name)


ONE = Term(op=TermOp.ONE)
BOT = Term(op=TermOp.BOT)
TOP = Term(op=TermOp.TOP)


def power(t: Term, n: int) -> Term:
    """t multiplied by itself n times; the unit for n = 0."""
    result = ONE
    for i in range(n):
        result = t if i == 0 else result * t
    return result
