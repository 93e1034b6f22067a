"""Finite monoid value types."""
from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from .algebra import Table


def _check_table(rows: Table, n: int) -> None:
    if len(rows) != n or any(len(row) != n for row in rows):
        raise ValueError(f"mul must be a {n}x{n} table")
    for row in rows:
        for value in row:
            if not 0 <= value < n:
                raise ValueError(f"mul entry {value} is outside the carrier 0..{n - 1}")


class FiniteMonoid(BaseModel):
    """Monoid given by its Cayley table, optionally with an absorbing zero.

    The zero of a ⊤-cancellative monoid becomes the top of R_{A,B}.
    """

    model_config = ConfigDict(frozen=True)

    size: int = Field(..., ge=1)
    mul: Table
    unit: int
    zero: Optional[int] = None
    names: Optional[Tuple[str, ...]] = None

    @model_validator(mode="after")
    def check_shape(self) -> "FiniteMonoid":
        _check_table(self.mul, self.size)
        for name in ("unit", "zero"):
            value = getattr(self, name)
            if value is not None and not 0 <= value < self.size:
                raise ValueError(f"{name}={value} is outside the carrier")
        if self.names is not None and len(self.names) != self.size:
            raise ValueError(f"names must have {self.size} entries")
        return self

    def label(self, x: int) -> str:
        return self.names[x] if self.names is not None else str(x)

    @property
    def nonzero(self) -> List[int]:
        """Elements other than the zero, in index order."""
        return [x for x in range(self.size) if x != self.zero]

    def inverse(self, x: int) -> Optional[int]:
        for y in range(self.size):
            if self.mul[x][y] == self.unit and self.mul[y][x] == self.unit:
                return y
        return None


class ChainMonoid(BaseModel):
    """Totally ordered monoid with possibly partial divisions.

    ``rank[x]`` is the position of x in the chain, 0 being the least
    element. Divisions return None when the solution set is empty; order
    preservation is checked by ``cocycle.chain_monoid_of``.
    """

    model_config = ConfigDict(frozen=True)

    size: int = Field(..., ge=1)
    rank: Tuple[int, ...]
    mul: Table
    unit: int
    names: Optional[Tuple[str, ...]] = None

    @model_validator(mode="after")
    def check_shape(self) -> "ChainMonoid":
        _check_table(self.mul, self.size)
        if sorted(self.rank) != list(range(self.size)):
            raise ValueError("rank must be a permutation of the carrier")
        if not 0 <= self.unit < self.size:
            raise ValueError(f"unit={self.unit} is outside the carrier")
        if self.names is not None and len(self.names) != self.size:
            raise ValueError(f"names must have {self.size} entries")
        return self

    def le(self, x: int, y: int) -> bool:
        return self.rank[x] <= self.rank[y]

    def ascending(self) -> List[int]:
        """Carrier listed from the least to the greatest element."""
        return sorted(range(self.size), key=lambda x: self.rank[x])

    def label(self, x: int) -> str:
        return self.names[x] if self.names is not None else str(x)

    def ldiv(self, x: int, z: int) -> Optional[int]:
        """max{y : xy ≤ z}, or None when no y qualifies."""
        best = None
        for y in self.ascending():
            if self.le(self.mul[x][y], z):
                best = y
        return best

    def rdiv(self, z: int, x: int) -> Optional[int]:
        """max{y : yx ≤ z}, or None when no y qualifies."""
        best = None
        for y in self.ascending():
            if self.le(self.mul[y][x], z):
                best = y
        return best

    def inverse(self, x: int) -> Optional[int]:
        for y in range(self.size):
            if self.mul[x][y] == self.unit and self.mul[y][x] == self.unit:
                return y
        return None

    def invertibles(self) -> List[int]:
        return [x for x in range(self.size) if self.inverse(x) is not None]
