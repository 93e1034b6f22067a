"""Finite residuated lattice data models."""
from typing import Dict, FrozenSet, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from .enums import Operation

Table = Tuple[Tuple[int, ...], ...]
Matrix = Tuple[Tuple[bool, ...], ...]


def _check_square(name: str, rows, n: int) -> None:
    if len(rows) != n or any(len(row) != n for row in rows):
        raise ValueError(f"{name} must be a {n}x{n} table")


def _check_entries(name: str, rows, n: int) -> None:
    for row in rows:
        for value in row:
            if not 0 <= value < n:
                raise ValueError(f"{name} entry {value} is outside the carrier 0..{n - 1}")


class LatticeTables(BaseModel):
    """Order matrix with its meet/join tables and bounds."""

    model_config = ConfigDict(frozen=True)

    leq: Matrix
    meet: Table
    join: Table
    bot: Optional[int] = None
    top: Optional[int] = None

    @property
    def size(self) -> int:
        return len(self.leq)


class FinRL(BaseModel):
    """Finite residuated lattice on the carrier 0..size-1.

    Tables are indexed by their arguments in written order: ``ldiv[x][z]``
    is x\\z and ``rdiv[z][x]`` is z/x. Shapes are validated here; the
    residuated-lattice laws are checked by ``finalg.check_residuated_lattice``.
    """

    model_config = ConfigDict(frozen=True)

    size: int = Field(..., ge=1)
    leq: Matrix
    meet: Table
    join: Table
    mul: Table
    ldiv: Table
    rdiv: Table
    unit: int
    bot: Optional[int] = None
    top: Optional[int] = None
    names: Optional[Tuple[str, ...]] = None

    @model_validator(mode="after")
    def check_shapes(self) -> "FinRL":
        """Validate table shapes, entries and constants."""
        n = self.size
        _check_square("leq", self.leq, n)
        for name in ("meet", "join", "mul", "ldiv", "rdiv"):
            rows = getattr(self, name)
            _check_square(name, rows, n)
            _check_entries(name, rows, n)
        for name in ("unit", "bot", "top"):
            value = getattr(self, name)
            if value is not None and not 0 <= value < n:
                raise ValueError(f"{name}={value} is outside the carrier 0..{n - 1}")
        if self.names is not None:
            if len(self.names) != n:
                raise ValueError(f"names must have {n} entries")
            for label in self.names:
                if not label or any(ch.isspace() for ch in label):
                    raise ValueError(f"name {label!r} must be non-empty and whitespace-free")
        return self

    @property
    def elements(self) -> range:
        return range(self.size)

    @property
    def is_bounded(self) -> bool:
        return self.bot is not None and self.top is not None

    def le(self, x: int, y: int) -> bool:
        return self.leq[x][y]

    def table(self, operation: Operation) -> Table:
        """Return the table of a binary operation."""
        return getattr(self, Operation(operation).value)

    def label(self, x: int) -> str:
        """Display label of an element (its index when unnamed)."""
        if self.names is None:
            return str(x)
        return self.names[x]

    def labels(self, xs) -> List[str]:
        return [self.label(x) for x in xs]

    def to_dict(self) -> Dict:
        """Mirror of the text format, with fixed key order."""
        return {
            "format": "frl",
            "version": 1,
            "size": self.size,
            "unit": self.unit,
            "bot": self.bot,
            "top": self.top,
            "names": list(self.names) if self.names is not None else None,
            "le": ["".join("1" if v else "0" for v in row) for row in self.leq],
            "mul": [list(row) for row in self.mul],
            "ldiv": [list(row) for row in self.ldiv],
            "rdiv": [list(row) for row in self.rdiv],
        }


class PartialAlgebra(BaseModel):
    """Partial subalgebra of a FinRL induced by a subset of its carrier.

    An operation is defined on a pair of subset elements exactly when the
    parent's result lies in the subset.
    """

    model_config = ConfigDict(frozen=True)

    parent: FinRL
    subset: FrozenSet[int]

    @model_validator(mode="after")
    def check_subset(self) -> "PartialAlgebra":
        """Ensure the subset lies in the parent's carrier."""
        outside = [x for x in self.subset if not 0 <= x < self.parent.size]
        if outside:
            raise ValueError(f"subset elements {sorted(outside)} are outside the carrier")
        return self

    @property
    def members(self) -> Tuple[int, ...]:
        return tuple(sorted(self.subset))

    def op(self, operation: Operation, x: int, y: int) -> Optional[int]:
        """Result of ``operation`` on (x, y), or None when undefined."""
        value = self.parent.table(operation)[x][y]
        return value if value in self.subset else None

    def defined_instances(self, operation: Operation) -> List[Tuple[int, int, int]]:
        """All (x, y, value) triples where the operation is defined."""
        instances = []
        for x in self.members:
            for y in self.members:
                value = self.op(operation, x, y)
                if value is not None:
                    instances.append((x, y, value))
        return instances

    def is_total(self, operation: Operation) -> bool:
        return len(self.defined_instances(operation)) == len(self.subset) ** 2
