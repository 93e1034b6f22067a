"""Finitely generated abelian group signatures and downsets of them."""
from typing import Annotated, Any, Dict, Literal, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator

Partition = Tuple[int, ...]


def canonical_partition(parts) -> Partition:
    """Sort descending and drop zero parts."""
    values = [int(p) for p in parts]
    if any(p < 0 for p in values):
        raise ValueError("partition parts must be non-negative")
    return tuple(sorted((p for p in values if p > 0), reverse=True))


class GroupSig(BaseModel):
    """An element of 2 × I^⊕ω.

    ``torsion`` pairs a prime index n ≥ 1 (the n-th prime) with the
    partition of exponents of the p_n-primary part, sorted by index.
    Absent indices stand for the zero partition.
    """

    model_config = ConfigDict(frozen=True)

    rank_flag: int = Field(default=0, ge=0, le=1)
    torsion: Tuple[Tuple[int, Partition], ...] = ()

    @field_validator("torsion", mode="before")
    @classmethod
    def canonical_torsion(cls, v: Any) -> Tuple[Tuple[int, Partition], ...]:
        """Accept a mapping or pairs; store sorted, non-empty partitions."""
        items = v.items() if isinstance(v, dict) else v
        seen: Dict[int, Partition] = {}
        for index, parts in items:
            index = int(index)
            if index < 1:
                raise ValueError(f"prime index {index} must be at least 1")
            if index in seen:
                raise ValueError(f"prime index {index} is listed twice")
            seen[index] = canonical_partition(parts)
        return tuple((n, seen[n]) for n in sorted(seen) if seen[n])

    @classmethod
    def trivial(cls) -> "GroupSig":
        return cls()

    @classmethod
    def of(cls, rank_flag: int = 0, **partitions: Partition) -> "GroupSig":
        """Build from keyword partitions named ``p<index>``."""
        return cls(
            rank_flag=rank_flag,
            torsion={int(key[1:]): parts for key, parts in partitions.items()},
        )

    def partition(self, n: int) -> Partition:
        for index, parts in self.torsion:
            if index == n:
                return parts
        return ()

    @property
    def indices(self) -> Tuple[int, ...]:
        return tuple(index for index, _ in self.torsion)

    def with_rank(self, flag: int) -> "GroupSig":
        return GroupSig(rank_flag=flag, torsion=self.torsion)

    def with_partition(self, n: int, parts: Partition) -> "GroupSig":
        torsion = {index: p for index, p in self.torsion}
        torsion[n] = parts
        return GroupSig(rank_flag=self.rank_flag, torsion=torsion)


class Principal(BaseModel):
    """The downset ↓g."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["principal"] = "principal"
    sig: GroupSig


class ExpTower(BaseModel):
    """Union of ↓(base × Z_{p_n^k}) over all k ≥ 1."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["tower"] = "tower"
    base: GroupSig
    index: int = Field(..., ge=1)

    def member(self, k: int) -> GroupSig:
        """base with the part k added at the tower's prime."""
        return self.base.with_partition(self.index, self.base.partition(self.index) + (k,))


class PrimeFamily(BaseModel):
    """Union of ↓(base ∨ shape at p_n) over all prime indices n ≥ start_index."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["family"] = "family"
    shape: Partition
    start_index: int = Field(default=1, ge=1)
    base: GroupSig = Field(default_factory=GroupSig)

    @field_validator("shape", mode="before")
    @classmethod
    def non_empty_shape(cls, v: Any) -> Partition:
        shape = canonical_partition(v)
        if not shape:
            raise ValueError("family shape must be a non-empty partition")
        return shape


Component = Annotated[Union[Principal, ExpTower, PrimeFamily], Field(discriminator="kind")]


class DownsetDesc(BaseModel):
    """Finite union of representable components."""

    model_config = ConfigDict(frozen=True)

    components: Tuple[Component, ...] = ()

    @classmethod
    def of(cls, *components: Component) -> "DownsetDesc":
        return cls(components=components)


class PFDownset(BaseModel):
    """A downset of P × F given by its four fibres over F = {0 < 1, 2, 3}."""

    model_config = ConfigDict(frozen=True)

    d0: DownsetDesc
    d1: DownsetDesc
    d2: DownsetDesc
    d3: DownsetDesc

    @property
    def fibres(self) -> Tuple[DownsetDesc, ...]:
        return (self.d0, self.d1, self.d2, self.d3)


class ZClosureResult(BaseModel):
    """Z-closedness verdict with the first violating point.

    ``missing`` is violating ∨ (1; 0; …), the element that should have
    been in the downset.
    """

    model_config = ConfigDict(frozen=True)

    closed: bool
    violating: Optional[GroupSig] = None
    missing: Optional[GroupSig] = None

    def __bool__(self) -> bool:
        return self.closed
