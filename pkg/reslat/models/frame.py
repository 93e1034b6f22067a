"""Residuated frames and their Galois algebras.

Subsets of W are stored as Python int bitsets: bit i stands for the i-th
element of ``Frame.carrier`` (ascending source index).
"""
from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict

from .algebra import FinRL
from .analysis import IdentitySpec
from .enums import Operation


class Frame(BaseModel):
    """The frame (W, W′, N) built from an algebra and a finite subset B.

    ``relation[j]`` is the bitset {w′_j}^◁ = {x ∈ W : x N w′_j} of the
    j-th triple of ``triples``.
    """

    model_config = ConfigDict(frozen=True)

    algebra: FinRL
    generators: Tuple[int, ...]
    carrier: Tuple[int, ...]
    triples: Tuple[Tuple[int, int, int], ...]
    relation: Tuple[int, ...]

    @property
    def width(self) -> int:
        return len(self.carrier)

    @property
    def full(self) -> int:
        return (1 << len(self.carrier)) - 1

    def position(self, x: int) -> int:
        """Bit position of a source element of W."""
        return self.carrier.index(x)

    def bits_of(self, elements) -> int:
        bits = 0
        for x in elements:
            bits |= 1 << self.position(x)
        return bits

    def members(self, bits: int) -> Tuple[int, ...]:
        """Source elements of a bitset, ascending."""
        return tuple(x for i, x in enumerate(self.carrier) if bits >> i & 1)


class GaloisAlgebra(BaseModel):
    """W⁺: the γ_N-closed subsets of W with the induced operations.

    Element i of ``algebra`` is ``closed_sets[i]``.
    """

    model_config = ConfigDict(frozen=True)

    frame: Frame
    closed_sets: Tuple[int, ...]
    algebra: FinRL

    def index_of(self, bits: int) -> int:
        return self.closed_sets.index(bits)

    def members(self, i: int) -> Tuple[int, ...]:
        return self.frame.members(self.closed_sets[i])


class EmbeddingInstance(BaseModel):
    """One defined partial operation of B and whether its image agrees."""

    operation: Operation
    x: int
    y: int
    value: int
    preserved: bool

    def to_dict(self) -> Dict[str, Any]:
        return {
            "op": self.operation.value,
            "x": self.x,
            "y": self.y,
            "value": self.value,
            "preserved": self.preserved,
        }


class EmbeddingReport(BaseModel):
    """Outcome of mapping B into W⁺ by b ↦ γ({b})."""

    subset: Tuple[int, ...]
    mapping: Dict[int, int]
    injective: bool
    instances: List[EmbeddingInstance]
    galois_size: int

    @property
    def ok(self) -> bool:
        return self.injective and all(inst.preserved for inst in self.instances)

    def first_failure(self) -> Optional[EmbeddingInstance]:
        for inst in self.instances:
            if not inst.preserved:
                return inst
        return None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "subset": list(self.subset),
            "galois_size": self.galois_size,
            "mapping": {str(b): c for b, c in sorted(self.mapping.items())},
            "injective": self.injective,
            "instances_checked": len(self.instances),
            "ok": self.ok,
        }


class PreservationEntry(BaseModel):
    """An identity and its status in the source algebra and in W⁺."""

    identity: IdentitySpec
    holds_in_source: bool
    holds_in_galois: Optional[bool] = None
    witness: Optional[Tuple[int, ...]] = None

    @property
    def preserved(self) -> bool:
        """Vacuously true when the source fails the identity."""
        return not self.holds_in_source or bool(self.holds_in_galois)


class PreservationReport(BaseModel):
    entries: List[PreservationEntry]

    @property
    def ok(self) -> bool:
        return all(entry.preserved for entry in self.entries)
