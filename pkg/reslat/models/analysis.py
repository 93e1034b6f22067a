"""Results of the decomposition and decision procedures."""
from typing import Any, Dict, FrozenSet, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, field_validator

from .algebra import FinRL
from .cocycle import CocycleData
from .enums import IdentityKind, ZKind
from .monoid import FiniteMonoid


class UZSplit(BaseModel):
    """Partition of the middle layer of an M_X algebra.

    U holds the elements with x⊤ = ⊤ and Z those with x⊤ = x.
    """

    model_config = ConfigDict(frozen=True)

    u: FrozenSet[int]
    z: FrozenSet[int]
    kind: ZKind


class ABDecomposition(BaseModel):
    """A = U ∪ {⊤} as a monoid with zero, plus the kind of Z ∪ {⊥}.

    ``a_witness[i]`` is the source index of element i of A and
    ``b_witness`` lists the source indices of Z in the labelling order of
    the kind.
    """

    model_config = ConfigDict(frozen=True)

    a: FiniteMonoid
    kind: ZKind
    a_witness: Tuple[int, ...]
    b_witness: Tuple[int, ...]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "a_size": self.a.size,
            "a_unit": self.a.unit,
            "a_zero": self.a.zero,
            "a_mul": [list(row) for row in self.a.mul],
            "kind": int(self.kind),
            "a_witness": list(self.a_witness),
            "b_witness": list(self.b_witness),
        }


class URLFlags(BaseModel):
    """Unilinearity, size and compactness predicates of an algebra."""

    model_config = ConfigDict(frozen=True)

    is_unilinear: bool
    is_linear: bool
    top_central: bool
    top_unital: bool
    rigorously_compact: bool
    compact: bool
    height: int
    width: int

    def to_dict(self) -> Dict[str, Any]:
        return self.model_dump()


class QuotientResult(BaseModel):
    """Comparability classes of a compact URL and the quotient monoid.

    Class 0 is H, the class of the unit. ``representatives`` is the least
    selection (by index) whose left and right multiplications are
    injective, or None when no such selection exists.
    """

    model_config = ConfigDict(frozen=True)

    classes: Tuple[Tuple[int, ...], ...]
    k: FiniteMonoid
    cancellative: bool
    admissible: bool
    k_cancellative: bool
    representatives_span: bool
    representatives: Optional[Tuple[int, ...]] = None

    @property
    def h(self) -> Tuple[int, ...]:
        return self.classes[0]

    def class_of(self, x: int) -> int:
        for i, members in enumerate(self.classes):
            if x in members:
                return i
        raise KeyError(x)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "classes": [list(c) for c in self.classes],
            "k_mul": [list(row) for row in self.k.mul],
            "cancellative": self.cancellative,
            "admissible": self.admissible,
            "k_cancellative": self.k_cancellative,
            "representatives_span": self.representatives_span,
            "representatives": list(self.representatives) if self.representatives else None,
        }


class Reconstruction(BaseModel):
    """Cocycle data recovered from a compact URL and the isomorphism ψ.

    ``mapping[x]`` is the index in ``algebra`` (the rebuilt R_{φ,f}) of the
    source element x.
    """

    model_config = ConfigDict(frozen=True)

    data: CocycleData
    algebra: FinRL
    mapping: Tuple[int, ...]


class IdentityCheck(BaseModel):
    """Verdict of an identity check with its first counter-example."""

    model_config = ConfigDict(frozen=True)

    holds: bool
    equation: str
    witness: Optional[Tuple[int, ...]] = None

    def __bool__(self) -> bool:
        return self.holds


class IdentitySpec(BaseModel):
    """An identity to carry from an algebra to its Galois algebra.

    Knotted identities use ``exponents = (m, n)`` for x^m ≤ x^n; weak
    commutativity uses the exponent vector (a_0, …, a_n).
    """

    model_config = ConfigDict(frozen=True)

    kind: IdentityKind
    exponents: Tuple[int, ...] = ()

    @field_validator("exponents")
    @classmethod
    def non_negative(cls, v: Tuple[int, ...]) -> Tuple[int, ...]:
        if any(e < 0 for e in v):
            raise ValueError("exponents must be non-negative")
        return v

    def describe(self) -> str:
        if self.kind is IdentityKind.KNOTTED:
            m, n = self.exponents
            return f"x^{m} <= x^{n}"
        if self.kind is IdentityKind.WEAK_COMMUTATIVITY:
            return "weak commutativity " + ",".join(str(e) for e in self.exponents)
        return "xy = yx"


def knotted(m: int, n: int) -> IdentitySpec:
    return IdentitySpec(kind=IdentityKind.KNOTTED, exponents=(m, n))


def weak_commutativity(partition: List[int]) -> IdentitySpec:
    return IdentitySpec(kind=IdentityKind.WEAK_COMMUTATIVITY, exponents=tuple(partition))


COMMUTATIVITY = IdentitySpec(kind=IdentityKind.COMMUTATIVITY)
