"""Enumeration types for the workbench."""
from enum import Enum


class Operation(str, Enum):
    """Binary operations of a residuated lattice, by table name."""

    MEET = "meet"
    JOIN = "join"
    MUL = "mul"
    LDIV = "ldiv"
    RDIV = "rdiv"


class ZKind(int, Enum):
    """Shape of the zero part Z ∪ {⊥} of a residuated lattice on M_X.

    0 is {⊥} alone, 1 is {⊥, b} with b² = ⊥, 2 is {⊥, b1, b2} with
    idempotent atoms whose product is ⊥, 3 is {⊥, b} with b² = b.
    """

    NONE = 0
    NILPOTENT = 1
    BOOLEAN = 2
    IDEMPOTENT = 3

    @property
    def size(self) -> int:
        """Number of elements of Z (the part without ⊥)."""
        return {0: 0, 1: 1, 2: 2, 3: 1}[self.value]

    @property
    def labels(self) -> tuple:
        """Display labels for the elements of Z."""
        if self is ZKind.BOOLEAN:
            return ("z1", "z2")
        if self.size == 1:
            return ("z",)
        return ()


class Orientation(str, Enum):
    """Order orientation of a cyclic-monoid URL."""

    UP = "up"
    DOWN = "down"


class ConjugateScheme(str, Enum):
    """Equation schemes checked at bounded conjugate depth."""

    SRL = "srl"
    M = "m"
    MG = "mg"
    COMPACT = "compact"


class IdentityKind(str, Enum):
    """Identity families understood by the preservation checker."""

    KNOTTED = "knotted"
    WEAK_COMMUTATIVITY = "weak_commutativity"
    COMMUTATIVITY = "commutativity"


class OutputFormat(str, Enum):
    """Serialisation formats of the command line."""

    FRL = "frl"
    JSON = "json"
