"""Data of a 2-cocycle extension."""
from typing import Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from .algebra import Table
from .monoid import ChainMonoid, FiniteMonoid


class CocycleData(BaseModel):
    """(K, A, φ, f) for the extension R_{φ,f}.

    ``phi[k]`` is the table of φ_k on A and ``f[k1][k2]`` is f(k1, k2).
    K carries no zero here; its unit is the neutral index.
    """

    model_config = ConfigDict(frozen=True)

    k: FiniteMonoid
    a: ChainMonoid
    phi: Tuple[Tuple[int, ...], ...]
    f: Table

    @model_validator(mode="after")
    def check_shapes(self) -> "CocycleData":
        nk, na = self.k.size, self.a.size
        if len(self.phi) != nk or any(len(row) != na for row in self.phi):
            raise ValueError(f"phi must list {nk} maps on {na} elements")
        if any(not 0 <= v < na for row in self.phi for v in row):
            raise ValueError("phi values must lie in A")
        if len(self.f) != nk or any(len(row) != nk for row in self.f):
            raise ValueError(f"f must be a {nk}x{nk} table")
        if any(not 0 <= v < na for row in self.f for v in row):
            raise ValueError("f values must lie in A")
        return self

    @property
    def is_trivial(self) -> bool:
        """True when every φ_k is the identity and f is constantly 1."""
        identity = tuple(range(self.a.size))
        return all(row == identity for row in self.phi) and all(
            v == self.a.unit for row in self.f for v in row
        )
