"""Pydantic data models."""
from .enums import ConjugateScheme, IdentityKind, Operation, Orientation, OutputFormat, ZKind
from .algebra import FinRL, LatticeTables, Matrix, PartialAlgebra, Table
from .term import BOT, ONE, TOP, Term, TermOp, power, var
from .monoid import ChainMonoid, FiniteMonoid
from .cocycle import CocycleData
from .reports import LawCheck, LawReport
from .analysis import (
    COMMUTATIVITY,
    ABDecomposition,
    IdentityCheck,
    IdentitySpec,
    QuotientResult,
    Reconstruction,
    URLFlags,
    UZSplit,
    knotted,
    weak_commutativity,
)
from .frame import (
    EmbeddingInstance,
    EmbeddingReport,
    Frame,
    GaloisAlgebra,
    PreservationEntry,
    PreservationReport,
)
from .signature import (
    DownsetDesc,
    ExpTower,
    GroupSig,
    PFDownset,
    PrimeFamily,
    Principal,
    ZClosureResult,
)

__all__ = [
    "ConjugateScheme",
    "IdentityKind",
    "Operation",
    "Orientation",
    "OutputFormat",
    "ZKind",
    "FinRL",
    "LatticeTables",
    "Matrix",
    "PartialAlgebra",
    "Table",
    "BOT",
    "ONE",
    "TOP",
    "Term",
    "TermOp",
    "power",
    "var",
    "ChainMonoid",
    "FiniteMonoid",
    "CocycleData",
    "LawCheck",
    "LawReport",
    "COMMUTATIVITY",
    "ABDecomposition",
    "IdentityCheck",
    "IdentitySpec",
    "QuotientResult",
    "Reconstruction",
    "URLFlags",
    "UZSplit",
    "knotted",
    "weak_commutativity",
    "EmbeddingInstance",
    "EmbeddingReport",
    "Frame",
    "GaloisAlgebra",
    "PreservationEntry",
    "PreservationReport",
    "DownsetDesc",
    "ExpTower",
    "GroupSig",
    "PFDownset",
    "PrimeFamily",
    "Principal",
    "ZClosureResult",
]
