"""Error hierarchy shared by every reslat service."""
from typing import Any, Optional, Tuple


class ReslatError(Exception):
    """Base class for workbench errors.

    Attributes:
        law: Name of the violated law or hypothesis, when there is one
        witness: First offending tuple of carrier indices (or other values)
    """

    def __init__(
        self,
        message: str,
        witness: Optional[Tuple[Any, ...]] = None,
        law: Optional[str] = None,
    ):
        super().__init__(message)
        self.witness = witness
        self.law = law


class InvalidParameters(ReslatError):
    """A constructor or checker received out-of-range parameters."""


# Order and monoid validation

class NotAPoset(ReslatError):
    """Reflexivity, antisymmetry or transitivity fails."""


class NotALattice(ReslatError):
    """Some pair lacks an infimum or a supremum."""


class NotAssociative(ReslatError):
    """Multiplication is not associative."""


class NotIdentity(ReslatError):
    """The proposed unit is not a two-sided identity."""


class NotOrderPreserving(ReslatError):
    """Multiplication is not monotone in one of its arguments."""


class NoMaximum(ReslatError):
    """A residual solution set has no maximum."""


class UnboundVariable(ReslatError):
    """A term mentions a variable missing from the assignment."""


class UnboundedConstant(ReslatError):
    """A term uses a bound constant in an algebra without that bound."""


# Constructions

class ZeroNotAbsorbing(ReslatError):
    """The designated zero of a monoid is not absorbing."""


class NotTopCancellative(ReslatError):
    """The monoid with zero is not zero-cancellative."""


class InvalidFactor(ReslatError):
    """An invariant factor is smaller than two."""


class NotAChain(ReslatError):
    """An algebra expected to be totally ordered has incomparable elements."""


class CocycleInvalid(ReslatError):
    """Cocycle data fails one of its defining conditions."""


class NotCancellative(ReslatError):
    """The acting monoid is not cancellative."""


class ConstructionMismatch(ReslatError):
    """A closed-form table disagrees with its brute-force derivation."""


# Analysis

class NotMxShaped(ReslatError):
    """The lattice reduct is not an M_X lattice."""


class ClassificationViolation(ReslatError):
    """A structural fact that must hold for the input class does not hold."""


class NotBounded(ReslatError):
    """The algebra has no bottom or no top."""


class NotCompact(ReslatError):
    """The algebra is not a compact unilinear residuated lattice."""


class HypothesesFail(ReslatError):
    """Reconstruction hypotheses do not hold; ``law`` names the failing one."""


class BadPartition(ReslatError):
    """A weak-commutativity exponent vector is not admissible."""


class CapExceeded(ReslatError):
    """Enumeration produced more algebras than the requested cap."""


# Frames

class EmbeddingFailure(ReslatError):
    """The map into the Galois algebra is not an embedding."""


class ClosureViolation(ReslatError):
    """A set expected to be Galois-closed is not."""


# Group signatures and downsets

class InfiniteGroup(ReslatError):
    """A signature with nonzero rank cannot be materialised as a table."""


class ContainmentViolation(ReslatError):
    """A downset of the product order is not contained where required."""


class SignatureSyntaxError(ReslatError):
    """Textual signature or downset could not be parsed."""


# File formats

class FrlSyntaxError(ReslatError):
    """Malformed algebra document."""

    def __init__(self, message: str, line: int, column: int, expected: str):
        super().__init__(f"line {line}, column {column}: {message} (expected {expected})")
        self.line = line
        self.column = column
        self.expected = expected


class SemanticError(ReslatError):
    """Well-formed algebra document that violates a law."""

    def __init__(self, law: str, witness: Optional[Tuple[Any, ...]] = None, message: str = ""):
        super().__init__(message or f"law {law} fails at {witness}", witness=witness, law=law)
