"""Abstract codec interface for algebra documents."""
import logging
import sys
from abc import ABC, abstractmethod
from pathlib import Path
from typing import Generic, Optional, Sequence, TypeVar

from reslat.exceptions import ReslatError, SemanticError
from reslat.models import FinRL, Table
from reslat.services import finalg

logger = logging.getLogger(__name__)

T = TypeVar("T")

STDIO = "-"


def read_text(path: str) -> str:
    """Contents of a file, or of standard input when path is "-"."""
    if path == STDIO:
        text = sys.stdin.read()
    else:
        text = Path(path).read_text(encoding="utf-8")
    logger.debug(f"Read {len(text)} characters from {path}")
    return text


class BaseCodec(ABC, Generic[T]):
    """Text serialisation of one value type."""

    @abstractmethod
    def parse(self, text: str) -> T:
        """Parse a document."""
        pass

    @abstractmethod
    def render(self, value: T) -> str:
        """Render a value; parse(render(v)) == v."""
        pass

    def load(self, path: str) -> T:
        """Parse a file, or standard input when path is "-"."""
        return self.parse(read_text(path))

    def save(self, value: T, path: Optional[str] = None) -> None:
        """Render to a file, or to standard output when path is None or "-"."""
        text = self.render(value)
        if path is None or path == STDIO:
            sys.stdout.write(text)
            return
        target = Path(path)
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_text(text, encoding="utf-8")
        logger.info(f"Wrote {target}")


def algebra_from_tables(
    le: Sequence[Sequence[bool]],
    mul: Table,
    unit: int,
    bot: Optional[int],
    top: Optional[int],
    names: Optional[Sequence[str]] = None,
    ldiv: Optional[Table] = None,
    rdiv: Optional[Table] = None,
) -> FinRL:
    """Validate parsed tables law by law; the first failure becomes a SemanticError."""
    try:
        lattice = finalg.validate_order(le)
        finalg.check_monoid(mul, unit)
        if ldiv is None or rdiv is None:
            derived_l, derived_r = finalg.derive_residuals(lattice, mul, unit)
            ldiv = derived_l if ldiv is None else ldiv
            rdiv = derived_r if rdiv is None else rdiv
    except ReslatError as e:
        raise SemanticError(e.law or "shape", e.witness, str(e)) from e

    alg = FinRL(
        size=lattice.size,
        leq=lattice.leq,
        meet=lattice.meet,
        join=lattice.join,
        mul=tuple(map(tuple, mul)),
        ldiv=tuple(map(tuple, ldiv)),
        rdiv=tuple(map(tuple, rdiv)),
        unit=unit,
        bot=bot,
        top=top,
        names=tuple(names) if names is not None else None,
    )
    failure = finalg.check_residuated_lattice(alg).first_failure()
    if failure is not None:
        raise SemanticError(failure.name, failure.witness)
    return alg
