"""Law-by-law check reports."""
from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, Field


class LawCheck(BaseModel):
    """Outcome of one named law."""

    name: str
    passed: bool
    witness: Optional[Tuple[Any, ...]] = None
    detail: str = ""

    def to_dict(self) -> Dict[str, Any]:
        return {
            "law": self.name,
            "passed": self.passed,
            "witness": list(self.witness) if self.witness is not None else None,
        }


class LawReport(BaseModel):
    """Ordered list of law checks; the first failure is the verdict."""

    checks: List[LawCheck] = Field(default_factory=list)

    def add(self, name: str, witness: Optional[Tuple[Any, ...]] = None, detail: str = "") -> LawCheck:
        """Append a check that failed when a witness is given."""
        check = LawCheck(name=name, passed=witness is None, witness=witness, detail=detail)
        self.checks.append(check)
        return check

    @property
    def ok(self) -> bool:
        return all(check.passed for check in self.checks)

    def first_failure(self) -> Optional[LawCheck]:
        for check in self.checks:
            if not check.passed:
                return check
        return None

    def get(self, name: str) -> Optional[LawCheck]:
        for check in self.checks:
            if check.name == name:
                return check
        return None

    def __bool__(self) -> bool:
        return self.ok

    def to_dict(self) -> Dict[str, Any]:
        return {"ok": self.ok, "laws": [check.to_dict() for check in self.checks]}
