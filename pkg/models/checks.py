"""
Result of a checker that answers yes/no and, on "no", names a witness.
"""
from dataclasses import dataclass
from typing import Any, Optional


@dataclass(frozen=True)
class PropertyCheck:
    holds: bool
    witness: Optional[Any] = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.holds

    @classmethod
    def ok(cls, detail: str = "") -> "PropertyCheck":
        return cls(True, None, detail)

    @classmethod
    def fail(cls, witness: Any, detail: str) -> "PropertyCheck":
        return cls(False, witness, detail)
