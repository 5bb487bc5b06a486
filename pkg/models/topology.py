"""
Finite fuzzy soft topologies and their validation reports.
"""
from dataclasses import dataclass, field
from functools import cached_property
from typing import FrozenSet, Optional, Tuple

from models.soft_set import Context, FuzzySoftSet


def canonical_family(sets) -> Tuple[FuzzySoftSet, ...]:
    """Duplicate-free, sorted row-major on canonical rationals"""
    return tuple(sorted(set(sets), key=lambda s: s.sort_key))


@dataclass(frozen=True)
class Topology:
    """
    A validated finite family of open sets.

    Only built by topology_service (validate_topology / generate_topology), so
    holding one means the axioms were checked.
    """
    context: Context
    opens: Tuple[FuzzySoftSet, ...]

    def __post_init__(self):
        object.__setattr__(self, "opens", canonical_family(self.opens))

    @cached_property
    def members(self) -> FrozenSet[FuzzySoftSet]:
        return frozenset(self.opens)

    def __contains__(self, item: FuzzySoftSet) -> bool:
        return item in self.members

    def __len__(self) -> int:
        return len(self.opens)

    def __iter__(self):
        return iter(self.opens)

    def index(self, item: FuzzySoftSet) -> int:
        return self.opens.index(item)


@dataclass(frozen=True)
class AxiomViolation:
    """One failed axiom with the set that should have been present"""
    axiom: str  # "null" | "universal" | "intersection" | "union"
    witness: FuzzySoftSet
    operands: Tuple[FuzzySoftSet, ...] = ()

    def describe(self) -> str:
        if self.axiom == "null":
            return f"null set {self.witness} is missing"
        if self.axiom == "universal":
            return f"universal set {self.witness} is missing"
        symbol = "∩" if self.axiom == "intersection" else "∪"
        left, right = self.operands
        return f"{left} {symbol} {right} = {self.witness} is missing ({self.axiom} closure)"


@dataclass(frozen=True)
class ValidationReport:
    context: Context
    family: Tuple[FuzzySoftSet, ...]
    violations: Tuple[AxiomViolation, ...] = ()
    topology: Optional[Topology] = field(default=None, compare=False)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok
