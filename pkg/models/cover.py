"""
Covers, membership rules and the records produced by compactness checks.
"""
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

from models.soft_set import Context, FuzzySoftSet
from utils.errors import ContextMismatch


class MembershipRule(Enum):
    """How "x belongs to (f, A)" is read when separating points"""
    SOME_POSITIVE = "some-positive"  # some parameter gives x a positive grade
    ALL_POSITIVE = "all-positive"    # every parameter gives x a positive grade
    ALL_ONE = "all-one"              # every parameter gives x grade 1

    @classmethod
    def parse(cls, text: str) -> "MembershipRule":
        try:
            return cls(text.strip().lower())
        except ValueError:
            choices = ", ".join(rule.value for rule in cls)
            raise ValueError(f"unknown membership rule {text!r} (choose from {choices})") from None

    def __str__(self) -> str:
        return self.value


class SubcoverMode(Enum):
    EXACT = "exact"
    GREEDY = "greedy"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class CoverFamily:
    """An ordered family of sets; order breaks ties in subcover search"""
    context: Context
    members: Tuple[FuzzySoftSet, ...]

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(self.members))
        for position, s in enumerate(self.members):
            if s.context != self.context:
                raise ContextMismatch(f"cover member #{position} lives over ({s.context}), expected ({self.context})")

    def __len__(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class CoverDeficiency:
    """A cell where the union of the family falls below the target"""
    parameter: str
    point: str
    union_grade: object
    target_grade: object

    def __str__(self) -> str:
        return f"({self.parameter},{self.point}): {self.union_grade} < {self.target_grade}"


@dataclass(frozen=True)
class SubcoverResult:
    indices: Tuple[int, ...]
    mode: SubcoverMode
    nodes: int = 0

    @property
    def size(self) -> int:
        return len(self.indices)


@dataclass(frozen=True)
class CompactnessCertificate:
    """
    Outcome of enumerating every open subfamily that covers a target.

    A finite family is its own finite subcover, so every enumeration that
    completes certifies compactness; the interesting content is the counts
    and the smallest subcover.
    """
    target: FuzzySoftSet
    compact: bool
    examined: int
    covering_count: int
    minimum_subcover: Optional[Tuple[int, ...]]
    covers: Optional[Tuple[Tuple[int, ...], ...]] = None
    reasoning: str = ""


@dataclass(frozen=True)
class DisjointnessRecord:
    """Whether a set misses its own complement, next to whether it is crisp"""
    fuzzy_set: FuzzySoftSet
    disjoint: bool
    crisp: bool

    @property
    def consistent(self) -> bool:
        return self.disjoint == self.crisp
