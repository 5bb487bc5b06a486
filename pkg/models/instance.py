"""
A generated audit instance: one space, optionally a second space with a
mapping into it, and the named sets a statement talks about.
"""
from dataclasses import dataclass, field
from typing import Dict, Optional

from models.cover import MembershipRule
from models.mapping import SoftMapping
from models.soft_set import Context, FuzzySoftSet
from models.topology import Topology


@dataclass(frozen=True)
class AuditInstance:
    topology: Topology
    rule: MembershipRule
    sets: Dict[str, FuzzySoftSet] = field(default_factory=dict)
    target_topology: Optional[Topology] = None
    mapping: Optional[SoftMapping] = None

    @property
    def context(self) -> Context:
        return self.topology.context

    def set_named(self, name: str) -> FuzzySoftSet:
        return self.sets[name]


@dataclass(frozen=True)
class TrialOutcome:
    """What a statement's checker saw on one instance; violation None means verified"""
    violation: Optional[str] = None
    witness: str = ""
    observations: Dict[str, int] = field(default_factory=dict)

    @property
    def verified(self) -> bool:
        return self.violation is None
