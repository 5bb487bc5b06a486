"""
In-memory form of a space file: named contexts, sets, topology families and
mappings. Topology families are kept by name and validated on demand by
services.space_service, so invalid families can still be loaded for diagnosis.
"""
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from models.cover import MembershipRule
from models.grade import ONE, ZERO
from models.mapping import SoftMapping
from models.soft_set import Context, FuzzySoftSet
from utils.errors import UnknownLabel

NULL_NAME = "NULL"
UNIVERSAL_NAME = "UNIV"
RESERVED_SET_NAMES = (NULL_NAME, UNIVERSAL_NAME)
SELF_SPACE = "SELF"


def canonical_names(names: Sequence[str]) -> Tuple[str, ...]:
    """NULL and UNIV first (when present), then the remaining names sorted, no repeats"""
    unique = set(names)
    head = tuple(name for name in RESERVED_SET_NAMES if name in unique)
    return head + tuple(sorted(unique - set(RESERVED_SET_NAMES)))


@dataclass(frozen=True)
class SpaceDefinition:
    context: Context
    sets: Dict[str, FuzzySoftSet] = field(default_factory=dict)
    topologies: Dict[str, Tuple[str, ...]] = field(default_factory=dict)

    def set_named(self, name: str, location: Optional[str] = None) -> FuzzySoftSet:
        if name == NULL_NAME:
            return FuzzySoftSet.filled(self.context, ZERO)
        if name == UNIVERSAL_NAME:
            return FuzzySoftSet.filled(self.context, ONE)
        try:
            return self.sets[name]
        except KeyError:
            raise UnknownLabel(name, location, kind="set") from None

    def sets_named(self, names: Sequence[str], location: Optional[str] = None) -> List[FuzzySoftSet]:
        return [self.set_named(name, location) for name in names]

    def family(self, name: str, location: Optional[str] = None) -> List[FuzzySoftSet]:
        """Members of a named topology family, in file order"""
        try:
            names = self.topologies[name]
        except KeyError:
            raise UnknownLabel(name, location, kind="topology") from None
        return self.sets_named(names, location)

    def default_topology_name(self, location: Optional[str] = None) -> str:
        """The only topology of the space; ambiguous or missing names are errors"""
        if len(self.topologies) == 1:
            return next(iter(self.topologies))
        choices = ", ".join(sorted(self.topologies)) or "none declared"
        raise UnknownLabel(f"<unspecified> (choose from {choices})", location, kind="topology")

    def name_of(self, a: FuzzySoftSet) -> Optional[str]:
        """First declared name (reserved names included) denoting the set"""
        if a.is_null:
            return NULL_NAME
        if a.is_universal:
            return UNIVERSAL_NAME
        for name in sorted(self.sets):
            if self.sets[name] == a:
                return name
        return None


@dataclass(frozen=True)
class MappingDefinition:
    """target_name is a declared space name, SELF, or None for an inline context"""
    mapping: SoftMapping
    target_name: Optional[str] = None


@dataclass(frozen=True)
class SpaceModel:
    main: SpaceDefinition
    spaces: Dict[str, SpaceDefinition] = field(default_factory=dict)
    mappings: Dict[str, MappingDefinition] = field(default_factory=dict)
    rule: Optional[MembershipRule] = None

    def space(self, name: str, location: Optional[str] = None) -> SpaceDefinition:
        if name == SELF_SPACE:
            return self.main
        try:
            return self.spaces[name]
        except KeyError:
            raise UnknownLabel(name, location, kind="space") from None

    def mapping(self, name: str, location: Optional[str] = None) -> MappingDefinition:
        try:
            return self.mappings[name]
        except KeyError:
            raise UnknownLabel(name, location, kind="mapping") from None

    def target_space(self, definition: MappingDefinition) -> Optional[SpaceDefinition]:
        """Space a mapping lands in; None for inline targets, which carry no topologies"""
        if definition.target_name is None:
            return None
        return self.space(definition.target_name)
