"""
Resolving names in a parsed space file into validated structures.
"""
from typing import Optional, Tuple

from models.space import SpaceDefinition, SpaceModel
from models.topology import Topology, ValidationReport
from services.topology_service import validate_topology
from utils.errors import TopologyAxiomViolation
from utils.logger_config import LogPrefix, debug


def topology_report(space: SpaceDefinition, name: str, location: Optional[str] = None) -> ValidationReport:
    return validate_topology(space.context, space.family(name, location))


def space_topology(space: SpaceDefinition, name: str, location: Optional[str] = None) -> Topology:
    """
    Raises:
        UnknownLabel: no topology of that name
        TopologyAxiomViolation: the family fails an axiom; carries the report
    """
    report = topology_report(space, name, location)
    if not report:
        first = report.violations[0]
        raise TopologyAxiomViolation(
            f"topology '{name}' is not a fuzzy soft topology: {first.describe()}",
            report,
            location or f"topologies.{name}",
        )
    return report.topology


def validate_all_topologies(model: SpaceModel) -> None:
    """Fail fast on the first invalid family, primary space first"""
    spaces: Tuple[Tuple[str, SpaceDefinition], ...] = (("", model.main),) + tuple(
        (f"spaces.{name}.", space) for name, space in model.spaces.items()
    )
    for prefix, space in spaces:
        for name in space.topologies:
            space_topology(space, name, f"{prefix}topologies.{name}")
    debug(LogPrefix.TOPOLOGY, f"All topologies in {len(spaces)} spaces validated")
