"""
Plain-text rendering of checker results.
Output depends only on its inputs: no timestamps, no hash-ordered iteration.
"""
from typing import Iterable, List, Optional, Sequence

from models.checks import PropertyCheck
from models.cover import CompactnessCertificate, SubcoverResult
from models.soft_set import FuzzySoftSet
from models.space import SpaceDefinition
from models.topology import ValidationReport


def set_label(space: Optional[SpaceDefinition], a: FuzzySoftSet) -> str:
    """Declared name with the matrix, or the matrix alone for anonymous sets"""
    name = space.name_of(a) if space is not None else None
    return f"{name} {a}" if name else str(a)


def _names(space: SpaceDefinition, sets: Iterable[FuzzySoftSet]) -> str:
    return ", ".join(set_label(space, s) for s in sets)


def format_validation(space_name: str, topology_name: str, report: ValidationReport, space: SpaceDefinition) -> List[str]:
    header = f"{space_name}.{topology_name}"
    if report.ok:
        return [f"{header}: valid fuzzy soft topology ({len(report.family)} open sets)"]
    lines = [f"{header}: NOT a fuzzy soft topology ({len(report.violations)} violations)"]
    for violation in report.violations:
        operands = f" from {_names(space, violation.operands)}" if violation.operands else ""
        lines.append(f"  - {violation.axiom}: missing {violation.witness}{operands}")
    return lines


def format_check(title: str, check: PropertyCheck, witness_text: Optional[str] = None) -> str:
    lines = [f"{title}: {'yes' if check else 'no'}"]
    if check.detail:
        lines.append(f"  {check.detail}")
    if not check and (witness_text or check.witness is not None):
        lines.append(f"  witness: {witness_text if witness_text is not None else check.witness}")
    return "\n".join(lines) + "\n"


def format_subcover(
    result: SubcoverResult,
    names: Sequence[str],
    target_name: str,
) -> str:
    chosen = ", ".join(names[i] for i in result.indices) or "(empty family)"
    lines = [
        f"subcover of {target_name} ({result.mode}): {chosen}",
        f"  size: {result.size}",
        f"  indices: {list(result.indices)}",
    ]
    if result.mode.value == "exact":
        lines.append(f"  search nodes: {result.nodes}")
    return "\n".join(lines) + "\n"


def format_certificate(
    certificate: CompactnessCertificate,
    space: SpaceDefinition,
    opens: Sequence[FuzzySoftSet],
    target_name: str,
) -> str:
    if certificate.minimum_subcover is None:
        smallest = "none (the open sets do not cover the target)"
    else:
        smallest = _names(space, [opens[i] for i in certificate.minimum_subcover]) or "(empty family)"
    lines = [
        f"compact ({target_name}): {'yes' if certificate.compact else 'no'}",
        f"  open subfamilies examined: {certificate.examined}",
        f"  covering subfamilies: {certificate.covering_count}",
        f"  smallest subcover: {smallest}",
        f"  {certificate.reasoning}",
    ]
    return "\n".join(lines) + "\n"


def format_error(message: str) -> str:
    return f"error: {message}\n"
