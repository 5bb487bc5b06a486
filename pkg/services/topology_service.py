"""
Topology service: axiom validation, generation by closure, open/closed
predicates and the finer/coarser order.

All families here are finite, so closure under pairwise union is the same
as closure under arbitrary union. A consequence worth keeping in mind: every
space this library can represent is compact (see cover_service).
"""
from typing import Iterable, List, Optional, Sequence

from models.soft_set import Context, FuzzySoftSet
from models.topology import AxiomViolation, Topology, ValidationReport, canonical_family
from services.soft_set_service import (
    fss_complement, fss_constants, fss_intersection, fss_union,
)
from utils import config
from utils.errors import CapExceeded, ContextMismatch
from utils.logger_config import LogPrefix, debug


def _require_context(ctx: Context, family: Iterable[FuzzySoftSet], what: str) -> List[FuzzySoftSet]:
    members = list(family)
    for position, s in enumerate(members):
        if s.context != ctx:
            raise ContextMismatch(f"{what} #{position} lives over ({s.context}), expected ({ctx})")
    return members


def validate_topology(ctx: Context, family: Sequence[FuzzySoftSet]) -> ValidationReport:
    """
    Check the three axioms on a finite family.

    Returns:
        ValidationReport carrying the canonical Topology when valid, or every
        violated axiom with the missing set as witness
    """
    members = canonical_family(_require_context(ctx, family, "family member"))
    present = set(members)
    null, universal = fss_constants(ctx)

    violations = []
    if null not in present:
        violations.append(AxiomViolation("null", null))
    if universal not in present:
        violations.append(AxiomViolation("universal", universal))

    reported = set()
    for i, a in enumerate(members):
        for b in members[i + 1:]:
            for axiom, combined in (("intersection", fss_intersection(a, b)), ("union", fss_union(a, b))):
                if combined not in present and (axiom, combined) not in reported:
                    reported.add((axiom, combined))
                    violations.append(AxiomViolation(axiom, combined, (a, b)))

    if violations:
        debug(LogPrefix.TOPOLOGY, f"Family of {len(members)} sets fails {len(violations)} axiom checks")
        return ValidationReport(ctx, members, tuple(violations))

    return ValidationReport(ctx, members, (), Topology(ctx, members))


def generate_topology(
    ctx: Context,
    generators: Sequence[FuzzySoftSet],
    cap: Optional[int] = None,
) -> Topology:
    """
    Smallest topology containing the generators: the fixpoint of
    generators + {null, universal} under pairwise union and intersection.

    Raises:
        CapExceeded: the closure grows beyond cap members
    """
    cap = cap or config.TOPOLOGY_CAP
    seeds = list(fss_constants(ctx)) + _require_context(ctx, generators, "generator")

    known: List[FuzzySoftSet] = []
    seen = set()
    for s in seeds:
        if s not in seen:
            seen.add(s)
            known.append(s)
    if len(known) > cap:
        raise CapExceeded(f"topology closure exceeds cap of {cap} members", cap)

    # Each element is combined with every element discovered before it
    # (itself included); later discoveries get their turn when reached.
    i = 0
    while i < len(known):
        a = known[i]
        for j in range(i + 1):
            b = known[j]
            for combined in (fss_union(a, b), fss_intersection(a, b)):
                if combined not in seen:
                    seen.add(combined)
                    known.append(combined)
                    if len(known) > cap:
                        raise CapExceeded(f"topology closure exceeds cap of {cap} members", cap)
        i += 1

    debug(LogPrefix.TOPOLOGY, f"Closed {len(generators)} generators into {len(known)} open sets")
    return Topology(ctx, known)


def indiscrete_topology(ctx: Context) -> Topology:
    return Topology(ctx, fss_constants(ctx))


def is_open(t: Topology, a: FuzzySoftSet) -> bool:
    if a.context != t.context:
        raise ContextMismatch(f"set lives over ({a.context}), topology over ({t.context})")
    return a in t


def is_closed(t: Topology, a: FuzzySoftSet) -> bool:
    """Closed means the complement is open"""
    if a.context != t.context:
        raise ContextMismatch(f"set lives over ({a.context}), topology over ({t.context})")
    return fss_complement(a) in t


def is_finer(t2: Topology, t1: Topology) -> bool:
    """True when every open set of t1 is open in t2"""
    if t1.context != t2.context:
        raise ContextMismatch(f"topologies live over different contexts: ({t2.context}) vs ({t1.context})")
    return all(o in t2 for o in t1.opens)


def closed_family(t: Topology) -> List[FuzzySoftSet]:
    """Complements of all open sets, canonically ordered"""
    return list(canonical_family(fss_complement(o) for o in t.opens))
