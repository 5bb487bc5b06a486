"""
Finite intersection property, the De Morgan identity behind the FIP
characterisation of compactness, and the complement-disjointness record.
"""
from itertools import combinations
from typing import Optional, Sequence

from models.checks import PropertyCheck
from models.cover import DisjointnessRecord
from models.soft_set import Context, FuzzySoftSet
from services.soft_set_service import (
    fss_complement, fss_intersection, fss_intersection_all, fss_union_all,
)
from utils import config
from utils.errors import ContextMismatch
from utils.logger_config import LogPrefix, debug


def _family_context(family: Sequence[FuzzySoftSet], ctx: Optional[Context]) -> Optional[Context]:
    ctx = ctx or (family[0].context if family else None)
    for position, s in enumerate(family):
        if s.context != ctx:
            raise ContextMismatch(f"family member #{position} lives over ({s.context}), expected ({ctx})")
    return ctx


def has_fip(
    family: Sequence[FuzzySoftSet],
    exhaustive_limit: Optional[int] = None,
) -> PropertyCheck:
    """
    Every non-empty subfamily has a non-null intersection.

    Families up to exhaustive_limit members have every non-empty subfamily
    tested, smallest first, so a failing witness has minimum cardinality.
    Larger families use monotonicity (a subfamily's intersection contains the
    whole family's) and shrink the full family to an inclusion-minimal witness.

    Witness: tuple of member indices whose intersection is null.
    """
    family = list(family)
    _family_context(family, None)
    limit = exhaustive_limit or config.FIP_EXHAUSTIVE_LIMIT
    masks = [s.positive_mask for s in family]
    full = (1 << len(family[0].grades) * len(family[0].grades[0])) - 1 if family else 0

    def is_null(indices) -> bool:
        acc = full
        for i in indices:
            acc &= masks[i]
        return acc == 0

    n = len(family)
    if n <= limit:
        for size in range(1, n + 1):
            for indices in combinations(range(n), size):
                if is_null(indices):
                    return PropertyCheck.fail(indices, f"subfamily {list(indices)} has null intersection")
        return PropertyCheck.ok(f"all {2 ** n - 1} non-empty subfamilies meet")

    if not is_null(range(n)):
        return PropertyCheck.ok(f"the intersection of all {n} members is non-null")

    witness = list(range(n))
    for i in range(n):
        reduced = [j for j in witness if j != i]
        if reduced and is_null(reduced):
            witness = reduced
    debug(LogPrefix.FIP, f"FIP fails; shrank {n} members to {len(witness)}")
    return PropertyCheck.fail(tuple(witness), f"subfamily {witness} has null intersection")


def fip_duality_check(family: Sequence[FuzzySoftSet], ctx: Optional[Context] = None) -> bool:
    """intersection of the family == complement of the union of complements"""
    family = list(family)
    ctx = _family_context(family, ctx)
    if ctx is None:
        return True
    meet = fss_intersection_all(ctx, family)
    dual = fss_complement(fss_union_all(ctx, (fss_complement(s) for s in family)))
    return meet == dual


def audit_complement_disjointness(a: FuzzySoftSet) -> DisjointnessRecord:
    """a ∩ a^c is null exactly when a is crisp"""
    disjoint = fss_intersection(a, fss_complement(a)).is_null
    return DisjointnessRecord(a, disjoint, a.is_crisp)
