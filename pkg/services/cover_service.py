"""
Covers, subcovers and compactness certificates.

Every topology here is a finite family, so every open cover is already a
finite subcover of itself and every representable space is compact. What is
left to compute is the optimisation problem hiding underneath: the smallest
subfamily whose union still dominates the target.

A family covers a target exactly when, for every cell where the target is
positive, some member reaches the target's grade there (union is pointwise
max). That turns subcover search into a classic set cover over those cells,
which is solved here on integer bitmasks.
"""
import math
from typing import List, Optional, Sequence, Tuple

from models.checks import PropertyCheck
from models.cover import (
    CompactnessCertificate, CoverDeficiency, CoverFamily, SubcoverMode, SubcoverResult,
)
from models.grade import ZERO
from models.mapping import SoftMapping
from models.soft_set import FuzzySoftSet
from models.topology import Topology
from services.mapping_service import image
from services.soft_set_service import fss_universal
from services.topology_service import is_finer
from utils import config
from utils.errors import CapExceeded, ContextMismatch, NotACover, SearchBudgetExceeded
from utils.logger_config import LogPrefix, debug, info


def cell_masks(target: FuzzySoftSet, members: Sequence[FuzzySoftSet]) -> Tuple[int, List[int]]:
    """
    Encode the cover problem as bitmasks.

    Returns:
        (need, masks): need has one bit per cell where target > 0; masks[i]
        has the bits of the cells where members[i] reaches the target grade
    """
    need = 0
    masks = [0] * len(members)
    bit = 1
    for i, row in enumerate(target.grades):
        for j, goal in enumerate(row):
            if goal == ZERO:
                continue
            need |= bit
            for m, member in enumerate(members):
                if member.grades[i][j] >= goal:
                    masks[m] |= bit
            bit <<= 1
    return need, masks


def subset_unions(masks: Sequence[int]) -> List[int]:
    """
    unions[s] is the OR of masks[i] over the bits i of s, for every s < 2^n.
    Each entry extends the entry without its lowest bit.
    """
    unions = [0] * (1 << len(masks))
    for subset in range(1, len(unions)):
        low = subset & -subset
        unions[subset] = unions[subset ^ low] | masks[low.bit_length() - 1]
    return unions


def subset_indices(subset: int, n: int) -> Tuple[int, ...]:
    return tuple(i for i in range(n) if subset >> i & 1)


def _require_target(fam: CoverFamily, target: FuzzySoftSet) -> None:
    if target.context != fam.context:
        raise ContextMismatch(f"target lives over ({target.context}), family over ({fam.context})")


def is_cover(fam: CoverFamily, target: FuzzySoftSet) -> PropertyCheck:
    """
    target is contained in the union of the family. On failure the witness is
    the first cell (row-major) where the union falls below the target. The
    empty family has the null union and so covers only the null set.
    """
    _require_target(fam, target)
    ctx = fam.context
    for i, row in enumerate(target.grades):
        for j, goal in enumerate(row):
            best = max((m.grades[i][j] for m in fam.members), default=ZERO)
            if best < goal:
                deficiency = CoverDeficiency(ctx.parameters[i], ctx.universe[j], best, goal)
                return PropertyCheck.fail(deficiency, f"union falls short at {deficiency}")
    return PropertyCheck.ok(f"{len(fam)} sets cover the target")


def min_subcover(
    fam: CoverFamily,
    target: FuzzySoftSet,
    mode: SubcoverMode = SubcoverMode.EXACT,
    budget: Optional[int] = None,
) -> SubcoverResult:
    """
    Find a subfamily that still covers target.

    exact: minimum cardinality by depth-first branch and bound; ties go to the
    lexicographically smallest index set. greedy: repeatedly take the member
    resolving the most deficient cells (ties by lowest index).

    Raises:
        NotACover: the family does not cover target
        SearchBudgetExceeded: exact search visited more than budget nodes
    """
    check = is_cover(fam, target)
    if not check:
        raise NotACover(f"family does not cover the target: {check.detail}", check.witness)

    need, masks = cell_masks(target, fam.members)
    if mode == SubcoverMode.GREEDY:
        return _greedy(need, masks)
    return _branch_and_bound(need, masks, budget or config.SEARCH_BUDGET)


def _greedy(need: int, masks: List[int]) -> SubcoverResult:
    chosen = []
    uncovered = need
    while uncovered:
        best_index, best_gain = -1, 0
        for i, mask in enumerate(masks):
            gain = bin(mask & uncovered).count("1")
            if gain > best_gain:
                best_index, best_gain = i, gain
        chosen.append(best_index)
        uncovered &= ~masks[best_index]
    return SubcoverResult(tuple(sorted(chosen)), SubcoverMode.GREEDY)


def _branch_and_bound(need: int, masks: List[int], budget: int) -> SubcoverResult:
    n = len(masks)
    suffix_union = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix_union[i] = suffix_union[i + 1] | masks[i]

    best: List[Tuple[int, ...]] = [tuple(range(n))]
    best_size = [n + 1]
    nodes = [0]
    chosen: List[int] = []

    # Subsets are visited in lexicographic order of their sorted index tuples
    # and only strict improvements are recorded, which keeps the smallest
    # index set among all minimum covers.
    def search(start: int, uncovered: int) -> None:
        nodes[0] += 1
        if nodes[0] > budget:
            raise SearchBudgetExceeded(f"exact subcover search exceeded {budget} nodes", budget)
        if not uncovered:
            if len(chosen) < best_size[0]:
                best[0] = tuple(chosen)
                best_size[0] = len(chosen)
            return
        if len(chosen) + 1 >= best_size[0]:
            return
        if suffix_union[start] & uncovered != uncovered:
            return
        max_gain = max(bin(masks[i] & uncovered).count("1") for i in range(start, n))
        lower_bound = math.ceil(bin(uncovered).count("1") / max_gain)
        if len(chosen) + lower_bound >= best_size[0]:
            return
        for i in range(start, n):
            if suffix_union[i] & uncovered != uncovered:
                break
            if len(chosen) + 1 >= best_size[0]:
                break
            if not masks[i] & uncovered:
                continue
            chosen.append(i)
            search(i + 1, uncovered & ~masks[i])
            chosen.pop()

    search(0, need)
    debug(LogPrefix.COVER, f"Exact subcover of size {best_size[0]} after {nodes[0]} nodes")
    return SubcoverResult(best[0], SubcoverMode.EXACT, nodes[0])


def compactness_certificate(
    t: Topology,
    target: FuzzySoftSet,
    cap: Optional[int] = None,
    collect: bool = True,
) -> CompactnessCertificate:
    """
    Enumerate every subfamily of the open sets that covers target.

    Args:
        t: Topology supplying the open sets
        target: Set to be covered
        cap: Maximum number of subfamilies to enumerate
        collect: Keep the index tuple of every covering subfamily

    Raises:
        CapExceeded: 2^|opens| exceeds cap
    """
    if target.context != t.context:
        raise ContextMismatch(f"target lives over ({target.context}), topology over ({t.context})")
    cap = cap or config.ENUMERATION_CAP
    n = len(t.opens)
    total = 1 << n
    if total > cap:
        raise CapExceeded(f"{total} subfamilies of {n} open sets exceed the enumeration cap of {cap}", cap)

    need, masks = cell_masks(target, t.opens)
    unions = subset_unions(masks)
    covering = [subset for subset in range(total) if unions[subset] & need == need]

    covers = None
    if collect:
        covers = tuple(sorted(subset_indices(subset, n) for subset in covering))

    minimum = None
    if covering:
        minimum = min_subcover(CoverFamily(t.context, t.opens), target).indices

    reasoning = (
        f"{len(covering)} of {total} open subfamilies cover the target; each is finite "
        f"and therefore its own finite subcover"
    )
    info(LogPrefix.COVER, f"Compactness certificate: {reasoning}")
    return CompactnessCertificate(
        target=target,
        compact=True,
        examined=total,
        covering_count=len(covering),
        minimum_subcover=minimum,
        covers=covers,
        reasoning=reasoning,
    )


def is_compact(t: Topology, target: FuzzySoftSet, budget: Optional[int] = None) -> PropertyCheck:
    """
    Decide compactness of target without enumerating subfamilies.

    The universal set is open, so the whole family always covers target and
    every open cover is one of its finite subfamilies. min_subcover extracts
    a smallest subcover from the whole family.

    Raises:
        SearchBudgetExceeded: exact search visited more than budget nodes
    """
    if target.context != t.context:
        raise ContextMismatch(f"target lives over ({target.context}), topology over ({t.context})")
    result = min_subcover(CoverFamily(t.context, t.opens), target, budget=budget)
    return PropertyCheck.ok(f"{len(t)} open sets; smallest open subcover has {result.size} sets")


def is_compact_space(t: Topology, budget: Optional[int] = None) -> bool:
    """Every open cover of the universal set has a finite subcover"""
    return is_compact(t, fss_universal(t.context), budget).holds


def coarser_compactness_check(
    finer: Topology,
    coarser: Topology,
    target: FuzzySoftSet,
    cap: Optional[int] = None,
) -> PropertyCheck:
    """If target is compact in the finer topology it is compact in the coarser one"""
    if not is_finer(finer, coarser):
        return PropertyCheck.ok("hypothesis not met: first topology is not finer than the second")
    fine = compactness_certificate(finer, target, cap, collect=False)
    coarse = compactness_certificate(coarser, target, cap, collect=False)
    if fine.compact and not coarse.compact:
        return PropertyCheck.fail(target, "compact in the finer topology but not in the coarser one")
    return PropertyCheck.ok("compactness carries over to the coarser topology")


def image_compactness_check(
    m: SoftMapping,
    t1: Topology,
    t2: Topology,
    f: FuzzySoftSet,
    cap: Optional[int] = None,
) -> PropertyCheck:
    """If f is compact in t1 then its image is compact in t2"""
    source = compactness_certificate(t1, f, cap, collect=False)
    pushed = image(m, f)
    target = compactness_certificate(t2, pushed, cap, collect=False)
    if source.compact and not target.compact:
        return PropertyCheck.fail(f, f"image {pushed} is not compact")
    return PropertyCheck.ok(f"image {pushed} is compact")
