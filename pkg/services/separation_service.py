"""
Point membership and Hausdorff separation.

"x belongs to (f, A)" is not pinned down for fuzzy soft sets, so the rule is
a parameter: some-positive (default), all-positive or all-one.
"""
from itertools import combinations
from typing import Optional, Tuple

from models.checks import PropertyCheck
from models.cover import MembershipRule
from models.grade import ONE, ZERO
from models.soft_set import FuzzySoftSet
from models.topology import Topology
from utils import config
from utils.logger_config import LogPrefix, debug


def default_rule() -> MembershipRule:
    return MembershipRule.parse(config.DEFAULT_RULE)


def member_point(x: str, a: FuzzySoftSet, rule: Optional[MembershipRule] = None) -> bool:
    """
    Raises:
        UnknownLabel: x is not a point of the context
    """
    rule = rule or default_rule()
    j = a.context.point(x)
    column = [row[j] for row in a.grades]
    if rule == MembershipRule.SOME_POSITIVE:
        return any(g > ZERO for g in column)
    if rule == MembershipRule.ALL_POSITIVE:
        return all(g > ZERO for g in column)
    return all(g == ONE for g in column)


def separating_pair(
    t: Topology,
    x: str,
    y: str,
    rule: Optional[MembershipRule] = None,
) -> Optional[Tuple[FuzzySoftSet, FuzzySoftSet]]:
    """First (u, v) in canonical order with x in u, y in v and u ∩ v null"""
    rule = rule or default_rule()
    around_x = [(u, u.positive_mask) for u in t.opens if member_point(x, u, rule)]
    around_y = [(v, v.positive_mask) for v in t.opens if member_point(y, v, rule)]
    for u, u_mask in around_x:
        for v, v_mask in around_y:
            # min(u, v) is zero everywhere exactly when no cell is positive in both
            if not u_mask & v_mask:
                return u, v
    return None


def is_hausdorff(t: Topology, rule: Optional[MembershipRule] = None) -> PropertyCheck:
    """
    Every pair of distinct points is separated by disjoint open sets.
    Vacuously true with fewer than two points; witness is the first
    non-separable pair in universe order.
    """
    rule = rule or default_rule()
    universe = t.context.universe
    for x, y in combinations(universe, 2):
        if separating_pair(t, x, y, rule) is None:
            debug(LogPrefix.SEPARATION, f"Points ({x},{y}) cannot be separated under {rule}")
            return PropertyCheck.fail((x, y), f"no disjoint open sets separate ({x},{y}) under {rule}")
    return PropertyCheck.ok(f"all {len(universe) * (len(universe) - 1) // 2} point pairs separated under {rule}")
