"""
Mapping service: image and preimage of fuzzy soft sets under (phi, psi),
and the continuity / open-map / closed-map predicates.

Formulas:
    preimage(g)(e)(x) = g(psi(e))(phi(x))
    image(f)(k)(y)    = max{ f(e)(x) : psi(e) = k, phi(x) = y }, 0 when empty
"""
from models.checks import PropertyCheck
from models.grade import ZERO
from models.mapping import SoftMapping
from models.soft_set import Context, FuzzySoftSet
from models.topology import Topology
from services.grade_service import grade_join
from services.soft_set_service import fss_complement
from services.topology_service import closed_family
from utils.errors import ContextMismatch
from utils.logger_config import LogPrefix, debug


def identity_mapping(ctx: Context) -> SoftMapping:
    return SoftMapping(
        ctx, ctx,
        {x: x for x in ctx.universe},
        {e: e for e in ctx.parameters},
    )


def compose(second: SoftMapping, first: SoftMapping) -> SoftMapping:
    """second after first"""
    if first.target != second.source:
        raise ContextMismatch(
            f"cannot compose: first lands in ({first.target}), second starts at ({second.source})"
        )
    return SoftMapping(
        first.source, second.target,
        {x: second.point_map[y] for x, y in first.point_map.items()},
        {e: second.param_map[k] for e, k in first.param_map.items()},
    )


def preimage(m: SoftMapping, g: FuzzySoftSet) -> FuzzySoftSet:
    if g.context != m.target:
        raise ContextMismatch(f"preimage expects a set over ({m.target}), got ({g.context})")
    points = m.point_indices
    return FuzzySoftSet(
        m.source,
        tuple(tuple(g.grades[k][y] for y in points) for k in m.param_indices),
    )


def image(m: SoftMapping, f: FuzzySoftSet) -> FuzzySoftSet:
    if f.context != m.source:
        raise ContextMismatch(f"image expects a set over ({m.source}), got ({f.context})")
    n_params, n_points = m.target.shape
    grades = [[ZERO] * n_points for _ in range(n_params)]
    for i, row in enumerate(f.grades):
        k = m.param_indices[i]
        for j, g in enumerate(row):
            y = m.point_indices[j]
            grades[k][y] = grade_join(grades[k][y], g)
    return FuzzySoftSet(m.target, tuple(tuple(row) for row in grades))


def _require_spaces(m: SoftMapping, t1: Topology, t2: Topology) -> None:
    if t1.context != m.source:
        raise ContextMismatch(f"source topology lives over ({t1.context}), mapping starts at ({m.source})")
    if t2.context != m.target:
        raise ContextMismatch(f"target topology lives over ({t2.context}), mapping lands in ({m.target})")


def is_continuous(m: SoftMapping, t1: Topology, t2: Topology) -> PropertyCheck:
    """Preimage of every open set of t2 is open in t1; witness is the first offending open set"""
    _require_spaces(m, t1, t2)
    for g in t2.opens:
        pulled = preimage(m, g)
        if pulled not in t1:
            debug(LogPrefix.MAPPING, f"Continuity fails at {g}")
            return PropertyCheck.fail(g, f"preimage of {g} is {pulled}, which is not open in the source")
    return PropertyCheck.ok(f"all {len(t2)} target open sets pull back to open sets")


def is_open_map(m: SoftMapping, t1: Topology, t2: Topology) -> PropertyCheck:
    """Image of every open set of t1 is open in t2"""
    _require_spaces(m, t1, t2)
    for f in t1.opens:
        pushed = image(m, f)
        if pushed not in t2:
            return PropertyCheck.fail(f, f"image of {f} is {pushed}, which is not open in the target")
    return PropertyCheck.ok(f"all {len(t1)} source open sets push forward to open sets")


def is_closed_map(m: SoftMapping, t1: Topology, t2: Topology) -> PropertyCheck:
    """Image of every closed set of t1 is closed in t2"""
    _require_spaces(m, t1, t2)
    closed_sets = closed_family(t1)
    for c in closed_sets:
        pushed = image(m, c)
        if fss_complement(pushed) not in t2:
            return PropertyCheck.fail(c, f"image of closed set {c} is {pushed}, which is not closed in the target")
    return PropertyCheck.ok(f"all {len(closed_sets)} source closed sets push forward to closed sets")
