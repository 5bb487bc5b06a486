"""
Fuzzy soft set algebra: constants, construction, subset/equality,
union, intersection and complement, all pointwise over the full E x X matrix.
"""
from typing import Dict, Iterable, Mapping, Optional, Tuple

from models.grade import Grade, ONE, ZERO
from models.soft_set import Context, FuzzySoftSet
from services.grade_service import grade_complement, grade_join, grade_meet
from utils.errors import ContextMismatch, UnknownLabel


def fss_constants(ctx: Context) -> Tuple[FuzzySoftSet, FuzzySoftSet]:
    """(null set, universal set) over ctx; the null set doubles as Phi"""
    return FuzzySoftSet.filled(ctx, ZERO), FuzzySoftSet.filled(ctx, ONE)


def fss_null(ctx: Context) -> FuzzySoftSet:
    return FuzzySoftSet.filled(ctx, ZERO)


def fss_universal(ctx: Context) -> FuzzySoftSet:
    return FuzzySoftSet.filled(ctx, ONE)


def fss_from_rows(
    ctx: Context,
    rows: Mapping[str, Mapping[str, Grade]],
    location: Optional[str] = None,
) -> FuzzySoftSet:
    """
    Build a set from {parameter: {point: grade}}; missing entries are 0.

    Raises:
        UnknownLabel: a parameter or point is not part of ctx
    """
    n_params, n_points = ctx.shape
    grades = [[ZERO] * n_points for _ in range(n_params)]
    for parameter, row in rows.items():
        row_location = f"{location}.{parameter}" if location else None
        if parameter not in ctx.parameter_index:
            raise UnknownLabel(parameter, row_location, kind="parameter")
        i = ctx.parameter_index[parameter]
        for point, g in row.items():
            if point not in ctx.point_index:
                raise UnknownLabel(point, f"{row_location}.{point}" if row_location else None, kind="point")
            grades[i][ctx.point_index[point]] = g
    return FuzzySoftSet(ctx, tuple(tuple(row) for row in grades))


def fss_to_rows(a: FuzzySoftSet) -> Dict[str, Dict[str, Grade]]:
    """Sparse {parameter: {point: grade}} view holding only non-zero grades"""
    rows = {}
    for e, row in zip(a.context.parameters, a.grades):
        entries = {x: g for x, g in zip(a.context.universe, row) if g != ZERO}
        if entries:
            rows[e] = entries
    return rows


def _pointwise(a: FuzzySoftSet, b: FuzzySoftSet, op) -> FuzzySoftSet:
    a.require_context(b)
    return FuzzySoftSet(
        a.context,
        tuple(tuple(op(x, y) for x, y in zip(ra, rb)) for ra, rb in zip(a.grades, b.grades)),
    )


def fss_subset(a: FuzzySoftSet, b: FuzzySoftSet) -> bool:
    """a(e)(x) <= b(e)(x) for every cell"""
    a.require_context(b)
    return all(x <= y for ra, rb in zip(a.grades, b.grades) for x, y in zip(ra, rb))


def fss_equal(a: FuzzySoftSet, b: FuzzySoftSet) -> bool:
    """Mutual subset"""
    return fss_subset(a, b) and fss_subset(b, a)


def fss_union(a: FuzzySoftSet, b: FuzzySoftSet) -> FuzzySoftSet:
    return _pointwise(a, b, grade_join)


def fss_intersection(a: FuzzySoftSet, b: FuzzySoftSet) -> FuzzySoftSet:
    return _pointwise(a, b, grade_meet)


def fss_complement(a: FuzzySoftSet) -> FuzzySoftSet:
    return FuzzySoftSet(a.context, tuple(tuple(grade_complement(g) for g in row) for row in a.grades))


def fss_union_all(ctx: Context, sets: Iterable[FuzzySoftSet]) -> FuzzySoftSet:
    """Union of a finite family; the empty union is the null set"""
    result = fss_null(ctx)
    for s in sets:
        if s.context != ctx:
            raise ContextMismatch(f"family member lives over ({s.context}), expected ({ctx})")
        result = fss_union(result, s)
    return result


def fss_intersection_all(ctx: Context, sets: Iterable[FuzzySoftSet]) -> FuzzySoftSet:
    """Intersection of a finite family; the empty intersection is the universal set"""
    result = fss_universal(ctx)
    for s in sets:
        if s.context != ctx:
            raise ContextMismatch(f"family member lives over ({s.context}), expected ({ctx})")
        result = fss_intersection(result, s)
    return result


def fss_support(a: FuzzySoftSet) -> Tuple[str, ...]:
    return a.support


def fss_is_crisp(a: FuzzySoftSet) -> bool:
    return a.is_crisp
