import pytest
from hypothesis import given, settings

from models.grade import ONE, ZERO
from models.soft_set import Context, FuzzySoftSet, matrix
from services.grade_service import grade_from_ratio
from services.soft_set_service import (
    fss_complement, fss_constants, fss_equal, fss_from_rows, fss_intersection, fss_intersection_all,
    fss_is_crisp, fss_subset, fss_support, fss_to_rows, fss_union, fss_union_all,
)
from utils.errors import ContextMismatch, InvalidContext, UnknownLabel
from tests.strategies import context_and_sets


class TestContext:
    def test_rejects_empty_and_duplicate_labels(self):
        with pytest.raises(InvalidContext):
            Context((), ("e1",))
        with pytest.raises(InvalidContext):
            Context(("x1", "x1"), ("e1",))

    def test_unknown_label(self, ctx):
        with pytest.raises(UnknownLabel):
            ctx.point("x9")

    def test_matrix_dimensions_checked(self, ctx):
        with pytest.raises(InvalidContext):
            FuzzySoftSet(ctx, ((ZERO,),))


class TestConstruction:
    def test_constants(self, ctx):
        null, universal = fss_constants(ctx)
        assert null == matrix(ctx, [[0, 0]])
        assert universal == matrix(ctx, [[1, 1]])
        assert fss_complement(universal) == null

    def test_from_rows(self, ctx, f):
        a = fss_from_rows(ctx, {"e1": {"x1": grade_from_ratio(1, 2), "x2": ONE}})
        assert a == f
        assert fss_support(a) == ("e1",)

    def test_from_empty_rows_is_null(self, ctx):
        a = fss_from_rows(ctx, {})
        assert a.is_null
        assert fss_support(a) == ()

    def test_from_rows_unknown_parameter(self, ctx):
        with pytest.raises(UnknownLabel) as excinfo:
            fss_from_rows(ctx, {"e9": {"x1": ONE}}, "sets.h")
        assert excinfo.value.location == "sets.h.e9"

    def test_to_rows_is_sparse(self, g):
        assert fss_to_rows(g) == {"e1": {"x1": grade_from_ratio(1, 2)}}

    def test_support_of_two_parameter_set(self):
        ctx = Context(("x1",), ("e1", "e2"))
        assert fss_support(matrix(ctx, [[0], ["1/3"]])) == ("e2",)


class TestAlgebra:
    def test_subset(self, ctx, f, g):
        null, universal = fss_constants(ctx)
        assert fss_subset(null, f)
        assert fss_subset(f, universal)
        assert fss_subset(g, f)
        assert not fss_subset(f, g)

    def test_union_intersection(self, ctx, f, g, p1, p2):
        null, universal = fss_constants(ctx)
        assert fss_union(f, g) == f
        assert fss_intersection(p1, p2) == null
        assert fss_intersection(f, universal) == f

    def test_complement(self, ctx, f, g):
        null, universal = fss_constants(ctx)
        assert fss_complement(f) == g
        assert fss_complement(fss_complement(f)) == f
        assert fss_complement(null) == universal

    def test_context_mismatch(self, f):
        other = Context(("x1", "x2"), ("e2",))
        with pytest.raises(ContextMismatch):
            fss_union(f, FuzzySoftSet.filled(other, ZERO))

    def test_finite_families(self, ctx, f, g, p1, p2):
        null, universal = fss_constants(ctx)
        assert fss_union_all(ctx, []) == null
        assert fss_intersection_all(ctx, []) == universal
        assert fss_union_all(ctx, [p1, p2]) == universal
        assert fss_intersection_all(ctx, [f, g, p1]) == g

    def test_equal_and_crisp(self, f, p1):
        assert fss_equal(f, f)
        assert not fss_equal(f, p1)
        assert fss_is_crisp(p1)
        assert not fss_is_crisp(f)


@settings(max_examples=1000, deadline=None)
@given(context_and_sets(3, max_points=4, max_params=3, max_denominator=12))
def test_algebra_laws(sets):
    _, a, b, c = sets
    union, meet, comp = fss_union, fss_intersection, fss_complement
    # De Morgan
    assert comp(union(a, b)) == meet(comp(a), comp(b))
    assert comp(meet(a, b)) == union(comp(a), comp(b))
    # involution
    assert comp(comp(a)) == a
    # lattice laws
    assert union(a, b) == union(b, a) and meet(a, b) == meet(b, a)
    assert union(a, union(b, c)) == union(union(a, b), c)
    assert meet(a, meet(b, c)) == meet(meet(a, b), c)
    assert union(a, meet(a, b)) == a and meet(a, union(a, b)) == a
    assert union(a, a) == a and meet(a, a) == a
    assert meet(a, union(b, c)) == union(meet(a, b), meet(a, c))
    # union is the least upper bound, intersection the greatest lower bound
    assert fss_subset(a, union(a, b)) and fss_subset(b, union(a, b))
    assert fss_subset(meet(a, b), a) and fss_subset(meet(a, b), b)
    if fss_subset(a, c) and fss_subset(b, c):
        assert fss_subset(union(a, b), c)
    if fss_subset(c, a) and fss_subset(c, b):
        assert fss_subset(c, meet(a, b))
    assert fss_subset(a, b) == (union(a, b) == b)


@given(context_and_sets(1))
def test_universal_complement_is_null(sets):
    ctx, _ = sets
    null, universal = fss_constants(ctx)
    assert fss_complement(universal) == null
