from hypothesis import given, settings
from hypothesis import strategies as st

from services.fip_service import audit_complement_disjointness, fip_duality_check, has_fip
from services.soft_set_service import fss_constants
from tests.strategies import contexts, crisp_grades, families, grades, soft_sets


class TestFip:
    def test_nested_pair_has_fip(self, f, g):
        assert has_fip([f, g])

    def test_disjoint_points_fail(self, p1, p2):
        check = has_fip([p1, p2])
        assert not check
        assert check.witness == (0, 1)

    def test_singleton(self, f):
        assert has_fip([f])

    def test_null_member_is_its_own_witness(self, ctx, f):
        check = has_fip([f, fss_constants(ctx)[0]])
        assert check.witness == (1,)

    def test_large_family_shrinks_to_minimal_witness(self, f, g, p1, p2):
        check = has_fip([f, g, p1, p2], exhaustive_limit=1)
        assert not check
        assert check.witness == (2, 3)


class TestDuality:
    def test_examples(self, ctx, f, g):
        assert fip_duality_check([f, g])
        assert fip_duality_check([fss_constants(ctx)[0]])
        assert fip_duality_check([], ctx)

    @settings(max_examples=100, deadline=None)
    @given(families(min_size=1, max_size=6, max_denominator=12))
    def test_random_families(self, family):
        ctx, members = family
        assert fip_duality_check(members, ctx)


class TestComplementDisjointness:
    def test_examples(self, ctx, f, p1):
        record = audit_complement_disjointness(p1)
        assert (record.disjoint, record.crisp) == (True, True)
        record = audit_complement_disjointness(f)
        assert (record.disjoint, record.crisp) == (False, False)
        record = audit_complement_disjointness(fss_constants(ctx)[0])
        assert (record.disjoint, record.crisp) == (True, True)


@st.composite
def mixed_sets(draw):
    ctx = draw(contexts(4, 3))
    grade_strategy = draw(st.sampled_from([crisp_grades(), grades(12)]))
    return draw(soft_sets(ctx, grade_strategy))


@settings(max_examples=1000, deadline=None)
@given(mixed_sets())
def test_crisp_exactly_when_disjoint_from_complement(a):
    record = audit_complement_disjointness(a)
    assert record.consistent
    assert record.disjoint == a.is_crisp
