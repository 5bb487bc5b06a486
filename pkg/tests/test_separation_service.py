import pytest

from models.cover import MembershipRule
from models.soft_set import Context, matrix
from services.separation_service import is_hausdorff, member_point, separating_pair
from services.topology_service import generate_topology, indiscrete_topology
from utils.errors import UnknownLabel


class TestMemberPoint:
    def test_some_positive(self, f, g):
        assert member_point("x1", f, MembershipRule.SOME_POSITIVE)
        assert not member_point("x2", g, MembershipRule.SOME_POSITIVE)

    def test_all_one(self, f):
        assert not member_point("x1", f, MembershipRule.ALL_ONE)
        assert member_point("x2", f, MembershipRule.ALL_ONE)

    def test_all_positive_needs_every_parameter(self):
        ctx = Context(("x1",), ("e1", "e2"))
        a = matrix(ctx, [["1/2"], [0]])
        assert member_point("x1", a, MembershipRule.SOME_POSITIVE)
        assert not member_point("x1", a, MembershipRule.ALL_POSITIVE)

    def test_unknown_point(self, f):
        with pytest.raises(UnknownLabel):
            member_point("x9", f, MembershipRule.SOME_POSITIVE)

    def test_rule_parsing(self):
        assert MembershipRule.parse(" All-One ") == MembershipRule.ALL_ONE
        with pytest.raises(ValueError):
            MembershipRule.parse("most-positive")


class TestHausdorff:
    def test_single_point_is_vacuous(self):
        ctx = Context(("x1",), ("e1",))
        assert is_hausdorff(indiscrete_topology(ctx))

    @pytest.mark.parametrize("rule", list(MembershipRule))
    def test_points_separate(self, ctx, p1, p2, rule):
        t = generate_topology(ctx, [p1, p2])
        assert is_hausdorff(t, rule)
        assert separating_pair(t, "x1", "x2", rule) == (p1, p2)

    def test_indiscrete_two_points(self, ctx):
        check = is_hausdorff(indiscrete_topology(ctx), MembershipRule.SOME_POSITIVE)
        assert not check
        assert check.witness == ("x1", "x2")

    def test_overlapping_open_sets_do_not_separate(self, ctx, f):
        assert not is_hausdorff(generate_topology(ctx, [f]), MembershipRule.SOME_POSITIVE)

    def test_default_rule_comes_from_configuration(self, ctx, p1, p2):
        assert is_hausdorff(generate_topology(ctx, [p1, p2]))
