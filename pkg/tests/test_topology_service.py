from itertools import combinations, product

import pytest
from hypothesis import given, settings

from models.soft_set import Context, matrix
from models.topology import Topology
from services.grade_service import k_level_lattice
from services.soft_set_service import fss_complement, fss_constants, fss_intersection, fss_union
from services.topology_service import (
    closed_family, generate_topology, indiscrete_topology, is_closed, is_finer, is_open, validate_topology,
)
from tests.strategies import families
from utils.errors import CapExceeded, ContextMismatch


class TestValidate:
    def test_indiscrete_is_valid(self, ctx):
        report = validate_topology(ctx, list(fss_constants(ctx)))
        assert report.ok
        assert len(report.topology) == 2

    def test_single_extra_set(self, ctx, f):
        null, universal = fss_constants(ctx)
        assert validate_topology(ctx, [null, universal, f])

    def test_missing_intersection_is_reported(self, ctx, f, p1, g):
        null, universal = fss_constants(ctx)
        report = validate_topology(ctx, [null, universal, f, p1])
        assert not report.ok
        assert report.topology is None
        missing = [(v.axiom, v.witness) for v in report.violations]
        assert ("intersection", g) in missing

    def test_missing_constants(self, ctx, f):
        report = validate_topology(ctx, [f])
        assert [v.axiom for v in report.violations][:2] == ["null", "universal"]

    def test_rejects_foreign_members(self, ctx):
        other = Context(("x1",), ("e1",))
        with pytest.raises(ContextMismatch):
            validate_topology(ctx, list(fss_constants(other)))


class TestGenerate:
    def test_no_generators_is_indiscrete(self, ctx):
        assert generate_topology(ctx, []) == indiscrete_topology(ctx)

    def test_closure(self, ctx, f, p1, g):
        null, universal = fss_constants(ctx)
        t = generate_topology(ctx, [f, p1])
        assert set(t.opens) == {null, universal, f, p1, g}

    def test_universal_generator_adds_nothing(self, ctx):
        _, universal = fss_constants(ctx)
        assert len(generate_topology(ctx, [universal])) == 2

    def test_canonical_order_is_structural(self, ctx, f, p1):
        assert generate_topology(ctx, [f, p1]) == generate_topology(ctx, [p1, f, p1])

    def test_cap(self, ctx, f, p1):
        with pytest.raises(CapExceeded) as excinfo:
            generate_topology(ctx, [f, p1], cap=3)
        assert excinfo.value.cap == 3


class TestOpenClosed:
    def test_open_and_closed(self, ctx, f, g):
        t = generate_topology(ctx, [f])
        _, universal = fss_constants(ctx)
        assert is_open(t, universal)
        assert is_closed(t, fss_constants(ctx)[0])
        assert is_closed(t, g)
        assert not is_open(t, g)

    def test_finer(self, ctx, f):
        t = generate_topology(ctx, [f])
        indiscrete = indiscrete_topology(ctx)
        assert is_finer(t, t)
        assert is_finer(t, indiscrete)
        assert not is_finer(indiscrete, t)

    def test_closed_family(self, ctx, p1, p2):
        null, universal = fss_constants(ctx)
        assert set(closed_family(indiscrete_topology(ctx))) == {null, universal}
        t = generate_topology(ctx, [p1])
        assert set(closed_family(t)) == {null, universal, p2}
        assert len(closed_family(t)) == len(t.opens)


def _brute_closure(ctx, generators):
    known = set(fss_constants(ctx)) | set(generators)
    while True:
        grown = set(known)
        for a, b in product(known, repeat=2):
            grown.add(fss_union(a, b))
            grown.add(fss_intersection(a, b))
        if grown == known:
            return known
        known = grown


def test_generated_topologies_are_minimal_over_the_half_lattice():
    """Every family of at most three generators over X={x1,x2}, E={e1}, grades in {0,1/2,1}"""
    ctx = Context(("x1", "x2"), ("e1",))
    lattice = k_level_lattice(2)
    universe_of_sets = [matrix(ctx, [[a, b]]) for a, b in product(lattice, repeat=2)]
    null, universal = fss_constants(ctx)
    others = [s for s in universe_of_sets if s not in (null, universal)]

    valid_topologies = []
    for size in range(len(others) + 1):
        for extra in combinations(others, size):
            report = validate_topology(ctx, [null, universal, *extra])
            if report.ok:
                valid_topologies.append(set(report.family))

    for size in range(4):
        for generators in combinations(universe_of_sets, size):
            t = generate_topology(ctx, list(generators))
            assert validate_topology(ctx, list(t.opens)).ok
            assert set(t.opens) == _brute_closure(ctx, generators)
            containing = [v for v in valid_topologies if set(generators) <= v]
            assert containing
            assert all(set(t.opens) <= v for v in containing)


def test_topology_canonicalises_members(ctx, f, p1):
    null, universal = fss_constants(ctx)
    t = Topology(ctx, [f, universal, null, f, p1])
    assert t.opens[0] == null and t.opens[-1] == universal
    assert len(t) == 4
    assert fss_complement(f) not in t


@settings(max_examples=100, deadline=None)
@given(families(min_size=1, max_size=3, max_denominator=4))
def test_closed_family_is_closed_under_union_and_intersection(family):
    ctx, members = family
    closed = set(closed_family(generate_topology(ctx, members, cap=4096)))
    assert set(fss_constants(ctx)) <= closed
    for a, b in product(closed, repeat=2):
        assert fss_union(a, b) in closed
        assert fss_intersection(a, b) in closed


@settings(max_examples=100, deadline=None)
@given(families(min_size=3, max_size=3, max_denominator=2))
def test_finer_is_a_partial_order(family):
    ctx, (a, b, c) = family
    chain = [generate_topology(ctx, generators) for generators in ([a], [a, b], [a, b, c])]
    others = [generate_topology(ctx, [b]), generate_topology(ctx, [c]), indiscrete_topology(ctx)]
    topologies = chain + others

    assert is_finer(chain[1], chain[0])
    assert is_finer(chain[2], chain[1])
    assert is_finer(chain[2], chain[0])
    for t in topologies:
        assert is_finer(t, t)
    for t1, t2, t3 in product(topologies, repeat=3):
        if is_finer(t1, t2) and is_finer(t2, t3):
            assert is_finer(t1, t3)
    for t1, t2 in combinations(topologies, 2):
        if is_finer(t1, t2) and is_finer(t2, t1):
            assert set(t1.opens) == set(t2.opens)
