import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from models.mapping import SoftMapping
from models.soft_set import Context, matrix
from services.mapping_service import (
    compose, identity_mapping, image, is_closed_map, is_continuous, is_open_map, preimage,
)
from services.soft_set_service import (
    fss_complement, fss_constants, fss_intersection, fss_subset, fss_union,
)
from services.topology_service import generate_topology, indiscrete_topology
from utils.errors import ContextMismatch, NonTotalMapping
from tests.strategies import grades, mappings, soft_sets


@pytest.fixture
def collapse(ctx):
    """x1, x2 -> y1"""
    return SoftMapping(ctx, Context(("y1",), ("e1",)), {"x1": "y1", "x2": "y1"}, {"e1": "e1"})


class TestMappingModel:
    def test_totality(self, ctx):
        target = Context(("y1",), ("k1",))
        with pytest.raises(NonTotalMapping) as excinfo:
            SoftMapping(ctx, target, {"x1": "y1"}, {"e1": "k1"})
        assert excinfo.value.location == "point_map"
        with pytest.raises(NonTotalMapping):
            SoftMapping(ctx, target, {"x1": "y1", "x2": "y9"}, {"e1": "k1"})

    def test_flags(self, ctx, collapse):
        assert identity_mapping(ctx).is_injective
        assert identity_mapping(ctx).is_surjective
        assert collapse.is_constant and collapse.is_surjective and not collapse.is_injective

    def test_compose(self, ctx, collapse):
        assert compose(collapse, identity_mapping(ctx)) == collapse
        with pytest.raises(ContextMismatch):
            compose(identity_mapping(ctx), collapse)


class TestImagePreimage:
    def test_identity(self, ctx, f):
        m = identity_mapping(ctx)
        assert preimage(m, f) == f
        assert image(m, f) == f

    def test_constant_preimage_broadcasts(self, ctx, collapse):
        g = matrix(collapse.target, [["3/4"]])
        assert preimage(collapse, g) == matrix(ctx, [["3/4", "3/4"]])

    def test_collapse_image_takes_max(self, collapse, f):
        assert image(collapse, f) == matrix(collapse.target, [[1]])

    def test_empty_preimage_gets_zero(self, ctx, f):
        m = SoftMapping(ctx, Context(("y1", "y2"), ("e1",)), {"x1": "y1", "x2": "y1"}, {"e1": "e1"})
        assert image(m, f).grade("e1", "y2").value == 0

    def test_wrong_context(self, collapse, f):
        with pytest.raises(ContextMismatch):
            preimage(collapse, f)


class TestPredicates:
    def test_identity_on_same_topology(self, ctx, f):
        t = generate_topology(ctx, [f])
        m = identity_mapping(ctx)
        assert is_continuous(m, t, t)
        assert is_open_map(m, t, t)
        assert is_closed_map(m, t, t)

    def test_identity_finer_to_coarser_is_continuous(self, ctx, f):
        fine = generate_topology(ctx, [f])
        assert is_continuous(identity_mapping(ctx), fine, indiscrete_topology(ctx))

    def test_identity_from_indiscrete_is_not_continuous(self, ctx, f):
        check = is_continuous(identity_mapping(ctx), indiscrete_topology(ctx), generate_topology(ctx, [f]))
        assert not check
        assert check.witness == f

    def test_image_generated_target_makes_open_map(self, ctx, f, collapse):
        t1 = generate_topology(ctx, [f])
        t2 = generate_topology(collapse.target, [image(collapse, o) for o in t1.opens])
        assert is_open_map(collapse, t1, t2)

    def test_constant_map_into_indiscrete_is_not_closed(self, ctx):
        target = Context(("y1", "y2"), ("e1",))
        m = SoftMapping(ctx, target, {"x1": "y1", "x2": "y1"}, {"e1": "e1"})
        check = is_closed_map(m, indiscrete_topology(ctx), indiscrete_topology(target))
        assert not check
        assert check.witness == fss_constants(ctx)[1]


@st.composite
def mapping_with_sets(draw, surjective=False):
    m = draw(mappings(surjective=surjective))
    f1 = draw(soft_sets(m.source, grades(12)))
    f2 = draw(soft_sets(m.source, grades(12)))
    g1 = draw(soft_sets(m.target, grades(12)))
    g2 = draw(soft_sets(m.target, grades(12)))
    return m, f1, f2, g1, g2


@settings(max_examples=500, deadline=None)
@given(mapping_with_sets())
def test_mapping_identities(instance):
    m, f1, f2, g1, g2 = instance
    # preimage is a lattice homomorphism that commutes with complement
    assert preimage(m, fss_union(g1, g2)) == fss_union(preimage(m, g1), preimage(m, g2))
    assert preimage(m, fss_intersection(g1, g2)) == fss_intersection(preimage(m, g1), preimage(m, g2))
    assert preimage(m, fss_complement(g1)) == fss_complement(preimage(m, g1))
    # image distributes over union
    assert image(m, fss_union(f1, f2)) == fss_union(image(m, f1), image(m, f2))
    # Galois inequalities
    assert fss_subset(f1, preimage(m, image(m, f1)))
    assert fss_subset(image(m, preimage(m, g1)), g1)
    # adjunction
    assert fss_subset(image(m, f1), g1) == fss_subset(f1, preimage(m, g1))


@settings(max_examples=200, deadline=None)
@given(mapping_with_sets(surjective=True))
def test_onto_images_of_preimages_are_exact(instance):
    m, _, _, g1, _ = instance
    assert m.is_surjective
    assert image(m, preimage(m, g1)) == g1
