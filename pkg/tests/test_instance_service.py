import pytest

from models.audit_report import GeneratorSettings
from models.cover import MembershipRule
from services.audit_service import generate_instance
from services.instance_service import (
    hausdorff_topology, instance_to_model, model_to_instance, random_context, random_surjection, trial_rng,
)
from services.mapping_service import is_continuous
from services.separation_service import is_hausdorff
from utils.space_io import parse_space_file, serialize

SETTINGS = GeneratorSettings()


def test_trial_streams_are_independent_of_order():
    first = [trial_rng(7, trial).random() for trial in range(5)]
    second = [trial_rng(7, trial).random() for trial in reversed(range(5))]
    assert first == list(reversed(second))
    assert trial_rng(7, 0).random() != trial_rng(8, 0).random()


def test_contexts_stay_within_settings():
    for trial in range(50):
        ctx = random_context(trial_rng(0, trial), SETTINGS)
        assert 1 <= len(ctx.universe) <= SETTINGS.max_points
        assert 1 <= len(ctx.parameters) <= SETTINGS.max_params


@pytest.mark.parametrize("rule", list(MembershipRule))
def test_hausdorff_topologies_separate_points(rule):
    for trial in range(50):
        rng = trial_rng(3, trial)
        ctx = random_context(rng, SETTINGS)
        t = hausdorff_topology(rng, ctx, SETTINGS, rule)
        assert is_hausdorff(t, rule)
        assert len(t) <= SETTINGS.topology_cap


@pytest.mark.parametrize("theorem", ["thm3.8", "thm3.10"])
def test_generated_mappings_are_continuous(theorem):
    for seed in range(50):
        instance = generate_instance(theorem, SETTINGS, seed)
        assert is_continuous(instance.mapping, instance.topology, instance.target_topology)
        if theorem == "thm3.8":
            assert instance.mapping.is_surjective


def test_surjection_hits_every_label():
    for trial in range(20):
        table = random_surjection(trial_rng(1, trial), ["a", "b", "c"], ["u", "v"])
        assert set(table) == {"a", "b", "c"}
        assert set(table.values()) == {"u", "v"}


def test_surjection_needs_a_smaller_codomain():
    with pytest.raises(ValueError):
        random_surjection(trial_rng(0, 0), ["a"], ["u", "v"])


def test_generation_is_deterministic():
    for theorem in ("prop3.5", "prop3.7", "thm3.8", "thm3.10", "thm3.12"):
        a = serialize(instance_to_model(generate_instance(theorem, SETTINGS, 11, trial=4)))
        b = serialize(instance_to_model(generate_instance(theorem, SETTINGS, 11, trial=4)))
        assert a == b


@pytest.mark.parametrize("theorem", ["prop3.5", "prop3.7", "thm3.8", "thm3.10", "thm3.12"])
def test_model_round_trip(theorem):
    for seed in range(20):
        instance = generate_instance(theorem, SETTINGS, seed)
        restored = model_to_instance(parse_space_file(serialize(instance_to_model(instance))))
        assert restored.topology.opens == instance.topology.opens
        assert restored.sets == instance.sets
        assert restored.rule == instance.rule
        if instance.mapping is not None:
            assert restored.mapping == instance.mapping
            assert restored.target_topology.opens == instance.target_topology.opens
