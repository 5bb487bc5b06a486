"""
Seeded random instances for audits.

Every trial draws from its own random.Random seeded with "seed:trial", so a
trial's instance depends only on (seed, trial index) and never on which
worker thread ran it or in what order.

Hypotheses are met by construction:
    - topologies come from generate_topology, so the axioms hold;
    - Hausdorff topologies include one generator per point, supported on that
      point's column only, so any two points have disjoint open neighbourhoods;
    - continuous mappings get a source topology generated from the preimages
      of every target open set.
"""
import random
from typing import Dict, List, Optional, Sequence

from models.audit_report import GeneratorSettings
from models.cover import MembershipRule
from models.grade import Grade, ONE, ZERO
from models.instance import AuditInstance
from models.mapping import SoftMapping
from models.soft_set import Context, FuzzySoftSet
from models.space import MappingDefinition, SpaceDefinition, SpaceModel, canonical_names
from models.topology import Topology
from services.grade_service import k_level_lattice
from services.mapping_service import preimage
from services.separation_service import default_rule
from services.space_service import space_topology
from services.topology_service import generate_topology
from utils.errors import CapExceeded, UnknownLabel
from utils.logger_config import LogPrefix, debug

# Names used when an instance is written out as a space file
MAIN_TOPOLOGY = "tau"
TARGET_SPACE = "Y"
TARGET_TOPOLOGY = "sigma"
MAPPING_NAME = "m"


def trial_rng(seed: int, trial: int) -> random.Random:
    return random.Random(f"{seed}:{trial}")


def random_context(
    rng: random.Random,
    settings: GeneratorSettings,
    point_prefix: str = "x",
    parameter_prefix: str = "e",
    max_points: Optional[int] = None,
    max_params: Optional[int] = None,
) -> Context:
    n_points = rng.randint(1, max_points or settings.max_points)
    n_params = rng.randint(1, max_params or settings.max_params)
    return Context(
        tuple(f"{point_prefix}{i}" for i in range(1, n_points + 1)),
        tuple(f"{parameter_prefix}{i}" for i in range(1, n_params + 1)),
    )


def random_set(rng: random.Random, ctx: Context, lattice: Sequence[Grade]) -> FuzzySoftSet:
    n_params, n_points = ctx.shape
    return FuzzySoftSet(
        ctx,
        tuple(tuple(rng.choice(lattice) for _ in range(n_points)) for _ in range(n_params)),
    )


def random_topology(
    rng: random.Random,
    ctx: Context,
    settings: GeneratorSettings,
    required: Sequence[FuzzySoftSet] = (),
) -> Topology:
    """
    Close required + 1..max_generators random sets. Random generators are
    dropped one at a time while the closure exceeds the cap.

    Raises:
        CapExceeded: the required sets alone close beyond the cap
    """
    lattice = k_level_lattice(settings.denominator)
    extras = [random_set(rng, ctx, lattice) for _ in range(rng.randint(1, settings.max_generators))]
    required = list(required)
    while True:
        try:
            return generate_topology(ctx, required + extras, cap=settings.topology_cap)
        except CapExceeded:
            if not extras:
                raise
            extras.pop()
            debug(LogPrefix.GENERATOR, f"Closure over cap {settings.topology_cap}; retrying with {len(extras)} random generators")


def separating_generators(
    rng: random.Random,
    ctx: Context,
    rule: MembershipRule,
    lattice: Sequence[Grade],
) -> List[FuzzySoftSet]:
    """One set per point, positive only on that point's column and containing it under rule"""
    positive = [g for g in lattice if g != ZERO]
    n_params, n_points = ctx.shape
    generators = []
    for j in range(n_points):
        grades = [[ZERO] * n_points for _ in range(n_params)]
        for i in range(n_params):
            grades[i][j] = ONE if rule == MembershipRule.ALL_ONE else rng.choice(positive)
        generators.append(FuzzySoftSet(ctx, tuple(tuple(row) for row in grades)))
    return generators


def hausdorff_topology(
    rng: random.Random,
    ctx: Context,
    settings: GeneratorSettings,
    rule: MembershipRule,
) -> Topology:
    lattice = k_level_lattice(settings.denominator)
    return random_topology(rng, ctx, settings, separating_generators(rng, ctx, rule, lattice))


def random_map(rng: random.Random, domain: Sequence[str], codomain: Sequence[str]) -> Dict[str, str]:
    return {label: rng.choice(codomain) for label in domain}


def random_surjection(rng: random.Random, domain: Sequence[str], codomain: Sequence[str]) -> Dict[str, str]:
    """Onto assignment: every codomain label is hit once first, the rest land anywhere"""
    if len(codomain) > len(domain):
        raise ValueError(f"no map from {len(domain)} labels onto {len(codomain)} labels")
    order = list(domain)
    rng.shuffle(order)
    targets = list(codomain)
    rng.shuffle(targets)
    table = {}
    for position, label in enumerate(order):
        table[label] = targets[position] if position < len(targets) else rng.choice(codomain)
    return {label: table[label] for label in domain}


def random_mapping(
    rng: random.Random,
    source: Context,
    settings: GeneratorSettings,
    surjective: bool = False,
) -> SoftMapping:
    """A mapping into a fresh context with y/k labels; onto targets are no larger than the source"""
    if surjective:
        target = random_context(
            rng, settings, "y", "k",
            max_points=len(source.universe), max_params=len(source.parameters),
        )
        return SoftMapping(
            source, target,
            random_surjection(rng, source.universe, target.universe),
            random_surjection(rng, source.parameters, target.parameters),
        )
    target = random_context(rng, settings, "y", "k")
    return SoftMapping(
        source, target,
        random_map(rng, source.universe, target.universe),
        random_map(rng, source.parameters, target.parameters),
    )


def continuous_source_topology(
    rng: random.Random,
    m: SoftMapping,
    target_topology: Topology,
    settings: GeneratorSettings,
) -> Topology:
    """A topology on the source making m continuous into target_topology"""
    pulled = [preimage(m, o) for o in target_topology.opens]
    return random_topology(rng, m.source, settings, pulled)


def _named_opens(t: Topology, prefix: str, sets: Dict[str, FuzzySoftSet]) -> List[str]:
    names = []
    for position, o in enumerate(t.opens, start=1):
        if o.is_null:
            names.append("NULL")
        elif o.is_universal:
            names.append("UNIV")
        else:
            name = f"{prefix}{position}"
            sets[name] = o
            names.append(name)
    return names


def instance_to_model(instance: AuditInstance) -> SpaceModel:
    """Space-file form: topology "tau" over sets o1.., target space "Y" with "sigma", mapping "m" """
    main_sets = dict(instance.sets)
    tau = _named_opens(instance.topology, "o", main_sets)
    main = SpaceDefinition(instance.context, main_sets, {MAIN_TOPOLOGY: canonical_names(tau)})

    spaces, mappings = {}, {}
    if instance.mapping is not None:
        target_sets: Dict[str, FuzzySoftSet] = {}
        topologies = {}
        if instance.target_topology is not None:
            sigma = _named_opens(instance.target_topology, "s", target_sets)
            topologies[TARGET_TOPOLOGY] = canonical_names(sigma)
        spaces[TARGET_SPACE] = SpaceDefinition(instance.mapping.target, target_sets, topologies)
        mappings[MAPPING_NAME] = MappingDefinition(instance.mapping, TARGET_SPACE)
    return SpaceModel(main, spaces, mappings, instance.rule)


def model_to_instance(model: SpaceModel, rule: Optional[MembershipRule] = None) -> AuditInstance:
    """
    Inverse of instance_to_model; sets not referenced by "tau" become the
    instance's named sets.

    Raises:
        UnknownLabel: "tau" or the mapping's target topology is missing
        TopologyAxiomViolation: a stored family is not a topology
    """
    main = model.main
    topology = space_topology(main, MAIN_TOPOLOGY)
    in_tau = set(main.topologies[MAIN_TOPOLOGY])
    sets = {name: s for name, s in main.sets.items() if name not in in_tau}

    mapping = target_topology = None
    if MAPPING_NAME in model.mappings:
        definition = model.mappings[MAPPING_NAME]
        mapping = definition.mapping
        target = model.target_space(definition)
        if target is None:
            raise UnknownLabel(MAPPING_NAME, f"mappings.{MAPPING_NAME}.to", kind="space with a topology for mapping")
        target_topology = space_topology(target, target.default_topology_name())

    return AuditInstance(
        topology=topology,
        rule=rule or model.rule or default_rule(),
        sets=sets,
        target_topology=target_topology,
        mapping=mapping,
    )
