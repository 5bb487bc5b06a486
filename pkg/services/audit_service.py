"""
Seeded audits of the compactness statements on finite models.

Each audited statement pairs a generator (a random instance meeting the
hypotheses) with a checker (the conclusion, evaluated exactly). A failing
trial is serialized as a space file, parsed back and checked again; the
record keeps whether the violation reproduced.

Which statements can fail here:
    prop3.5, thm3.8, thm3.12 hold in every finite model, so a counterexample
    is a defect in this library.
    prop3.7 and thm3.10 rely on point-set reasoning that fuzzy grades do not
    support; their counterexample counts are findings, per membership rule.
"""
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations, islice
from pathlib import Path
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple, Union

from models.audit_report import AuditReport, CounterexampleRecord, GeneratorSettings
from models.cover import CoverFamily, MembershipRule
from models.instance import AuditInstance, TrialOutcome
from services.cover_service import (
    cell_masks, is_compact, is_compact_space, is_cover, min_subcover, subset_indices, subset_unions,
)
from services.fip_service import audit_complement_disjointness, fip_duality_check, has_fip
from services.instance_service import (
    continuous_source_topology, hausdorff_topology, instance_to_model, model_to_instance,
    random_context, random_mapping, random_set, random_topology, trial_rng,
)
from services.grade_service import k_level_lattice
from services.mapping_service import image, is_closed_map, preimage
from services.soft_set_service import fss_complement, fss_intersection_all, fss_universal
from services.topology_service import closed_family, is_closed
from utils import config
from utils.command_sets import rule_names, rule_sensitive_theorems, theorem_ids
from utils.errors import InvalidGeneratorSettings, UnknownLabel
from utils.logger_config import LogPrefix, debug, info, warn
from utils.paths import ensure_directory
from utils.space_io import parse_space_file, serialize

Generator = Callable[[random.Random, GeneratorSettings, MembershipRule], AuditInstance]
Checker = Callable[[AuditInstance], TrialOutcome]


@dataclass(frozen=True)
class StatementAudit:
    theorem: str
    generate: Generator
    check: Checker


def bounded_subfamilies(n: int, limit: Optional[int] = None) -> Iterator[Tuple[int, ...]]:
    """
    Non-empty index subsets of range(n): all of them up to limit members,
    otherwise those with at most three members followed by the full family.
    """
    limit = limit or config.FAMILY_ENUMERATION_LIMIT
    if n <= limit:
        for size in range(1, n + 1):
            yield from combinations(range(n), size)
        return
    for size in range(1, 4):
        yield from combinations(range(n), size)
    yield tuple(range(n))


def subfamily_unions(masks: Sequence[int]) -> Tuple[List[Tuple[int, int]], int]:
    """
    (subset bitmask, OR of its member masks) for every non-empty subfamily.

    Families with more than ENUMERATION_CAP subfamilies are walked on the first
    ENUMERATION_CAP entries of bounded_subfamilies instead.

    Returns:
        (pairs, skipped): skipped counts the subfamilies left out of the walk
    """
    n = len(masks)
    total = (1 << n) - 1
    if total < config.ENUMERATION_CAP:
        unions = subset_unions(masks)
        return [(subset, unions[subset]) for subset in range(1, total + 1)], 0

    pairs = []
    for indices in islice(bounded_subfamilies(n), config.ENUMERATION_CAP):
        subset = union = 0
        for i in indices:
            subset |= 1 << i
            union |= masks[i]
        pairs.append((subset, union))
    debug(LogPrefix.AUDIT, f"Walking {len(pairs)} of {total} subfamilies of {n} sets")
    return pairs, total - len(pairs)


def _detail_sample(n: int) -> Iterator[Tuple[int, ...]]:
    return islice(bounded_subfamilies(n), config.AUDIT_DETAIL_LIMIT)


# --- prop3.5: a closed subset of a compact space is compact ------------------

def _generate_closed_subset(rng, settings: GeneratorSettings, rule: MembershipRule) -> AuditInstance:
    ctx = random_context(rng, settings)
    t = random_topology(rng, ctx, settings)
    g = rng.choice(closed_family(t))
    return AuditInstance(t, rule, {"g": g})


def check_closed_subset(instance: AuditInstance) -> TrialOutcome:
    g = instance.set_named("g")
    record = audit_complement_disjointness(g)
    observations = {
        "closed sets meeting their complement": int(not record.disjoint),
        "disjointness records inconsistent with crispness": int(not record.consistent),
    }
    compact = is_compact(instance.topology, g)
    if not compact:
        return TrialOutcome("closed set g is not compact", str(g), observations)
    return TrialOutcome(observations=observations)


# --- prop3.7: a compact set in a Hausdorff space is closed --------------------

def _generate_hausdorff_set(rng, settings: GeneratorSettings, rule: MembershipRule) -> AuditInstance:
    ctx = random_context(rng, settings)
    t = hausdorff_topology(rng, ctx, settings, rule)
    g = random_set(rng, ctx, k_level_lattice(settings.denominator))
    return AuditInstance(t, rule, {"g": g})


def check_hausdorff_compact_closed(instance: AuditInstance) -> TrialOutcome:
    g = instance.set_named("g")
    if not is_closed(instance.topology, g):
        return TrialOutcome(
            f"g is compact in a Hausdorff space ({instance.rule}) but not closed",
            f"g = {g}, complement {fss_complement(g)} is not open",
        )
    return TrialOutcome()


# --- thm3.8: continuous onto images of compact spaces are compact ----------------

def _generate_continuous_onto(rng, settings: GeneratorSettings, rule: MembershipRule) -> AuditInstance:
    ctx = random_context(rng, settings)
    m = random_mapping(rng, ctx, settings, surjective=True)
    sigma = random_topology(rng, m.target, settings)
    tau = continuous_source_topology(rng, m, sigma, settings)
    return AuditInstance(tau, rule, {}, sigma, m)


def check_continuous_image_compact(instance: AuditInstance) -> TrialOutcome:
    """
    Every subfamily of the target's open sets: it covers the target exactly
    when its preimages cover the source. A pulled-back subcover therefore
    pushes forward to a subcover of the target. The set-level chain (preimage,
    min_subcover, image) is also run on a bounded sample of open covers.
    """
    m, tau, sigma = instance.mapping, instance.topology, instance.target_topology
    source_top, target_top = fss_universal(m.source), fss_universal(m.target)
    if image(m, source_top) != target_top:
        return TrialOutcome("image of the universal set is not universal", str(image(m, source_top)))

    opens = list(sigma.opens)
    pulled = [preimage(m, g) for g in opens]
    for g, p in zip(opens, pulled):
        if p not in tau:
            return TrialOutcome("preimage of an open set is not open", f"{g} pulls back to {p}")
        if image(m, p) != g:
            return TrialOutcome("image of a preimage differs from the open set", f"{g} -> {p} -> {image(m, p)}")

    target_need, target_masks = cell_masks(target_top, opens)
    source_need, source_masks = cell_masks(source_top, pulled)
    target_walk, skipped = subfamily_unions(target_masks)
    source_walk, _ = subfamily_unions(source_masks)
    covers = 0
    for (subset, target_union), (_, source_union) in zip(target_walk, source_walk):
        covers_target = target_union & target_need == target_need
        covers_source = source_union & source_need == source_need
        covers += covers_target
        if covers_target and not covers_source:
            return TrialOutcome(
                "preimage family does not cover the source",
                f"cover {list(subset_indices(subset, len(opens)))}",
            )
        if covers_source and not covers_target:
            return TrialOutcome(
                "pushed-forward subcover does not cover the target",
                f"subfamily {list(subset_indices(subset, len(opens)))}",
            )

    for indices in _detail_sample(len(opens)):
        members = [opens[i] for i in indices]
        if not is_cover(CoverFamily(m.target, members), target_top):
            continue
        subcover = min_subcover(CoverFamily(m.source, [pulled[i] for i in indices]), source_top)
        pushed = [members[i] for i in subcover.indices]
        if not is_cover(CoverFamily(m.target, pushed), target_top):
            return TrialOutcome(
                "pushed-forward subcover does not cover the target",
                f"cover {list(indices)}, subcover {list(subcover.indices)}",
            )

    return TrialOutcome(observations={
        "target open covers walked": covers,
        "target subfamilies skipped": skipped,
    })


# --- thm3.10: continuous maps into Hausdorff spaces are closed -----------------

def _generate_continuous_hausdorff(rng, settings: GeneratorSettings, rule: MembershipRule) -> AuditInstance:
    ctx = random_context(rng, settings)
    m = random_mapping(rng, ctx, settings)
    sigma = hausdorff_topology(rng, m.target, settings, rule)
    tau = continuous_source_topology(rng, m, sigma, settings)
    return AuditInstance(tau, rule, {}, sigma, m)


def check_closed_map(instance: AuditInstance) -> TrialOutcome:
    result = is_closed_map(instance.mapping, instance.topology, instance.target_topology)
    if not result:
        return TrialOutcome(
            f"continuous map into a Hausdorff space ({instance.rule}) is not closed",
            result.detail,
        )
    return TrialOutcome()


# --- thm3.12: compact iff closed families with FIP have non-null intersection --------

def _generate_space(rng, settings: GeneratorSettings, rule: MembershipRule) -> AuditInstance:
    ctx = random_context(rng, settings)
    return AuditInstance(random_topology(rng, ctx, settings), rule)


def check_fip_characterisation(instance: AuditInstance) -> TrialOutcome:
    """
    Walk every closed family. A family meets in null exactly when its
    complements cover the universal set, i.e. when the OR of the members'
    zero-cell masks is full. Over a finite family FIP is the same as a
    non-null full intersection, so compactness requires no FIP family to
    meet in null. A bounded sample also gets the set-level chain: the
    duality identity, has_fip, and the subcover of the complements.
    """
    t = instance.topology
    ctx = t.context
    top = fss_universal(ctx)
    compact = is_compact_space(t)
    closed = closed_family(t)

    full, zero_masks = cell_masks(top, [fss_complement(c) for c in closed])
    walk, skipped = subfamily_unions(zero_masks)
    null_meets = sum(zeros == full for _, zeros in walk)
    every_fip_family_meets = True

    for indices in _detail_sample(len(closed)):
        family = [closed[i] for i in indices]
        if not fip_duality_check(family, ctx):
            return TrialOutcome("intersection differs from the complement of the union of complements", str(family))
        meet = fss_intersection_all(ctx, family)
        zeros = 0
        for i in indices:
            zeros |= zero_masks[i]
        if (zeros == full) != meet.is_null:
            return TrialOutcome("zero-cell masks disagree with the intersection", f"closed sets {list(indices)}")
        fip = has_fip(family)
        if fip and meet.is_null:
            every_fip_family_meets = False
            if compact:
                return TrialOutcome(
                    "compact space has a closed FIP family with null intersection",
                    f"closed sets {list(indices)}",
                )
        if not meet.is_null:
            continue

        # Null intersection: the complements are an open cover of the universal set,
        # and a subcover picks a finite subfamily that already meets in null.
        complements = [fss_complement(c) for c in family]
        if any(o not in t for o in complements):
            return TrialOutcome("complement of a closed set is not open", str(family))
        opens = CoverFamily(ctx, complements)
        if not is_cover(opens, top):
            return TrialOutcome("complements of a null-meeting family do not cover", f"closed sets {list(indices)}")
        subcover = min_subcover(opens, top)
        finite = [family[i] for i in subcover.indices]
        if not fss_intersection_all(ctx, finite).is_null:
            return TrialOutcome(
                "subcover's subfamily has non-null intersection",
                f"closed sets {list(indices)}, subfamily {list(subcover.indices)}",
            )
        if fip:
            return TrialOutcome("family with null intersection reported as FIP", f"closed sets {list(indices)}")

    if every_fip_family_meets and not compact:
        return TrialOutcome("every closed FIP family meets, yet the space is not compact", str(t.opens))
    return TrialOutcome(observations={
        "closed families examined": len(walk),
        "closed families meeting in null": null_meets,
        "closed families skipped": skipped,
    })


STATEMENTS: Dict[str, StatementAudit] = {
    "prop3.5": StatementAudit("prop3.5", _generate_closed_subset, check_closed_subset),
    "prop3.7": StatementAudit("prop3.7", _generate_hausdorff_set, check_hausdorff_compact_closed),
    "thm3.8": StatementAudit("thm3.8", _generate_continuous_onto, check_continuous_image_compact),
    "thm3.10": StatementAudit("thm3.10", _generate_continuous_hausdorff, check_closed_map),
    "thm3.12": StatementAudit("thm3.12", _generate_space, check_fip_characterisation),
}


def statement(theorem_id: str) -> StatementAudit:
    try:
        return STATEMENTS[theorem_id.strip().lower()]
    except KeyError:
        raise UnknownLabel(theorem_id, "--theorem", kind=f"theorem (choose from {', '.join(theorem_ids)})") from None


def generate_instance(theorem_id: str, settings: GeneratorSettings, seed: int, trial: int = 0) -> AuditInstance:
    """The instance trial `trial` of an audit would check"""
    audit = statement(theorem_id)
    return audit.generate(trial_rng(seed, trial), settings, MembershipRule.parse(settings.rule))


def recheck(theorem_id: str, text: str, rule: Optional[MembershipRule] = None) -> TrialOutcome:
    """Re-run a statement's checker on a serialized instance"""
    instance = model_to_instance(parse_space_file(text), rule)
    return statement(theorem_id).check(instance)


def _run_trial(
    audit: StatementAudit,
    settings: GeneratorSettings,
    seed: int,
    trial: int,
) -> Tuple[TrialOutcome, Optional[CounterexampleRecord]]:
    rule = MembershipRule.parse(settings.rule)
    instance = audit.generate(trial_rng(seed, trial), settings, rule)
    outcome = audit.check(instance)
    if outcome.verified:
        return outcome, None

    text = serialize(instance_to_model(instance))
    reproduced = recheck(audit.theorem, text, rule)
    revalidated = reproduced.violation == outcome.violation
    if not revalidated:
        warn(LogPrefix.AUDIT, f"{audit.theorem} trial {trial}: violation did not reproduce from its serialized instance")
    record = CounterexampleRecord(
        trial=trial,
        violation=outcome.violation,
        witness=outcome.witness,
        instance=text,
        revalidated=revalidated,
    )
    return outcome, record


def audit_theorem(
    theorem_id: str,
    settings: Optional[GeneratorSettings] = None,
    seed: int = 0,
    trials: int = 50,
    workers: Optional[int] = None,
) -> AuditReport:
    """
    Run `trials` seeded trials of one statement.

    Trials may run on worker threads; results are merged in trial order so
    the report is identical for any worker count.

    Raises:
        UnknownLabel: theorem_id is not an audited statement
        InvalidGeneratorSettings: trials < 1
    """
    audit = statement(theorem_id)
    settings = settings or GeneratorSettings()
    if trials < 1:
        raise InvalidGeneratorSettings(f"trials must be at least 1, got {trials}", "trials")
    workers = workers or config.AUDIT_WORKERS

    info(LogPrefix.AUDIT, f"Auditing {audit.theorem} (seed={seed}, trials={trials}, rule={settings.rule}, workers={workers})")
    with ThreadPoolExecutor(max_workers=workers, thread_name_prefix="audit-") as pool:
        results = list(pool.map(lambda trial: _run_trial(audit, settings, seed, trial), range(trials)))

    observations: Dict[str, int] = {}
    counterexamples = []
    for outcome, record in results:
        for key, value in outcome.observations.items():
            observations[key] = observations.get(key, 0) + value
        if record is not None:
            counterexamples.append(record)

    report = AuditReport(
        theorem=audit.theorem,
        seed=seed,
        trials=trials,
        verified=trials - len(counterexamples),
        rule=settings.rule,
        counterexamples=counterexamples,
        observations=observations,
    )
    debug(LogPrefix.AUDIT, f"{audit.theorem}: {report.verified}/{trials} verified")
    return report


def audit_all(
    settings: Optional[GeneratorSettings] = None,
    seed: int = 0,
    trials: int = 50,
    workers: Optional[int] = None,
) -> List[AuditReport]:
    """Every statement; rule-sensitive ones once per membership rule"""
    settings = settings or GeneratorSettings()
    reports = []
    for theorem_id in theorem_ids:
        rules = rule_names if theorem_id in rule_sensitive_theorems else (settings.rule,)
        for rule in rules:
            ruled = settings.model_copy(update={"rule": rule})
            reports.append(audit_theorem(theorem_id, ruled, seed, trials, workers))
    return reports


def dump_counterexamples(report: AuditReport, directory: Union[str, Path]) -> List[Path]:
    """Write each counterexample instance as a standalone space file"""
    if not report.counterexamples:
        return []
    directory = ensure_directory(Path(directory))
    paths = []
    for record in report.counterexamples:
        path = directory / f"{report.theorem}-{report.rule}-trial{record.trial}.json"
        path.write_text(record.instance, encoding="utf-8")
        paths.append(path)
    info(LogPrefix.AUDIT, f"Wrote {len(paths)} counterexample files to {directory}")
    return paths
