"""
Command Handler - one function per CLI subcommand.
Every handler returns (report_text, exit_code): 0 the property holds,
1 it fails (the report carries the witness). Errors propagate to main.cli,
which maps them to exit code 2.
"""
from argparse import Namespace
from typing import Callable, Dict, Optional, Tuple

from handlers.report_formatter import (
    format_certificate, format_check, format_subcover, format_validation, set_label,
)
from models.audit_report import GeneratorSettings
from models.checks import PropertyCheck
from models.cover import CoverFamily, MembershipRule, SubcoverMode
from models.space import SpaceDefinition, SpaceModel, UNIVERSAL_NAME
from models.topology import Topology
from services.audit_service import (
    audit_all, audit_theorem, dump_counterexamples, generate_instance, recheck,
)
from services.cover_service import compactness_certificate, min_subcover
from services.fip_service import fip_duality_check, has_fip
from services.instance_service import instance_to_model
from services.mapping_service import is_closed_map, is_continuous, is_open_map
from services.separation_service import default_rule, is_hausdorff
from services.space_service import space_topology, topology_report
from services.topology_service import is_closed, is_open
from utils.command_sets import all_theorems, theorem_ids
from utils.errors import NotACover, UnknownLabel
from utils.logger_config import LogPrefix, info
from utils.space_io import load_space_file, serialize

HandlerResult = Tuple[str, int]

# ============================================================
# SHARED LOOKUPS
# ============================================================

def _load(args: Namespace) -> SpaceModel:
    return load_space_file(args.file, validate=not args.no_validate)


def _rule(args: Namespace, model: Optional[SpaceModel] = None) -> MembershipRule:
    if args.rule:
        return MembershipRule.parse(args.rule)
    if model is not None and model.rule is not None:
        return model.rule
    return default_rule()


def _topology(space: SpaceDefinition, name: Optional[str], flag: str = "--topology") -> Topology:
    name = name or space.default_topology_name(flag)
    return space_topology(space, name, flag)


def _target_name(args: Namespace) -> str:
    return args.target or UNIVERSAL_NAME


def _settings(args: Namespace, rule: Optional[str] = None) -> GeneratorSettings:
    values = {"rule": rule or args.rule or default_rule().value}
    for key in ("max_points", "max_params", "denominator"):
        if getattr(args, key, None) is not None:
            values[key] = getattr(args, key)
    if getattr(args, "cap", None) is not None:
        values["topology_cap"] = args.cap
    return GeneratorSettings.build(**values)


def _result(text: str, holds: bool) -> HandlerResult:
    return text, 0 if holds else 1

# ============================================================
# FILE COMMANDS
# ============================================================

def handle_validate(args: Namespace) -> HandlerResult:
    """Report every topology family of every space; exit 1 if any fails an axiom"""
    model = _load(args)
    lines = []
    valid = True
    spaces = [("SELF", model.main)] + sorted(model.spaces.items())
    for space_name, space in spaces:
        names = [args.topology] if args.topology and space is model.main else sorted(space.topologies)
        for name in names:
            report = topology_report(space, name, "--topology")
            valid = valid and report.ok
            lines.extend(format_validation(space_name, name, report, space))
    for name in sorted(model.mappings):
        m = model.mappings[name].mapping
        lines.append(
            f"mapping {name}: total ({'injective' if m.is_injective else 'not injective'}, "
            f"{'surjective' if m.is_surjective else 'not surjective'})"
        )
    if not lines:
        lines.append("no topologies declared")
    return _result("\n".join(lines) + "\n", valid)


def handle_compact(args: Namespace) -> HandlerResult:
    model = _load(args)
    t = _topology(model.main, args.topology)
    target = model.main.set_named(_target_name(args), "--target")
    certificate = compactness_certificate(t, target, cap=args.cap, collect=False)
    return _result(format_certificate(certificate, model.main, t.opens, _target_name(args)), certificate.compact)


def handle_subcover(args: Namespace) -> HandlerResult:
    model = _load(args)
    space = model.main
    if not args.sets:
        raise UnknownLabel("<none>", "--sets", kind="set list")
    members = space.sets_named(args.sets, "--sets")
    target_name = _target_name(args)
    target = space.set_named(target_name, "--target")

    if args.topology:
        t = _topology(space, args.topology)
        not_open = [name for name, s in zip(args.sets, members) if not is_open(t, s)]
        if not_open:
            return f"not an open cover: {', '.join(not_open)} not open in {args.topology}\n", 1

    try:
        result = min_subcover(CoverFamily(space.context, members), target, SubcoverMode(args.mode), args.budget)
    except NotACover as e:
        return format_check(f"cover of {target_name}", PropertyCheck.fail(e.witness, str(e))), 1
    return format_subcover(result, args.sets, target_name), 0


def handle_hausdorff(args: Namespace) -> HandlerResult:
    model = _load(args)
    rule = _rule(args, model)
    check = is_hausdorff(_topology(model.main, args.topology), rule)
    witness = f"({check.witness[0]},{check.witness[1]})" if not check else None
    return _result(format_check(f"hausdorff ({rule})", check, witness), check.holds)


def handle_closed(args: Namespace) -> HandlerResult:
    model = _load(args)
    t = _topology(model.main, args.topology)
    target_name = _target_name(args)
    holds = is_closed(t, model.main.set_named(target_name, "--target"))
    return _result(f"closed ({target_name}): {'yes' if holds else 'no'}\n", holds)


def _mapping_spaces(args: Namespace, model: SpaceModel):
    if not args.map:
        raise UnknownLabel("<none>", "--map", kind="mapping")
    definition = model.mapping(args.map, "--map")
    target = model.target_space(definition)
    if target is None:
        raise UnknownLabel(args.map, "--map", kind="mapping with a topologised target")
    t1 = _topology(model.main, args.topology)
    t2 = _topology(target, args.target_topology, "--target-topology")
    return definition.mapping, t1, t2, target


def _mapping_command(title: str, predicate: Callable) -> Callable[[Namespace], HandlerResult]:
    def handle(args: Namespace) -> HandlerResult:
        model = _load(args)
        m, t1, t2, target = _mapping_spaces(args, model)
        check = predicate(m, t1, t2)
        witness = None
        if not check:
            space = target if predicate is is_continuous else model.main
            witness = set_label(space, check.witness)
        return _result(format_check(f"{title} ({args.map})", check, witness), check.holds)
    return handle


handle_continuous = _mapping_command("continuous", is_continuous)
handle_openmap = _mapping_command("open map", is_open_map)
handle_closedmap = _mapping_command("closed map", is_closed_map)


def handle_fip(args: Namespace) -> HandlerResult:
    model = _load(args)
    if not args.sets:
        raise UnknownLabel("<none>", "--sets", kind="set list")
    family = model.main.sets_named(args.sets, "--sets")
    check = has_fip(family)
    witness = None
    if not check:
        witness = "{" + ", ".join(args.sets[i] for i in check.witness) + "}"
    text = format_check("finite intersection property", check, witness)
    text += f"duality identity: {'holds' if fip_duality_check(family, model.main.context) else 'FAILS'}\n"
    return _result(text, check.holds)


def handle_format(args: Namespace) -> HandlerResult:
    return serialize(_load(args)), 0


def handle_recheck(args: Namespace) -> HandlerResult:
    """Exit 1 when the stored counterexample still violates the statement"""
    with open(args.file, "r", encoding="utf-8") as f:
        text = f.read()
    theorem = args.theorem if args.theorem and args.theorem != all_theorems else None
    if theorem is None:
        raise UnknownLabel(args.theorem or "<none>", "--theorem", kind="theorem")
    outcome = recheck(theorem, text, MembershipRule.parse(args.rule) if args.rule else None)
    if outcome.verified:
        return f"recheck {theorem}: conclusion holds\n", 0
    lines = [f"recheck {theorem}: violation reproduced", f"  {outcome.violation}"]
    if outcome.witness:
        lines.append(f"  witness: {outcome.witness}")
    return "\n".join(lines) + "\n", 1

# ============================================================
# GENERATOR COMMANDS
# ============================================================

def handle_generate(args: Namespace) -> HandlerResult:
    """Print the first instance an audit with this seed would check, as a space file"""
    theorem = args.theorem if args.theorem and args.theorem != all_theorems else "thm3.12"
    instance = generate_instance(theorem, _settings(args), args.seed)
    return serialize(instance_to_model(instance)), 0


def handle_audit(args: Namespace) -> HandlerResult:
    theorem = args.theorem or all_theorems
    settings = _settings(args)
    if theorem != all_theorems:
        reports = [audit_theorem(theorem, settings, args.seed, args.trials, args.workers)]
    elif args.rule:
        # One explicit rule: every statement once, under that rule
        reports = [audit_theorem(t, settings, args.seed, args.trials, args.workers) for t in theorem_ids]
    else:
        reports = audit_all(settings, args.seed, args.trials, args.workers)

    if args.dump_dir:
        for report in reports:
            dump_counterexamples(report, args.dump_dir)

    passed = all(report.passed for report in reports)
    info(LogPrefix.AUDIT, f"{len(reports)} audits finished, {'all verified' if passed else 'counterexamples found'}")
    return "".join(report.to_text() for report in reports), 0 if passed else 1


COMMAND_HANDLERS: Dict[str, Callable[[Namespace], HandlerResult]] = {
    "validate": handle_validate,
    "generate": handle_generate,
    "compact": handle_compact,
    "subcover": handle_subcover,
    "hausdorff": handle_hausdorff,
    "continuous": handle_continuous,
    "openmap": handle_openmap,
    "closedmap": handle_closedmap,
    "fip": handle_fip,
    "closed": handle_closed,
    "format": handle_format,
    "recheck": handle_recheck,
    "audit": handle_audit,
}
