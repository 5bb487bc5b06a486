"""
Space files: parsing with located errors and canonical serialization.

Parsing runs in three stages so every failure names its place in the file:
JSON syntax (line/column), structure against schemas/space_file.schema.json
(dotted path), then semantics (grades, labels, mapping totality, topology
axioms).
"""
import json
from functools import lru_cache
from pathlib import Path
from typing import Any, Dict, Union

from jsonschema import Draft202012Validator

from models.cover import MembershipRule
from models.mapping import SoftMapping
from models.soft_set import Context, FuzzySoftSet
from models.space import (
    MappingDefinition, SELF_SPACE, SpaceDefinition, SpaceModel, canonical_names,
)
from services.grade_service import format_grade, parse_grade
from services.soft_set_service import fss_from_rows, fss_to_rows
from services.space_service import validate_all_topologies
from utils.errors import NonTotalMapping, SchemaViolation, SpaceFileSyntaxError, UnknownLabel
from utils.logger_config import LogPrefix, debug, info
from utils.paths import SPACE_FILE_SCHEMA


@lru_cache(maxsize=1)
def _validator() -> Draft202012Validator:
    with open(SPACE_FILE_SCHEMA, "r", encoding="utf-8") as f:
        return Draft202012Validator(json.load(f))


def _dotted(path) -> str:
    return ".".join(str(p) for p in path) or "<root>"


def check_schema(document: Any) -> None:
    """
    Raises:
        SchemaViolation: located at the first offending path (sorted)
    """
    errors = sorted(_validator().iter_errors(document), key=lambda e: [str(p) for p in e.path])
    if errors:
        first = errors[0]
        raise SchemaViolation(first.message, _dotted(first.path))


def _parse_context(body: Dict[str, Any]) -> Context:
    return Context(tuple(body["universe"]), tuple(body["parameters"]))


def _parse_set(ctx: Context, rows: Dict[str, Dict[str, str]], location: str) -> FuzzySoftSet:
    grades = {
        parameter: {point: parse_grade(text, f"{location}.{parameter}.{point}") for point, text in row.items()}
        for parameter, row in rows.items()
    }
    return fss_from_rows(ctx, grades, location)


def _parse_space(body: Dict[str, Any], prefix: str) -> SpaceDefinition:
    ctx = _parse_context(body)
    sets = {
        name: _parse_set(ctx, rows, f"{prefix}sets.{name}")
        for name, rows in body.get("sets", {}).items()
    }
    topologies = {}
    resolver = SpaceDefinition(ctx, sets)
    for name, members in body.get("topologies", {}).items():
        for position, member in enumerate(members):
            resolver.set_named(member, f"{prefix}topologies.{name}[{position}]")
        topologies[name] = canonical_names(members)
    return SpaceDefinition(ctx, sets, topologies)


def _parse_mapping(
    name: str,
    body: Dict[str, Any],
    main: SpaceDefinition,
    spaces: Dict[str, SpaceDefinition],
) -> MappingDefinition:
    location = f"mappings.{name}"
    to = body["to"]
    if isinstance(to, str):
        if to == SELF_SPACE:
            target = main.context
        elif to in spaces:
            target = spaces[to].context
        else:
            raise UnknownLabel(to, f"{location}.to", kind="space")
        target_name = to
    else:
        target = _parse_context(to)
        target_name = None

    try:
        mapping = SoftMapping(main.context, target, body["point_map"], body["param_map"])
    except NonTotalMapping as e:
        raise NonTotalMapping(e.args[0], f"{location}.{e.location}") from e
    return MappingDefinition(mapping, target_name)


def parse_space_file(text: str, validate: bool = True) -> SpaceModel:
    """
    Parse space-file text into a SpaceModel.

    Args:
        text: UTF-8 JSON text
        validate: Check every declared topology family against the axioms

    Raises:
        SpaceFileSyntaxError, SchemaViolation, BadGrade, UnknownLabel,
        NonTotalMapping, TopologyAxiomViolation
    """
    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        raise SpaceFileSyntaxError(e.msg, e.lineno, e.colno) from e

    check_schema(document)

    main = _parse_space(document, "")
    spaces = {
        name: _parse_space(body, f"spaces.{name}.")
        for name, body in document.get("spaces", {}).items()
    }
    mappings = {
        name: _parse_mapping(name, body, main, spaces)
        for name, body in document.get("mappings", {}).items()
    }
    rule = MembershipRule.parse(document["rule"]) if "rule" in document else None
    model = SpaceModel(main, spaces, mappings, rule)

    if validate:
        validate_all_topologies(model)

    debug(LogPrefix.IO, f"Parsed space file: {len(spaces)} extra spaces, {len(mappings)} mappings")
    return model


def load_space_file(path: Union[str, Path], validate: bool = True) -> SpaceModel:
    """Read and parse a space file; OSError propagates to the caller"""
    with open(path, "rb") as f:
        raw = f.read()
    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError as e:
        line = raw.count(b"\n", 0, e.start) + 1
        column = e.start - raw.rfind(b"\n", 0, e.start)
        raise SpaceFileSyntaxError(f"invalid UTF-8 at byte offset {e.start}", line, column) from e
    info(LogPrefix.IO, f"Loading space file {path}")
    return parse_space_file(text, validate)


def _context_document(ctx: Context) -> Dict[str, Any]:
    return {"universe": list(ctx.universe), "parameters": list(ctx.parameters)}


def _set_document(a: FuzzySoftSet) -> Dict[str, Dict[str, str]]:
    return {
        parameter: {point: format_grade(g) for point, g in row.items()}
        for parameter, row in fss_to_rows(a).items()
    }


def _space_document(space: SpaceDefinition) -> Dict[str, Any]:
    document = _context_document(space.context)
    if space.sets:
        document["sets"] = {name: _set_document(a) for name, a in space.sets.items()}
    if space.topologies:
        document["topologies"] = {
            name: list(canonical_names(members)) for name, members in space.topologies.items()
        }
    return document


def to_document(model: SpaceModel) -> Dict[str, Any]:
    """The JSON-compatible document; only non-zero grades are written"""
    document = _space_document(model.main)
    if model.rule is not None:
        document["rule"] = model.rule.value
    if model.spaces:
        document["spaces"] = {name: _space_document(space) for name, space in model.spaces.items()}
    if model.mappings:
        mappings = {}
        for name, definition in model.mappings.items():
            m = definition.mapping
            to = definition.target_name if definition.target_name is not None else _context_document(m.target)
            mappings[name] = {"to": to, "point_map": dict(m.point_map), "param_map": dict(m.param_map)}
        document["mappings"] = mappings
    return document


def serialize(model: SpaceModel) -> str:
    """Canonical text: sorted keys, reduced fractions, two-space indent, trailing newline"""
    return json.dumps(to_document(model), indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def write_space_file(model: SpaceModel, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.write_text(serialize(model), encoding="utf-8")
    debug(LogPrefix.IO, f"Wrote space file {path}")
    return path
