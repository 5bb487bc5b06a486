"""
Pydantic v2 models for audit campaigns: generator settings, counterexample
records and the report itself.
"""
from typing import Dict, List, Literal

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from utils.errors import InvalidGeneratorSettings

RuleName = Literal["some-positive", "all-positive", "all-one"]


class GeneratorSettings(BaseModel):
    """Bounds for random instances (desk scale)"""
    model_config = ConfigDict(frozen=True)

    max_points: int = Field(3, ge=1, le=3)
    max_params: int = Field(2, ge=1, le=2)
    denominator: int = Field(4, ge=1, le=4)
    topology_cap: int = Field(16, ge=16, le=4096)
    max_generators: int = Field(3, ge=1, le=3)
    rule: RuleName = "some-positive"

    @classmethod
    def build(cls, **values) -> "GeneratorSettings":
        """Construct, turning pydantic's ValidationError into the library error"""
        try:
            return cls(**values)
        except ValidationError as e:
            problems = "; ".join(
                f"{'.'.join(str(p) for p in err['loc'])}: {err['msg']}" for err in e.errors()
            )
            raise InvalidGeneratorSettings(problems, "generator settings") from e


class CounterexampleRecord(BaseModel):
    """A trial whose conclusion failed, with the instance in space-file form"""
    trial: int = Field(ge=0)
    violation: str
    witness: str = ""
    instance: str
    revalidated: bool = False


class AuditReport(BaseModel):
    theorem: str
    seed: int
    trials: int = Field(ge=1)
    verified: int = Field(ge=0)
    rule: RuleName = "some-positive"
    counterexamples: List[CounterexampleRecord] = Field(default_factory=list)
    observations: Dict[str, int] = Field(default_factory=dict)

    @model_validator(mode="after")
    def _counts_add_up(self) -> "AuditReport":
        if self.verified + len(self.counterexamples) != self.trials:
            raise ValueError(
                f"verified ({self.verified}) + counterexamples ({len(self.counterexamples)}) "
                f"!= trials ({self.trials})"
            )
        return self

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    @property
    def all_revalidated(self) -> bool:
        return all(record.revalidated for record in self.counterexamples)

    def to_text(self, include_instances: bool = False) -> str:
        """Deterministic plain-text report; same inputs give the same bytes"""
        lines = [
            f"audit {self.theorem}",
            f"  seed: {self.seed}",
            f"  rule: {self.rule}",
            f"  trials: {self.trials}",
            f"  verified: {self.verified}",
            f"  counterexamples: {len(self.counterexamples)}",
        ]
        for key in sorted(self.observations):
            lines.append(f"  observed {key}: {self.observations[key]}")
        for record in self.counterexamples:
            flag = "revalidated" if record.revalidated else "NOT revalidated"
            lines.append(f"  - trial {record.trial}: {record.violation} [{flag}]")
            if record.witness:
                lines.append(f"    witness: {record.witness}")
            if include_instances:
                lines.extend("    " + line for line in record.instance.rstrip("\n").splitlines())
        status = "VERIFIED" if self.passed else "COUNTEREXAMPLES FOUND"
        lines.append(f"  result: {status}")
        return "\n".join(lines) + "\n"
