"""
Fuzzy soft mappings: a pair of total functions (phi: X -> Y, psi: E -> K).
"""
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Mapping, Tuple

from models.soft_set import Context
from utils.errors import NonTotalMapping


def _freeze(table: Mapping[str, str]) -> Tuple[Tuple[str, str], ...]:
    return tuple(sorted(table.items()))


@dataclass(frozen=True)
class SoftMapping:
    """
    Lookup tables over finite label sets. Totality is checked at construction;
    injective/surjective/constant are derived, never stored.
    """
    source: Context
    target: Context
    point_map: Dict[str, str]
    param_map: Dict[str, str]

    def __post_init__(self):
        object.__setattr__(self, "point_map", dict(self.point_map))
        object.__setattr__(self, "param_map", dict(self.param_map))
        self._check_total("point_map", self.point_map, self.source.universe, self.target.universe)
        self._check_total("param_map", self.param_map, self.source.parameters, self.target.parameters)

    @staticmethod
    def _check_total(name, table, domain, codomain):
        missing = [label for label in domain if label not in table]
        if missing:
            raise NonTotalMapping(f"no image for {missing}", name)
        extra = [label for label in table if label not in domain]
        if extra:
            raise NonTotalMapping(f"labels {extra} are not in the source", name)
        codomain_set = set(codomain)
        stray = sorted({image for image in table.values() if image not in codomain_set})
        if stray:
            raise NonTotalMapping(f"images {stray} are not in the target", name)

    def __hash__(self) -> int:
        return hash((self.source, self.target, _freeze(self.point_map), _freeze(self.param_map)))

    @cached_property
    def point_indices(self) -> Tuple[int, ...]:
        """phi as target point index per source point index"""
        return tuple(self.target.point_index[self.point_map[x]] for x in self.source.universe)

    @cached_property
    def param_indices(self) -> Tuple[int, ...]:
        """psi as target parameter index per source parameter index"""
        return tuple(self.target.parameter_index[self.param_map[e]] for e in self.source.parameters)

    @property
    def is_injective(self) -> bool:
        return (len(set(self.point_indices)) == len(self.point_indices)
                and len(set(self.param_indices)) == len(self.param_indices))

    @property
    def is_surjective(self) -> bool:
        return (set(self.point_indices) == set(range(len(self.target.universe)))
                and set(self.param_indices) == set(range(len(self.target.parameters))))

    @property
    def is_constant(self) -> bool:
        return len(set(self.point_indices)) == 1 and len(set(self.param_indices)) == 1
