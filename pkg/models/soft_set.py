"""
Fuzzy soft sets over a fixed finite context (universe X, parameters E).

A fuzzy soft set is stored as its full |E| x |X| grade matrix. The parameter
subset A is never stored: it is the set of parameters whose row is not
all-zero, so (f, A)(e) = 0_X off A holds by construction.
"""
from dataclasses import dataclass
from functools import cached_property
from fractions import Fraction
from typing import Dict, Iterator, Sequence, Tuple

from models.grade import Grade, ONE, ZERO
from utils.errors import ContextMismatch, InvalidContext, UnknownLabel


@dataclass(frozen=True)
class Context:
    """The pair (X, E); label order fixes the matrix layout"""
    universe: Tuple[str, ...]
    parameters: Tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "universe", tuple(self.universe))
        object.__setattr__(self, "parameters", tuple(self.parameters))
        for name, labels in (("universe", self.universe), ("parameters", self.parameters)):
            if not labels:
                raise InvalidContext(f"{name} must not be empty")
            if len(set(labels)) != len(labels):
                raise InvalidContext(f"{name} repeats a label: {list(labels)}")
            if not all(isinstance(label, str) and label for label in labels):
                raise InvalidContext(f"{name} labels must be non-empty strings")

    @cached_property
    def point_index(self) -> Dict[str, int]:
        return {x: i for i, x in enumerate(self.universe)}

    @cached_property
    def parameter_index(self) -> Dict[str, int]:
        return {e: i for i, e in enumerate(self.parameters)}

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.parameters), len(self.universe)

    def point(self, label: str) -> int:
        try:
            return self.point_index[label]
        except KeyError:
            raise UnknownLabel(label, kind="point") from None

    def parameter(self, label: str) -> int:
        try:
            return self.parameter_index[label]
        except KeyError:
            raise UnknownLabel(label, kind="parameter") from None

    def __str__(self) -> str:
        return f"X={{{', '.join(self.universe)}}}, E={{{', '.join(self.parameters)}}}"


@dataclass(frozen=True)
class FuzzySoftSet:
    """
    A fuzzy soft set (f, A) over a Context.

    grades[i][j] is the grade of point universe[j] under parameter parameters[i].
    """
    context: Context
    grades: Tuple[Tuple[Grade, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(row) for row in self.grades)
        n_params, n_points = self.context.shape
        if len(rows) != n_params or any(len(row) != n_points for row in rows):
            raise InvalidContext(
                f"grade matrix must be {n_params}x{n_points} for context {self.context}"
            )
        object.__setattr__(self, "grades", rows)

    @classmethod
    def filled(cls, context: Context, grade: Grade) -> "FuzzySoftSet":
        n_params, n_points = context.shape
        return cls(context, tuple((grade,) * n_points for _ in range(n_params)))

    def grade(self, parameter: str, point: str) -> Grade:
        return self.grades[self.context.parameter(parameter)][self.context.point(point)]

    def cells(self) -> Iterator[Tuple[int, int, Grade]]:
        """Yield (parameter index, point index, grade) in row-major order"""
        for i, row in enumerate(self.grades):
            for j, g in enumerate(row):
                yield i, j, g

    @cached_property
    def support(self) -> Tuple[str, ...]:
        """The parameter subset A: parameters whose row is not all-zero"""
        return tuple(
            e for e, row in zip(self.context.parameters, self.grades)
            if any(g != ZERO for g in row)
        )

    @property
    def is_null(self) -> bool:
        return all(g == ZERO for row in self.grades for g in row)

    @property
    def is_universal(self) -> bool:
        return all(g == ONE for row in self.grades for g in row)

    @property
    def is_crisp(self) -> bool:
        return all(g.is_crisp for row in self.grades for g in row)

    @cached_property
    def positive_mask(self) -> int:
        """Bit per cell (row-major) holding a positive grade"""
        mask = 0
        for bit, (_, _, g) in enumerate(self.cells()):
            if g != ZERO:
                mask |= 1 << bit
        return mask

    @cached_property
    def sort_key(self) -> Tuple[Fraction, ...]:
        """Row-major lexicographic key on canonical rationals"""
        return tuple(g.value for row in self.grades for g in row)

    def require_context(self, other: "FuzzySoftSet") -> None:
        if self.context != other.context:
            raise ContextMismatch(
                f"fuzzy soft sets live over different contexts: ({self.context}) vs ({other.context})"
            )

    def __str__(self) -> str:
        return "[" + ", ".join("[" + ", ".join(str(g) for g in row) + "]" for row in self.grades) + "]"

    def __repr__(self) -> str:
        return f"FuzzySoftSet({self})"


def matrix(context: Context, rows: Sequence[Sequence]) -> FuzzySoftSet:
    """Build a set from a literal matrix of Grades, Fractions, ints or "p/q" strings"""
    def to_grade(value) -> Grade:
        if isinstance(value, Grade):
            return value
        return Grade(Fraction(value))
    return FuzzySoftSet(context, tuple(tuple(to_grade(v) for v in row) for row in rows))
