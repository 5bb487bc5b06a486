"""
Membership grades: exact rationals in the unit interval.
"""
from dataclasses import dataclass
from fractions import Fraction

from utils.errors import OutOfUnitInterval


@dataclass(frozen=True, order=True)
class Grade:
    """
    A grade of membership in [0, 1].

    Backed by a Fraction, so the stored value is always in lowest terms and
    equality/hashing/ordering are structural and exact.
    """
    value: Fraction

    def __post_init__(self):
        if not isinstance(self.value, Fraction):
            object.__setattr__(self, "value", Fraction(self.value))
        if self.value < 0 or self.value > 1:
            raise OutOfUnitInterval(f"grade {self.value} is outside [0, 1]")

    @property
    def numerator(self) -> int:
        return self.value.numerator

    @property
    def denominator(self) -> int:
        return self.value.denominator

    @property
    def is_crisp(self) -> bool:
        """True for the two grades of ordinary (crisp) membership"""
        return self.value == 0 or self.value == 1

    def __str__(self) -> str:
        # Fraction renders 0 and 1 without a denominator
        return str(self.value)

    def __repr__(self) -> str:
        return f"Grade({self})"


ZERO = Grade(Fraction(0))
ONE = Grade(Fraction(1))
