"""
Grade arithmetic: construction, complement, join (max) and meet (min).
"""
import re
from fractions import Fraction
from typing import Optional

from models.grade import Grade, ONE, ZERO
from utils.errors import BadGrade, OutOfUnitInterval, ZeroDenominator

_GRADE_PATTERN = re.compile(r"^(\d+)(?:/(\d+))?$")


def grade_from_ratio(num: int, den: int) -> Grade:
    """Build the canonical grade num/den"""
    if den == 0:
        raise ZeroDenominator(f"grade {num}/{den} has a zero denominator")
    if den < 0:
        num, den = -num, -den
    if num < 0 or num > den:
        raise OutOfUnitInterval(f"grade {num}/{den} is outside [0, 1]")
    return Grade(Fraction(num, den))


def grade_complement(g: Grade) -> Grade:
    """1 - g"""
    return Grade(1 - g.value)


def grade_join(a: Grade, b: Grade) -> Grade:
    """max(a, b)"""
    return a if a >= b else b


def grade_meet(a: Grade, b: Grade) -> Grade:
    """min(a, b)"""
    return a if a <= b else b


def parse_grade(text: str, location: Optional[str] = None) -> Grade:
    """
    Parse "0", "1" or "p/q" (unreduced allowed) into a Grade.

    Args:
        text: Grade text
        location: Field path reported on failure

    Raises:
        BadGrade: malformed text, zero denominator or value outside [0, 1]
    """
    if not isinstance(text, str):
        raise BadGrade(f"grade must be a string such as \"1/2\", got {text!r}", location)

    match = _GRADE_PATTERN.match(text.strip())
    if not match:
        raise BadGrade(f"malformed grade {text!r} (expected \"0\", \"1\" or \"p/q\")", location)

    num = int(match.group(1))
    den = int(match.group(2)) if match.group(2) is not None else 1
    try:
        return grade_from_ratio(num, den)
    except (ZeroDenominator, OutOfUnitInterval) as e:
        raise BadGrade(str(e), location) from e


def format_grade(g: Grade) -> str:
    """Canonical text: "0", "1" or "p/q" in lowest terms"""
    return str(g)


def k_level_lattice(k: int) -> list:
    """The grades {0, 1/k, ..., 1}"""
    if k <= 0:
        raise ZeroDenominator(f"lattice level must be positive, got {k}")
    return [grade_from_ratio(i, k) for i in range(k + 1)]


__all__ = [
    "ZERO", "ONE",
    "grade_from_ratio", "grade_complement", "grade_join", "grade_meet",
    "parse_grade", "format_grade", "k_level_lattice",
]
