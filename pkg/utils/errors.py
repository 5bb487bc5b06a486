"""
Exception hierarchy for the fuzzy soft topology lab.
Every error raised by the library derives from FuzzySoftError so callers
(and the CLI) can catch the whole family at once.
"""
from typing import Any, Optional


class FuzzySoftError(Exception):
    """Base class for all library errors"""
    def __init__(self, message: str, location: Optional[str] = None):
        super().__init__(message)
        self.location = location

    def __str__(self) -> str:
        message = super().__str__()
        if self.location:
            return f"{self.location}: {message}"
        return message


# --- grades ----------------------------------------------------------------

class OutOfUnitInterval(FuzzySoftError):
    """Raised when a grade falls outside [0, 1]"""
    pass


class ZeroDenominator(FuzzySoftError):
    """Raised when a grade is built with denominator 0"""
    pass


class BadGrade(FuzzySoftError):
    """Raised when grade text cannot be parsed into a Grade"""
    pass


# --- structure ---------------------------------------------------------------

class UnknownLabel(FuzzySoftError):
    """Raised when a point/parameter/set name does not resolve"""
    def __init__(self, label: str, location: Optional[str] = None, kind: str = "label"):
        super().__init__(f"unknown {kind} '{label}'", location)
        self.label = label
        self.kind = kind


class InvalidContext(FuzzySoftError):
    """Raised when a universe or parameter list is empty or repeats a label"""
    pass


class ContextMismatch(FuzzySoftError):
    """Raised when operands live over different (X, E) contexts"""
    pass


class CapExceeded(FuzzySoftError):
    """Raised when an enumeration or closure grows beyond its cap"""
    def __init__(self, message: str, cap: int):
        super().__init__(message)
        self.cap = cap


class NotACover(FuzzySoftError):
    """Raised when a subcover is requested from a family that does not cover"""
    def __init__(self, message: str, witness: Any = None):
        super().__init__(message)
        self.witness = witness


class SearchBudgetExceeded(FuzzySoftError):
    """Raised when exact subcover search visits more nodes than allowed"""
    def __init__(self, message: str, budget: int):
        super().__init__(message)
        self.budget = budget


class NonTotalMapping(FuzzySoftError):
    """Raised when a point or parameter map is not total on its source"""
    pass


class TopologyAxiomViolation(FuzzySoftError):
    """Raised when a family fails the fuzzy soft topology axioms"""
    def __init__(self, message: str, report: Any = None, location: Optional[str] = None):
        super().__init__(message, location)
        self.report = report


# --- space files ---------------------------------------------------------------

class SpaceFileSyntaxError(FuzzySoftError):
    """Raised when a space file is not valid JSON"""
    def __init__(self, message: str, line: int, column: int):
        super().__init__(message, f"line {line}, column {column}")
        self.line = line
        self.column = column


class SchemaViolation(FuzzySoftError):
    """Raised when a space file does not match the documented schema"""
    pass


# --- audits ------------------------------------------------------------------

class InvalidGeneratorSettings(FuzzySoftError):
    """Raised when instance-generator settings leave the supported bounds"""
    pass
