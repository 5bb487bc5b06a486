"""Input validation for command-line arguments"""
import argparse
import re
from typing import List

from utils.command_sets import rule_names

MAX_NAME_LENGTH = 64
_NAME_PATTERN = re.compile(r"^[^\s,]+$")


def validate_name(name: str) -> str:
    """A set, topology, space or mapping name as typed on the command line"""
    name = name.strip()
    if not name:
        raise ValueError("name cannot be empty")
    if len(name) > MAX_NAME_LENGTH:
        raise ValueError(f"name too long (max {MAX_NAME_LENGTH} characters): {name[:16]}...")
    if not _NAME_PATTERN.match(name):
        raise ValueError(f"invalid name {name!r}")
    return name


def parse_name_list(text: str) -> List[str]:
    """--sets f,p1,p2 -> ["f", "p1", "p2"]; order is kept, it breaks subcover ties"""
    if not text or not text.strip():
        raise ValueError("expected a comma-separated list of names")
    return [validate_name(part) for part in text.split(",")]


def positive_int(text: str) -> int:
    """argparse type for counts, caps and budgets"""
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def non_negative_int(text: str) -> int:
    """argparse type for seeds"""
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {value}")
    return value


def name_list(text: str) -> List[str]:
    """argparse type wrapping parse_name_list"""
    try:
        return parse_name_list(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def rule_name(text: str) -> str:
    lowered = text.strip().lower()
    if lowered not in rule_names:
        raise argparse.ArgumentTypeError(
            f"unknown membership rule {text!r} (choose from {', '.join(rule_names)})"
        )
    return lowered
