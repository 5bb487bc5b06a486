"""Runtime limits and defaults, read from the environment (.env supported)"""
import os

from dotenv import load_dotenv

from utils.logger_config import LogPrefix, warn

load_dotenv()


def _env_int(name: str, default: int) -> int:
    """Read a positive integer from the environment, falling back on bad values"""
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return default
    try:
        value = int(raw)
    except ValueError:
        warn(LogPrefix.CONFIG, f"Ignoring non-integer {name}={raw!r}, using {default}")
        return default
    if value <= 0:
        warn(LogPrefix.CONFIG, f"Ignoring non-positive {name}={value}, using {default}")
        return default
    return value


# Closure of generators under union/intersection can grow combinatorially
TOPOLOGY_CAP = _env_int("FST_TOPOLOGY_CAP", 4096)

# Node budget for the exact subcover search
SEARCH_BUDGET = _env_int("FST_SEARCH_BUDGET", 1_000_000)

# Upper bound on subfamilies enumerated by compactness certificates
ENUMERATION_CAP = _env_int("FST_ENUMERATION_CAP", 65_536)

# Families up to this size get every non-empty subfamily tested for FIP
FIP_EXHAUSTIVE_LIMIT = _env_int("FST_FIP_EXHAUSTIVE_LIMIT", 12)

# Detailed audit checks take every subfamily of a family up to this size,
# and only the small (<= 3 member) subfamilies plus the full family beyond it
FAMILY_ENUMERATION_LIMIT = _env_int("FST_FAMILY_ENUMERATION_LIMIT", 8)

# Worker threads used to evaluate audit trials
AUDIT_WORKERS = _env_int("FST_AUDIT_WORKERS", 4)

DEFAULT_RULE = os.getenv("FST_DEFAULT_RULE", "some-positive").strip().lower()

# Subfamilies per trial that also get the full set-level chain (subcovers, duality)
AUDIT_DETAIL_LIMIT = _env_int("FST_AUDIT_DETAIL_LIMIT", 1024)
