# utils/paths.py
from pathlib import Path

BASE_DIR = Path(__file__).resolve().parent.parent   # repo root
SCHEMA_DIR = BASE_DIR / "schemas"
SPACE_FILE_SCHEMA = SCHEMA_DIR / "space_file.schema.json"
FIXTURES_DIR = BASE_DIR / "fixtures"


def ensure_directory(path: Path) -> Path:
    """Create path (and parents) if missing; used for counterexample dumps"""
    path.mkdir(exist_ok=True, parents=True)
    return path
