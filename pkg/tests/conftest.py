"""Shared fixtures: the two-point context and its named sets, fixture files and a CLI runner"""
import pytest

from models.soft_set import Context, matrix
from utils.paths import FIXTURES_DIR


@pytest.fixture
def ctx():
    """X = {x1, x2}, E = {e1}"""
    return Context(("x1", "x2"), ("e1",))


@pytest.fixture
def f(ctx):
    return matrix(ctx, [["1/2", 1]])


@pytest.fixture
def g(ctx):
    return matrix(ctx, [["1/2", 0]])


@pytest.fixture
def p1(ctx):
    return matrix(ctx, [[1, 0]])


@pytest.fixture
def p2(ctx):
    return matrix(ctx, [[0, 1]])


@pytest.fixture
def fixture_path():
    def path(name: str) -> str:
        return str(FIXTURES_DIR / name)
    return path


@pytest.fixture
def run_cli(capsys):
    """Run main.cli and return (exit_code, stdout)"""
    from main import cli

    def run(*argv):
        code = cli(list(argv))
        return code, capsys.readouterr().out
    return run


@pytest.fixture(autouse=True)
def quiet_logs(monkeypatch):
    monkeypatch.setenv("FST_QUIET", "true")
