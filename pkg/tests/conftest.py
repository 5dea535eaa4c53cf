import sys
import tempfile
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from lodlink.config import ServiceConfig
from lodlink.engine import Engine
from lodlink.evaluation import load_gold_standard

TOY_DIR = Path(__file__).resolve().parent.parent / "data" / "toy"


def toy_config(**overrides) -> ServiceConfig:
    base = dict(
        data_dir=tempfile.mkdtemp(prefix="lodlink-test-"),
        local_repo_path=str(TOY_DIR / "local.nt"),
        target_repo_path=str(TOY_DIR / "target.nt"),
        anchor_table_path=str(TOY_DIR / "anchors.tsv"),
        prefix_table_path=str(TOY_DIR / "prefixes.tsv"),
        disjointness_declarations_path=str(TOY_DIR / "declarations.tsv"),
    )
    base.update(overrides)
    return ServiceConfig(**base)


@pytest.fixture(scope="session")
def session_engine() -> Engine:
    """Read-only engine over the toy corpus; never mutate through this one."""
    return Engine.from_config(toy_config())


@pytest.fixture(scope="session")
def toy_local(session_engine):
    return session_engine.local


@pytest.fixture(scope="session")
def toy_target(session_engine):
    return session_engine.target


@pytest.fixture(scope="session")
def toy_anchor_table(session_engine):
    return session_engine.anchor_table


@pytest.fixture
def engine(session_engine) -> Engine:
    """Fresh engine per test so writes cannot leak between tests."""
    fresh = Engine(
        toy_config(),
        local=session_engine.local.clone(),
        target=session_engine.target,
        anchor_table=session_engine.anchor_table,
        prefixes=session_engine.prefixes,
        catalog=session_engine.catalog,
        declarations=session_engine.declarations,
        clock=lambda: 1_700_000_000.0,
    )
    return fresh


@pytest.fixture(scope="session")
def gold_all():
    return load_gold_standard(TOY_DIR / "gold_all.tsv")


@pytest.fixture(scope="session")
def gold_persons():
    return load_gold_standard(TOY_DIR / "gold_persons.tsv")


@pytest.fixture(scope="session")
def gold_concepts():
    return load_gold_standard(TOY_DIR / "gold_concepts.tsv")
