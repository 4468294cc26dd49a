from pathlib import Path

import pytest

REPO_ROOT = Path(__file__).resolve().parents[1]
DATA_DIR = REPO_ROOT / "data"
UCI_DIR = DATA_DIR / "uci"


@pytest.fixture(scope="session")
def iris_path() -> Path:
    path = DATA_DIR / "iris.csv"
    assert path.exists(), "data/iris.csv ships with the repository"
    return path


def uci_csv(name: str) -> Path:
    return UCI_DIR / f"{name}.csv"
