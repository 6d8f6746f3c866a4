from __future__ import annotations

from pathlib import Path

import pytest

from persistry import PointCloud
from persistry.app import AppConfig, load_app_dataset
from persistry.roster import Dataset

REPO_ROOT = Path(__file__).resolve().parent.parent
DATA_ROOT = REPO_ROOT / "data"
SEASON = "2013-2014"

# Eight labeled points on a rough ring; small enough to verify by hand and
# big enough to carry one long-lived loop.
RING_POINTS = {
    "A": (49.0, 77.0),
    "B": (78.0, 65.0),
    "C": (90.0, 32.0),
    "D": (74.0, 8.0),
    "E": (41.0, 6.0),
    "F": (15.0, 23.0),
    "G": (9.0, 48.0),
    "H": (18.0, 62.0),
}


@pytest.fixture
def ring_cloud() -> PointCloud:
    return PointCloud(RING_POINTS.items())


@pytest.fixture(scope="session")
def app_config() -> AppConfig:
    return AppConfig(dataset_root=DATA_ROOT, season=SEASON)


@pytest.fixture(scope="session")
def dataset(app_config: AppConfig) -> Dataset:
    return load_app_dataset(app_config)
