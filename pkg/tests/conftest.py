from pathlib import Path

import pytest

from helpers import fig1_graph, path3_graph

DATA_DIR = Path(__file__).resolve().parents[1] / "data"
FIG1_PATH = DATA_DIR / "fig1.json"


@pytest.fixture
def fig1():
    return fig1_graph()


@pytest.fixture
def path3():
    return path3_graph()


@pytest.fixture
def fig1_path():
    return str(FIG1_PATH)
