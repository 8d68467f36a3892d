import sys

import pytest

from fockcat.cli import load_category, load_vector

CORPUS = ["terminal", "discrete2", "discrete3", "Z2", "Z3", "arrow", "poset3"]
PRESHEAVES = ["w12", "poset3_w"]
VECTORS = ["v23", "arrow_v", "z2_v"]


@pytest.fixture(params=CORPUS)
def corpus_cat(request):
    return load_category(request.param)


@pytest.fixture
def term():
    return load_category("terminal")


@pytest.fixture
def disc2():
    return load_category("discrete2")


@pytest.fixture
def v23():
    return load_vector("v23")


def pytest_terminal_summary(terminalreporter):
    mod = next((m for name, m in sys.modules.items()
                if name.endswith("test_acceptance") and hasattr(m, "RESULTS")), None)
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[num])
