from __future__ import annotations

import sys

import pytest

from ringlab.properties import default_corpus


@pytest.fixture(scope="session")
def corpus():
    return default_corpus()


@pytest.fixture(scope="session")
def small_corpus(corpus):
    return [r for r in corpus if r.size <= 64]


def pytest_terminal_summary(terminalreporter):
    module = next(
        (m for name, m in list(sys.modules.items()) if name.endswith("test_acceptance") and hasattr(m, "RESULTS")),
        None,
    )
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(module.RESULTS):
        terminalreporter.write_line(module.RESULTS[number])
