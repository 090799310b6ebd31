import os

import pytest
from hypothesis import settings

from isokit import catalog as C
from isokit import corpus, kernels

settings.register_profile("isokit", max_examples=60, deadline=None, derandomize=True)
settings.load_profile("isokit")

WORKSPACE = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "workspace")


@pytest.fixture(params=sorted(kernels.available_backends()))
def backend(request, monkeypatch):
    """Run the test once per importable kernel backend."""
    monkeypatch.setattr(kernels, "backend", kernels.available_backends()[request.param])
    return request.param


@pytest.fixture(scope="session")
def S3():
    return C.symmetric(3)


@pytest.fixture(scope="session")
def presheaves():
    return corpus.presheaf_corpus(extra=True)


@pytest.fixture
def workspace():
    return WORKSPACE


# one line per acceptance criterion, filled in by test_acceptance.py
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[n])
