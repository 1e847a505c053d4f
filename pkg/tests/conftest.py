import sys

import pytest
from hypothesis import settings

from qlc import _kernels

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@pytest.fixture(params=["numba", "numpy"])
def backend(request):
    _kernels.use_backend(request.param)
    yield request.param
    _kernels.use_backend(None)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    results = getattr(module, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for number in sorted(results):
            terminalreporter.write_line(results[number])
