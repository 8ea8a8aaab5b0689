import pytest

from heckeperiod import _backend


@pytest.fixture(params=_backend.available_backends(), ids=lambda k: k.BACKEND)
def kernels(request):
    """Each importable kernel module: compiled (when built) and pure Python."""
    return request.param


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
