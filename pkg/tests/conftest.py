import pytest

from prismham import kernels

ACCEPTANCE_LINES: list[str] = []


def pytest_addoption(parser):
    parser.addoption("--full", action="store_true", help="run n = 8 sweeps even on the pure-Python backend")


@pytest.fixture(scope="session")
def full_sweep(request):
    """n = 8 is included when compiled kernels are active or --full is given."""
    return request.config.getoption("--full") or kernels.backend() == "cython"


@pytest.fixture(params=kernels.available_backends())
def backend(request):
    prev = kernels.backend()
    kernels.use_backend(request.param)
    yield request.param
    kernels.use_backend(prev)


@pytest.fixture
def record_acceptance():
    def record(criterion: str, ok: bool, detail: str = "") -> None:
        ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] {criterion}: {detail}")

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
