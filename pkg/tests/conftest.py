import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from cobweb import FSequence  # noqa: E402

BUILTINS = {
    "natural": FSequence.natural(),
    "fibonacci": FSequence.fibonacci(),
    "gaussian2": FSequence.gaussian(2),
    "gaussian3": FSequence.gaussian(3),
    "constant_one": FSequence.constant_one(),
}


@pytest.fixture(params=sorted(BUILTINS))
def builtin(request):
    return BUILTINS[request.param]


@pytest.fixture
def n_plus_one():
    """F_n = n + 1 with F_0 = 1, not admissible."""
    return FSequence.custom([n + 1 for n in range(1, 31)], f0=1, name="n+1")


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
