import json
from pathlib import Path

import pytest

from fock_energy.alphabet import parse_alphabet_spec, preset
from fock_energy.io import read_tuple

DATA = Path(__file__).parent / "data"

# filled by test_acceptance.py, printed once at the end of the session
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


@pytest.fixture(scope="session")
def example_tuple():
    data = json.loads((DATA / "example_tuple.json").read_text())
    return read_tuple(data, preset("empty"), preset("empty"))


@pytest.fixture(scope="session")
def window_ab():
    return preset("primed-nonneg", (0, 3)), preset("primed-neg", (-3, -1))


@pytest.fixture(scope="session")
def mixed_ab():
    return parse_alphabet_spec("a1/even,a2/odd,a3/even"), parse_alphabet_spec("b1/odd,b2/even")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[num]
        terminalreporter.write_line(f"criterion {num:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
