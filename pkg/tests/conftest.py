import numpy as np
import pytest

from nctsynth.circuit import Circuit, final_states, input_bits


def all_ones(n):
    return (1 << n) - 1


def monomial_value(mask: int, x: int) -> int:
    """Oracle: product of the variables in ``mask`` at point ``x``."""
    return int(mask & x == mask)


def ancilla_restored(c: Circuit, xs=None) -> bool:
    state = final_states(c, xs)
    anc = list(c.ancillae)
    if not anc:
        return True
    init = c.initial_state(input_bits(c.n, np.zeros(1, dtype=np.int64)))[anc, 0]
    return bool(np.all(state[anc] == init[:, None]))


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


#: One line per acceptance criterion, filled in by test_acceptance.py.
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
