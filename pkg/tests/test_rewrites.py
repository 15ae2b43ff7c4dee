import itertools

import numpy as np
import pytest

from conftest import ancilla_restored
from nctsynth.circuit import (
    CNOT,
    MCT,
    NOT,
    TOF,
    Circuit,
    Const,
    CostWeights,
    Input,
    apply_gate,
    cnot,
    cost,
    final_states,
    input_bits,
    mct,
    not_,
    random_circuit,
    realized_function,
    tof,
)
from nctsynth.errors import ArityTooSmall, NoFreeWire
from nctsynth.function import constant_term_count, identity, pprm_of_column, random_function
from nctsynth.synthesis import (
    decompose_mct,
    eliminate_cnots,
    eliminate_nots,
    mct_to_toffolis,
    mmd_baseline,
    not_sandwich,
    one_not_pipeline,
)
from nctsynth.verify import verify_weak


def plain(n, gates, extra=()):
    roles = tuple(Input(i + 1) for i in range(n)) + tuple(extra)
    return Circuit(len(roles), roles, tuple(gates), tuple(range(n)))


def test_eliminate_nots_rule():
    c = eliminate_nots(plain(2, [not_(1)]))
    assert c.roles[2] == Const(1)
    assert c.gates == (cnot(2, 1),)


def test_eliminate_nots_idempotent_on_not_free():
    c = plain(3, [cnot(0, 1), tof(0, 1, 2)])
    assert eliminate_nots(c) is c


def test_eliminate_cnots_rule():
    c = eliminate_cnots(plain(2, [cnot(0, 1)]))
    assert c.gates == (tof(2, 0, 1),)
    assert c.roles[2] == Const(1)


def test_eliminate_cnots_unchanged_without_cnot():
    c = plain(3, [not_(0), tof(0, 1, 2)])
    assert eliminate_cnots(c) is c


def test_eliminate_reuses_existing_constant_one():
    c = plain(2, [not_(0), cnot(0, 1)], extra=(Const(1),))
    assert eliminate_nots(c).width == 3
    assert eliminate_cnots(c).width == 3
    # NOT -> CNOT(one; .) makes the wire a CNOT control, so the second pass needs another one
    d = eliminate_cnots(eliminate_nots(c))
    assert d.width == 4
    assert d.count(NOT) == d.count(CNOT) == 0
    assert realized_function(d) == realized_function(c)


def test_eliminate_skips_a_targeted_constant_one():
    c = plain(2, [not_(2), cnot(0, 1)], extra=(Const(1),))
    d = eliminate_cnots(c)
    assert d.width == 4 and d.roles[3] == Const(1)
    assert realized_function(d) == realized_function(c)


@pytest.mark.parametrize("seed", range(50))
def test_eliminations_preserve_function(seed):
    n = 1 + seed % 4
    c = random_circuit(n, 12, seed, n_const=seed % 2)
    for rewrite, kind in ((eliminate_nots, NOT), (eliminate_cnots, CNOT)):
        d = rewrite(c)
        assert d.count(kind) == 0
        assert d.width <= c.width + 1
        assert realized_function(d) == realized_function(c)


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_not_sandwich_single_not(k):
    n = 4
    gates = not_sandwich(list(range(k)), n)
    c = plain(n, gates, extra=(Const(1),))
    assert c.count(NOT) == 1 and c.count(CNOT) == 0
    mask = ((1 << k) - 1) << (n - k)
    assert realized_function(c).table == tuple(x ^ mask for x in range(16))
    assert ancilla_restored(c)


def _mct_reference(controls, target, width):
    states = np.array(list(itertools.product((0, 1), repeat=width)), dtype=bool).T
    expected = states.copy()
    expected[target] ^= np.logical_and.reduce(states[list(controls)], axis=0)
    return states, expected


def _run_gates(gates, states):
    s = states.copy()
    for g in gates:
        apply_gate(s, g)
    return s


def test_mct_two_controls_is_a_toffoli():
    c = plain(3, [mct([0, 1], 2)])
    d = decompose_mct(c)
    assert d.gates == (tof(0, 1, 2),)


def test_mct_three_controls_one_dirty_wire():
    gates = mct_to_toffolis([0, 1, 2], 3, [4])
    assert len(gates) == 4 and all(g.kind == TOF for g in gates)
    states, expected = _mct_reference([0, 1, 2], 3, 5)
    assert np.array_equal(_run_gates(gates, states), expected)


def test_mct_without_spare_wire():
    c = plain(4, [mct([0, 1, 2], 3)])
    with pytest.raises(NoFreeWire):
        decompose_mct(c)


@pytest.mark.parametrize("m, width", [(m, w) for m in range(3, 8) for w in range(m + 2, m + 6) if w <= 10])
def test_mct_decomposition_exhaustive(m, width):
    controls = list(range(m))
    target = m
    free = list(range(m + 1, width))
    gates = mct_to_toffolis(controls, target, free)
    assert all(g.kind == TOF for g in gates)
    assert len(gates) <= 8 * m
    states, expected = _mct_reference(controls, target, width)
    assert np.array_equal(_run_gates(gates, states), expected)


def test_decompose_mct_preserves_function():
    for seed in range(20):
        f = random_function(4, seed)
        base = mmd_baseline(f)
        grown = Circuit(5, base.roles + (Const(1),), base.gates, base.outputs)
        d = decompose_mct(grown)
        assert d.count(MCT) == 0
        assert realized_function(d).table == f.table
        assert ancilla_restored(d)


def test_one_not_pipeline_identity():
    c = one_not_pipeline(identity(4))
    assert len(c) == 0


def test_one_not_pipeline_needs_two_bits():
    with pytest.raises(ArityTooSmall):
        one_not_pipeline(identity(1))


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_one_not_pipeline_counts(n):
    for seed in range(20):
        f = random_function(n, seed)
        c = one_not_pipeline(f)
        assert cost(c, CostWeights(1, 1, 0)).total <= 1
        assert cost(c, CostWeights(0, 1, 0)).total == 0
        assert c.width == n + 1 and c.roles[n] == Const(1)
        assert verify_weak(c, f).ok
        assert ancilla_restored(c)


@pytest.mark.parametrize("const", [0, 1])
def test_toffoli_only_conserves_constant_terms(const):
    """Toffoli gates alone never change how many wires carry the constant 1 term."""
    for seed in range(60):
        n = 2 + seed % 3
        c = random_circuit(n, 15, seed, n_const=1, kinds=(TOF,), outputs=False)
        roles = c.roles[:n] + (Const(const),)
        c = Circuit(c.width, roles, c.gates)
        state = final_states(c)
        count = constant_term_count(pprm_of_column(state[w].astype(np.uint8)) for w in range(c.width))
        assert count == const


def test_two_complemented_outputs_not_reachable_with_toffolis_only():
    # (x1 ^ 1, x2 ^ 1, x3) has two constant terms; one constant-1 wire supplies at most one
    f_terms = 2
    for seed in range(200):
        c = random_circuit(3, 10, seed, n_const=1, kinds=(TOF,), outputs=False)
        c = Circuit(c.width, c.roles[:3] + (Const(1),), c.gates)
        state = final_states(c)
        count = constant_term_count(pprm_of_column(state[w].astype(np.uint8)) for w in range(3))
        assert count < f_terms
