import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conftest import ancilla_restored, monomial_value
from nctsynth.circuit import CNOT, NOT, TOF, Circuit, Input, cost, realized_function, simulate
from nctsynth.errors import AllocatorExhausted, ArityTooSmall, SplitOutOfRange
from nctsynth.function import from_permutation, identity, inverse, random_function
from nctsynth.synthesis import (
    AncillaAllocator,
    bennett_synth,
    bennett_toffoli_count,
    gen_products,
    mmd_baseline,
    optimal_split,
    pprm_split_synth,
    product_circuit,
    strong_synth,
    weak_to_intermediate,
    weak_toffoli_count,
)
from nctsynth.verify import verify_intermediate, verify_strong, verify_weak


# -- product generation ----------------------------------------------------

@pytest.mark.parametrize("m, expected", [(1, 0), (2, 1), (3, 4), (4, 11)])
def test_gen_products_counts(m, expected):
    c, wires = product_circuit(m)
    assert c.toffoli_count == len(c.gates) == expected
    assert len(wires) == (1 << m) - 1


def test_gen_products_m4_example():
    c, wires = product_circuit(4)
    res = simulate(c, [1, 0, 1, 1])
    assert res.wires[wires[0b1011]] == 1
    assert res.wires[wires[0b1100]] == 0


@pytest.mark.parametrize("m", range(1, 6))
def test_gen_products_all_monomials_exhaustive(m):
    c, wires = product_circuit(m)
    for x in range(1 << m):
        bits = [(x >> (m - 1 - i)) & 1 for i in range(m)]
        state = simulate(c, bits).wires
        for mask, w in wires.items():
            assert state[w] == monomial_value(mask, x)


def test_gen_products_allocator_exhausted():
    with pytest.raises(AllocatorExhausted):
        gen_products([0, 1, 2], AncillaAllocator(3, limit=5))


def test_gen_products_on_arbitrary_wires():
    alloc = AncillaAllocator(10)
    net = gen_products([7, 2, 5], alloc)
    assert net.wires[0b100] == 7 and net.wires[0b001] == 5
    assert set(alloc.allocated) == {w for m, w in net.wires.items() if bin(m).count("1") > 1}


# -- closed forms ----------------------------------------------------------

def test_weak_count_examples():
    assert weak_toffoli_count(4, 1) == 8
    assert weak_toffoli_count(2, 1) == 2


def test_bennett_count_examples():
    assert bennett_toffoli_count(4, 1) == 12
    assert 7 * bennett_toffoli_count(4, 1) == 84
    assert bennett_toffoli_count(15, 6) == 2063
    assert 7 * 2063 == 14441


@pytest.mark.parametrize("n, a", [(4, 0), (4, 4), (3, -1)])
def test_split_out_of_range(n, a):
    with pytest.raises(SplitOutOfRange):
        weak_toffoli_count(n, a)
    with pytest.raises(SplitOutOfRange):
        bennett_toffoli_count(n, a)


def test_optimal_split_examples():
    assert optimal_split(50, "bennett") == 23
    assert optimal_split(27, "bennett") == 12
    assert optimal_split(4, "bennett") == 1
    with pytest.raises(ArityTooSmall):
        optimal_split(1)


@pytest.mark.parametrize("n", range(2, 30))
@pytest.mark.parametrize("mode", ["weak", "bennett"])
def test_optimal_split_is_brute_force_minimum(n, mode):
    count = weak_toffoli_count if mode == "weak" else bennett_toffoli_count
    values = [count(n, a) for a in range(1, n)]
    a = optimal_split(n, mode)
    assert count(n, a) == min(values)
    assert a == 1 + values.index(min(values))


# -- split synthesis -------------------------------------------------------

def test_split_examples():
    assert pprm_split_synth(random_function(4, 1), 1).toffoli_count == 8
    assert pprm_split_synth(random_function(2, 1), 1).toffoli_count == 2


def test_split_preconditions():
    with pytest.raises(ArityTooSmall):
        pprm_split_synth(identity(1))
    with pytest.raises(SplitOutOfRange):
        pprm_split_synth(identity(3), 3)
    with pytest.raises(ArityTooSmall):
        bennett_synth(identity(1))


def test_split_random_n5_a2():
    for seed in range(100):
        f = random_function(5, seed)
        c = pprm_split_synth(f, 2)
        assert realized_function(c).table == f.table


@pytest.mark.parametrize("n", range(2, 8))
def test_split_every_a_count_and_correct(n):
    for seed in range(3):
        f = random_function(n, 100 + seed)
        for a in range(1, n):
            c = pprm_split_synth(f, a)
            assert c.toffoli_count == weak_toffoli_count(n, a)
            assert verify_weak(c, f).ok
            pruned = pprm_split_synth(f, a, prune=True)
            assert pruned.toffoli_count <= c.toffoli_count
            assert verify_weak(pruned, f).ok


def test_split_prune_skips_zero_blocks():
    # f_i = x_i ^ const: only f_1 (term x1, j=2) and f_2 (term x2, j=1) touch A-blocks
    f = from_permutation([x ^ 0b0101 for x in range(16)])
    assert pprm_split_synth(f, 2, prune=True).toffoli_count == weak_toffoli_count(4, 2) - 4 * 3 + 2


def test_split_constant_term_uses_not_gate():
    f = from_permutation([x ^ 0b100 for x in range(8)])
    c = pprm_split_synth(f, 1)
    # f_1 = 1 ^ x1: one NOT for the j=0 term, two to load and unload the scratch for j=1
    assert c.count(NOT) == 3
    assert c.width == 2**1 + 2**2 + 3 - 1


# -- Bennett wrapping --------------------------------------------------------

def test_bennett_counts_table_values():
    assert bennett_synth(random_function(4, 0), 1).toffoli_count == 12
    assert 7 * bennett_synth(random_function(15, 0), 6).toffoli_count == 14441


def test_bennett_n3_exhaustive():
    f = random_function(3, 42)
    c = bennett_synth(f)
    for x in range(8):
        for y in range(8):
            bits = [(x >> (2 - i)) & 1 for i in range(3)] + [(y >> (2 - i)) & 1 for i in range(3)]
            res = simulate(c, bits)
            assert res.output == (x << 3) | (y ^ f(x))
            assert all(res.wires[w] == 0 for w in c.ancillae)


@pytest.mark.parametrize("n", range(2, 7))
def test_bennett_restores_ancillae_and_width(n):
    for seed in range(3):
        f = random_function(n, seed)
        for a in range(1, n):
            c = bennett_synth(f, a)
            assert c.toffoli_count == bennett_toffoli_count(n, a)
            assert c.width <= 2**a + 2 ** (n - a) + n + 1 + n  # plus the y register
            assert ancilla_restored(c)
            assert verify_intermediate(c, f).ok


def test_bennett_workspace_budget():
    # ancillae + x + output register stay within S = 2^a + 2^b + n + 1
    for n in range(2, 9):
        for a in range(1, n):
            c = bennett_synth(identity(n), a)
            assert c.width - n <= 2**a + 2 ** (n - a) + n + 1


# -- weak/intermediate/strong ------------------------------------------------

def test_weak_to_intermediate_structure():
    f = random_function(3, 9)
    weak = pprm_split_synth(f)
    inter = weak_to_intermediate(weak)
    assert len(inter) == 2 * len(weak) + 3
    assert cost(inter).n_cnot == 2 * cost(weak).n_cnot + 3
    assert verify_intermediate(inter, f).ok
    assert verify_intermediate(inter, f).checked == 64


def test_weak_to_intermediate_of_identity_is_n_cnots():
    n = 4
    weak = Circuit(n, tuple(Input(i + 1) for i in range(n)), (), tuple(range(n)))
    inter = weak_to_intermediate(weak)
    assert [g.kind for g in inter.gates] == [CNOT] * n
    assert verify_intermediate(inter, identity(n)).ok


def test_strong_identity():
    c = strong_synth(identity(3))
    for x in range(8):
        bits = [(x >> (2 - i)) & 1 for i in range(3)]
        assert simulate(c, bits).output == x


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_strong_cnot_surplus_is_3n(n):
    f = random_function(n, n)
    a = optimal_split(n, "bennett")
    b, c = bennett_synth(f, a), bennett_synth(inverse(f), a)
    s = strong_synth(f, a)
    assert cost(s).n_cnot == cost(b).n_cnot + cost(c).n_cnot + 3 * n
    assert cost(s).n_tof == cost(b).n_tof + cost(c).n_tof
    assert cost(s).total <= 2 * max(cost(b).total, cost(c).total) + 3 * n
    assert verify_strong(s, f).ok


def test_strong_random_n3():
    for seed in range(10):
        f = random_function(3, seed)
        s = strong_synth(f)
        assert verify_strong(s, f).ok
        assert ancilla_restored(s)


# -- baseline --------------------------------------------------------------

def test_mmd_identity_and_single_not():
    assert len(mmd_baseline(identity(3))) == 0
    c = mmd_baseline(from_permutation([2, 3, 0, 1]))
    assert len(c) == 1 and c.gates[0].kind == NOT and c.gates[0].target == 0


@pytest.mark.parametrize("n", [1, 3, 4, 5])
def test_mmd_random(n):
    for seed in range(100):
        f = random_function(n, seed)
        assert realized_function(mmd_baseline(f)).table == f.table


def test_mmd_row_invariant():
    """Gates emitted for row i never disturb rows below i."""
    f = random_function(4, 3)
    c = mmd_baseline(f)
    # replaying the circuit backwards on f's outputs must fix rows in increasing order
    table = list(f.table)
    for g in reversed(c.gates):
        mask = sum(1 << (3 - w) for w in g.controls)
        bit = 1 << (3 - g.target)
        table = [v ^ bit if v & mask == mask else v for v in table]
    assert table == list(range(16))


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 6), st.integers(0, 2**32 - 1), st.booleans())
def test_split_property(n, seed, prune):
    f = random_function(n, seed)
    a = optimal_split(n, "weak")
    c = pprm_split_synth(f, a, prune)
    assert verify_weak(c, f).ok
    assert c.count(CNOT) + c.count(NOT) + c.count(TOF) == len(c)
