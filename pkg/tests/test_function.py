import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from nctsynth.errors import ArityTooLarge, IndexOutOfRange, NotAPermutation, NotPowerOfTwo
from nctsynth.function import (
    PprmTable,
    ReversibleFunction,
    constant_term_count,
    eval_pprm,
    format_perm,
    from_permutation,
    identity,
    inverse,
    mobius_transform,
    parse_perm,
    pprm_of_column,
    pprm_of_output,
    random_function,
)


def gf2_solve(matrix, rhs):
    """Oracle: Gaussian elimination over GF(2) for a square invertible system."""
    a = [row[:] + [b] for row, b in zip(matrix, rhs)]
    size = len(a)
    for col in range(size):
        pivot = next(r for r in range(col, size) if a[r][col])
        a[col], a[pivot] = a[pivot], a[col]
        for r in range(size):
            if r != col and a[r][col]:
                a[r] = [u ^ v for u, v in zip(a[r], a[col])]
    return [a[r][size] for r in range(size)]


def test_from_permutation_identity():
    f = from_permutation([0, 1, 2, 3])
    assert f.n == 2 and f.is_identity()


def test_from_permutation_single_not_on_x1():
    f = from_permutation([2, 3, 0, 1])
    # x_1 is the MSB: every input has x_1 flipped, x_2 kept
    for x in range(4):
        assert f(x) == x ^ 0b10


@pytest.mark.parametrize("values, exc", [
    ([0, 1, 3], NotPowerOfTwo),
    ([], NotPowerOfTwo),
    ([0, 0, 1, 2], NotAPermutation),
    ([0, 1, 2, 4], NotAPermutation),
    ([-1, 0, 1, 2], NotAPermutation),
])
def test_from_permutation_rejects(values, exc):
    with pytest.raises(exc):
        from_permutation(values)


def test_inverse_examples():
    assert inverse(identity(3)) == identity(3)
    assert inverse(from_permutation([1, 2, 3, 0])).table == (3, 0, 1, 2)


def test_inverse_composition_random_n6():
    f = random_function(6, 11)
    assert f.compose(inverse(f)).is_identity()
    assert inverse(f).compose(f).is_identity()
    assert inverse(inverse(f)) == f


def test_pprm_of_output_and_in_n3():
    # f = (x1 x2 ^ x3, x2, x1): every 2-bit bijection is affine, so n=3 is the smallest host
    f = ReversibleFunction(3, tuple(((((x >> 2) & (x >> 1) & 1) ^ (x & 1)) << 2) | (x & 0b010) | (x >> 2)
                                    for x in range(8)))
    assert pprm_of_output(f, 1).format() == "x3 ^ x1x2"


def test_pprm_and_monomial_only():
    t = pprm_of_column([0, 0, 0, 1])
    assert t.coeffs == (0, 0, 0, 1)
    assert t.format() == "x1x2"


def test_pprm_of_output_not_x1():
    f = from_permutation([2, 3, 0, 1])  # (x1 ^ 1, x2)
    t = pprm_of_output(f, 1)
    assert t.coeffs == (1, 0, 1, 0)
    assert t.format() == "1 ^ x1"
    assert pprm_of_output(f, 2).coeffs == (0, 1, 0, 0)


def test_pprm_index_out_of_range():
    f = identity(3)
    with pytest.raises(IndexOutOfRange):
        pprm_of_output(f, 0)
    with pytest.raises(IndexOutOfRange):
        pprm_of_output(f, 4)
    with pytest.raises(IndexOutOfRange):
        eval_pprm(pprm_of_output(f, 1), 8)


def test_mobius_matches_gaussian_elimination_all_3_input_functions():
    n = 3
    size = 1 << n
    basis = [[int(m & x == m) for m in range(size)] for x in range(size)]
    for bits in itertools.product((0, 1), repeat=size):
        expected = gf2_solve(basis, list(bits))
        assert list(pprm_of_column(bits).coeffs) == expected


def test_eval_pprm_constants():
    zero = PprmTable(3, (0,) * 8)
    one = PprmTable(3, (1,) + (0,) * 7)
    assert all(eval_pprm(zero, x) == 0 for x in range(8))
    assert all(eval_pprm(one, x) == 1 for x in range(8))


@pytest.mark.parametrize("n", range(1, 7))
def test_pprm_round_trip(n):
    for seed in range(5):
        f = random_function(n, seed)
        for i in range(1, n + 1):
            t = pprm_of_output(f, i)
            for x in range(1 << n):
                assert eval_pprm(t, x) == (f(x) >> (n - i)) & 1


@pytest.mark.parametrize("n", range(0, 5))
def test_mobius_involution_exhaustive(n):
    for bits in itertools.product((0, 1), repeat=1 << n):
        assert tuple(mobius_transform(mobius_transform(bits))) == bits


@settings(max_examples=60, deadline=None)
@given(st.integers(5, 8).flatmap(lambda n: st.lists(st.integers(0, 1), min_size=1 << n, max_size=1 << n)))
def test_mobius_involution_random(bits):
    assert list(mobius_transform(mobius_transform(bits))) == bits


def test_random_function_deterministic_and_valid():
    assert random_function(5, 3) == random_function(5, 3)
    a, b = random_function(4, 1), random_function(4, 2)
    assert sorted(a.table) == sorted(b.table) == list(range(16))
    for seed in range(1000):
        f = random_function(3, seed)
        assert sorted(f.table) == list(range(8))


def test_random_function_arity_guard():
    with pytest.raises(ArityTooLarge):
        random_function(21, 0)
    with pytest.raises(ArityTooLarge):
        random_function(5, 0, max_arity=4)


def test_constant_term_count():
    n = 3
    assert constant_term_count(pprm_of_output(identity(n), i) for i in range(1, 4)) == 0
    two = ReversibleFunction(3, tuple(x ^ 0b110 for x in range(8)))  # (x1^1, x2^1, x3)
    assert constant_term_count(pprm_of_output(two, i) for i in range(1, 4)) == 2
    comp = ReversibleFunction(3, tuple(x ^ 0b111 for x in range(8)))
    assert constant_term_count(pprm_of_output(comp, i) for i in range(1, 4)) == 3


def test_perm_format_round_trip():
    f = random_function(5, 4)
    assert parse_perm(format_perm(f)) == f
    text = "# a comment\nn=2\n2 3\n0 1  # trailing\n"
    assert parse_perm(text).table == (2, 3, 0, 1)


@pytest.mark.parametrize("text, exc", [
    ("n=2\n0 1 2\n", NotPowerOfTwo),
    ("n=2\n0 1 1 2\n", NotAPermutation),
    ("n=2\n0 1 2 x\n", NotAPermutation),
])
def test_perm_parse_errors(text, exc):
    with pytest.raises(exc):
        parse_perm(text)
