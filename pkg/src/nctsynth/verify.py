"""Exhaustive (or stated-coverage sampled) checks of circuits against a function.

* weak: the designated outputs equal f on every input;
* intermediate: (x, y) -> (x, y ^ f(x)) with all constant wires restored;
* strong: x -> f(x) with all constant wires restored.
"""
from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .circuit import Circuit, final_states, input_bits, pack_bits
from .errors import NoDesignatedOutputs, PreconditionError
from .function import ReversibleFunction

#: Above this many (x, y) pairs the intermediate check samples y.
EXHAUSTIVE_PAIR_LIMIT = 1 << 16
SAMPLED_Y_PER_X = 16


class Verdict(NamedTuple):
    ok: bool
    checked: int
    counterexample: str | None = None


def _bits(v: int, k: int) -> str:
    return format(v, f"0{k}b") if k else ""


def _check(c: Circuit, xs: np.ndarray, expected: np.ndarray, width_in: int, width_out: int) -> Verdict:
    if not c.outputs:
        raise NoDesignatedOutputs("verification reads the designated outputs")
    state = final_states(c, xs)
    got = pack_bits(state[list(c.outputs)])
    bad = np.flatnonzero(got != expected)
    if bad.size:
        i = bad[0]
        return Verdict(False, len(xs), f"input {_bits(int(xs[i]), width_in)}: expected "
                       f"{_bits(int(expected[i]), width_out)}, got {_bits(int(got[i]), width_out)}")
    anc = list(c.ancillae)
    if anc:
        init = c.initial_state(input_bits(c.n, xs[:1]))[anc, 0]
        dirty = np.flatnonzero(np.any(state[anc] != init[:, None], axis=0))
        if dirty.size:
            i = dirty[0]
            wires = [w for w, v0 in zip(anc, init) if state[w, i] != v0]
            return Verdict(False, len(xs), f"input {_bits(int(xs[i]), width_in)}: ancillae {wires} not restored")
    return Verdict(True, len(xs))


def verify_weak(c: Circuit, f: ReversibleFunction) -> Verdict:
    if c.n != f.n:
        raise PreconditionError(f"circuit has {c.n} inputs, function has {f.n}")
    if not c.outputs:
        raise NoDesignatedOutputs("verification reads the designated outputs")
    xs = np.arange(1 << f.n, dtype=np.int64)
    state = final_states(c, xs)
    got = pack_bits(state[list(c.outputs)])
    bad = np.flatnonzero(got != f.as_array())
    if bad.size:
        x = int(bad[0])
        return Verdict(False, len(xs), f"input {_bits(x, f.n)}: expected {_bits(f(x), f.n)}, "
                       f"got {_bits(int(got[x]), f.n)}")
    return Verdict(True, len(xs))


def intermediate_inputs(n: int, seed: int = 0) -> np.ndarray:
    """(x, y) pairs as 2n-bit indices: all of them, or y = 0 plus 16 random y per x."""
    if 1 << (2 * n) <= EXHAUSTIVE_PAIR_LIMIT:
        return np.arange(1 << (2 * n), dtype=np.int64)
    rng = np.random.default_rng(seed)
    x = np.arange(1 << n, dtype=np.int64)
    ys = rng.integers(0, 1 << n, size=(1 << n, SAMPLED_Y_PER_X), dtype=np.int64)
    ys = np.concatenate([np.zeros((1 << n, 1), dtype=np.int64), ys], axis=1)
    return ((x[:, None] << n) | ys).ravel()


def verify_intermediate(c: Circuit, f: ReversibleFunction, seed: int = 0) -> Verdict:
    n = f.n
    if c.n != 2 * n:
        raise PreconditionError(f"intermediate circuit needs {2 * n} inputs, has {c.n}")
    xs = intermediate_inputs(n, seed)
    x, y = xs >> n, xs & ((1 << n) - 1)
    expected = (x << n) | (y ^ f.as_array()[x])
    return _check(c, xs, expected, 2 * n, 2 * n)


def verify_strong(c: Circuit, f: ReversibleFunction) -> Verdict:
    if c.n != f.n:
        raise PreconditionError(f"circuit has {c.n} inputs, function has {f.n}")
    xs = np.arange(1 << f.n, dtype=np.int64)
    return _check(c, xs, f.as_array(), f.n, f.n)


def verify(c: Circuit, f: ReversibleFunction, mode: str = "weak", seed: int = 0) -> Verdict:
    if mode == "weak":
        return verify_weak(c, f)
    if mode == "intermediate":
        return verify_intermediate(c, f, seed)
    if mode == "strong":
        return verify_strong(c, f)
    raise ValueError(f"unknown verification mode {mode!r}")
