"""Conversions between weak, intermediate and strong implementations.

Layout conventions shared by every intermediate circuit in the package: the
circuit has 2n primary inputs, x_1..x_n being the argument register and
x_{n+1}..x_{2n} the target register y, and it designates all 2n of those
wires as outputs.
"""
from __future__ import annotations

from collections import defaultdict

from ..circuit import Circuit, Const, Gate, Input, cnot
from ..errors import NoDesignatedOutputs, PreconditionError
from ..function import ReversibleFunction, inverse
from .split import bennett_synth, optimal_split, pprm_split_synth


def weak_to_intermediate(weak: Circuit) -> Circuit:
    """``A``, then n CNOTs copying f(x) into a new y register, then ``A^-1``."""
    if not weak.outputs:
        raise NoDesignatedOutputs("weak circuit needs designated outputs")
    n = weak.n
    y_wires = list(range(weak.width, weak.width + n))
    roles = weak.roles + tuple(Input(n + i + 1) for i in range(n))
    copy = [cnot(src, dst) for src, dst in zip(weak.outputs, y_wires)]
    gates = weak.gates + tuple(copy) + weak.gates[::-1]
    return Circuit(weak.width + n, roles, gates, weak.input_wires + tuple(y_wires))


def swap(u: int, v: int) -> list[Gate]:
    return [cnot(u, v), cnot(v, u), cnot(u, v)]


def _relabel(g: Gate, wire_map: dict[int, int]) -> Gate:
    return Gate(g.kind, tuple(wire_map[w] for w in g.controls), wire_map[g.target])


def intermediate_to_strong(forward: Circuit, backward: Circuit) -> Circuit:
    """Strong circuit x -> f(x) from intermediate circuits for f and f^-1.

    Runs ``forward`` on (x, 0) to get (x, f(x)), swaps the registers with 3n
    CNOTs, and runs ``backward`` to clear the second register. Ancillae of
    ``backward`` reuse those of ``forward`` with the same constant, since
    ``forward`` restores them.
    """
    if forward.n != backward.n or forward.n % 2:
        raise PreconditionError("both circuits must be intermediate circuits of the same arity")
    n = forward.n // 2
    roles: list = [Input(i + 1) for i in range(n)] + [Const(0)] * n

    def base_map(c: Circuit) -> dict[int, int]:
        return {w: i for i, w in enumerate(c.input_wires)}

    fwd_map = base_map(forward)
    pool: dict[int, list[int]] = defaultdict(list)
    for w in forward.ancillae:
        fwd_map[w] = len(roles)
        pool[forward.roles[w].value].append(len(roles))
        roles.append(forward.roles[w])
    bwd_map = base_map(backward)
    for w in backward.ancillae:
        value = backward.roles[w].value
        if pool[value]:
            bwd_map[w] = pool[value].pop(0)
        else:
            bwd_map[w] = len(roles)
            roles.append(Const(value))

    gates = [_relabel(g, fwd_map) for g in forward.gates]
    for i in range(n):
        gates += swap(i, n + i)
    gates += [_relabel(g, bwd_map) for g in backward.gates]
    return Circuit(len(roles), tuple(roles), tuple(gates), tuple(range(n)))


def strong_synth(f: ReversibleFunction, a: int | None = None) -> Circuit:
    """x -> f(x) with every ancilla, including the n-bit work register, restored."""
    if a is None:
        a = optimal_split(f.n, "bennett")
    return intermediate_to_strong(bennett_synth(f, a), bennett_synth(inverse(f), a))


def weak_to_strong(weak: Circuit, f: ReversibleFunction) -> Circuit:
    """Strong circuit from a weak circuit for ``f``; f^-1 is synthesised by the split method."""
    # every 1-bit bijection is an involution
    back = pprm_split_synth(inverse(f)) if f.n >= 2 else weak
    return intermediate_to_strong(weak_to_intermediate(weak), weak_to_intermediate(back))
