"""Gate-basis rewrites: removing NOTs or CNOTs, and MCT decomposition."""
from __future__ import annotations

from typing import Sequence

from ..circuit import CNOT, MCT, NOT, Circuit, Const, Gate, cnot, nct_gate, not_, tof
from ..errors import ArityTooSmall, NoFreeWire
from ..function import ReversibleFunction
from .mmd import mmd_baseline


def stable_one(c: Circuit, avoid: set[int] = frozenset()) -> int | None:
    """A constant-1 wire that no gate targets, if the circuit has one."""
    targeted = {g.target for g in c.gates}
    for w in c.ancillae:
        if c.roles[w] == Const(1) and w not in targeted and w not in avoid:
            return w
    return None


def with_one_wire(c: Circuit, avoid: set[int] = frozenset()) -> tuple[Circuit, int]:
    """Return ``c`` with a usable constant-1 wire, appending one only if needed."""
    w = stable_one(c, avoid)
    if w is not None:
        return c, w
    grown = Circuit(c.width + 1, c.roles + (Const(1),), c.gates, c.outputs)
    return grown, c.width


def eliminate_nots(c: Circuit) -> Circuit:
    """NOT(w) -> CNOT(one; w)."""
    if not any(g.kind == NOT for g in c.gates):
        return c
    c, one = with_one_wire(c)
    return c.with_gates(cnot(one, g.target) if g.kind == NOT else g for g in c.gates)


def eliminate_cnots(c: Circuit) -> Circuit:
    """CNOT(u; v) -> TOF(one, u; v).

    A CNOT controlled by a constant-1 wire acts as a NOT, so that wire cannot
    serve as ``one`` and a second constant-1 wire is used instead.
    """
    if not any(g.kind == CNOT for g in c.gates):
        return c
    c, one = with_one_wire(c, avoid={g.controls[0] for g in c.gates if g.kind == CNOT})
    return c.with_gates(tof(one, g.controls[0], g.target) if g.kind == CNOT else g for g in c.gates)


def not_sandwich(targets: Sequence[int], one: int) -> list[Gate]:
    """k NOTs rewritten with a single NOT and Toffolis controlled by a constant-1 wire.

    The first target is flipped once; every other target is first loaded with
    x_t1 ^ x_t, then has (x_t1 ^ 1) added back after the flip.
    """
    if not targets:
        return []
    first, rest = targets[0], list(targets[1:])
    load = [tof(one, first, t) for t in rest]
    return load + [not_(first)] + load[::-1]


def _v_chain(controls: Sequence[int], target: int, dirty: Sequence[int]) -> list[Gate]:
    """m-control Toffoli from 4(m-2) Toffolis and m-2 borrowed wires, all restored."""
    m = len(controls)

    def step(k: int) -> Gate:
        return tof(controls[k], dirty[k - 2], target if k == m - 1 else dirty[k - 1])

    bottom = tof(controls[0], controls[1], dirty[0])
    down = [step(k) for k in range(m - 1, 1, -1)]
    up = down[::-1]
    return down + [bottom] + up + down[1:] + [bottom] + up[:-1]


def mct_to_toffolis(controls: Sequence[int], target: int, free: Sequence[int]) -> list[Gate]:
    """Decompose one MCT using the wires in ``free`` as dirty ancillae.

    With at least m-2 free wires a single ladder suffices. Otherwise one free
    wire splits the gate into two smaller MCTs, each applied twice, which then
    have enough borrowed wires among the other gate's controls.
    """
    controls, free = list(controls), list(free)
    m = len(controls)
    if m <= 2:
        return [nct_gate(controls, target)]
    if len(free) >= m - 2:
        return _v_chain(controls, target, free[: m - 2])
    if not free:
        raise NoFreeWire(f"{m}-control gate on target {target} has no spare wire")
    anc, spare = free[0], free[1:]
    m1 = (m + 1) // 2
    low, high = controls[:m1], controls[m1:]
    into_anc = mct_to_toffolis(low, anc, high + [target] + spare)
    into_target = mct_to_toffolis(high + [anc], target, low + spare)
    return into_target + into_anc + into_target + into_anc


def decompose_mct(c: Circuit) -> Circuit:
    """Replace every MCT gate by NCT gates; borrowed wires end as they started."""
    if not any(g.kind == MCT for g in c.gates):
        return c
    gates: list[Gate] = []
    for g in c.gates:
        if g.kind != MCT:
            gates.append(g)
            continue
        used = set(g.wires)
        free = [w for w in range(c.width) if w not in used]
        gates += mct_to_toffolis(g.controls, g.target, free)
    return c.with_gates(gates)


def _sandwich_not_runs(gates: Sequence[Gate], one: int) -> list[Gate]:
    out: list[Gate] = []
    run: list[int] = []

    def flush() -> None:
        # a pair of NOTs on the same wire cancels
        odd = [w for w in dict.fromkeys(run) if run.count(w) % 2]
        out.extend(not_sandwich(odd, one))
        run.clear()

    for g in gates:
        if g.kind == NOT:
            run.append(g.target)
        else:
            flush()
            out.append(g)
    flush()
    return out


def one_not_pipeline(f: ReversibleFunction) -> Circuit:
    """Circuit for f with no CNOTs and at most one NOT, using one constant-1 ancilla."""
    if f.n < 2:
        raise ArityTooSmall("the one-NOT construction needs n >= 2")
    base = mmd_baseline(f)
    c, one = with_one_wire(base)
    c = c.with_gates(_sandwich_not_runs(c.gates, one))
    c = eliminate_cnots(c)
    return decompose_mct(c)
