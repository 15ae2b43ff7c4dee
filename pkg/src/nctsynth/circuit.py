"""NCT circuit representation, bit-parallel simulation, costs and the ``.nct`` format.

A circuit is an immutable value: a number of wires, a role per wire (primary
input ``x_i`` or a constant 0/1), a gate string read left to right, and an
optional designation of the wires carrying ``f_1 .. f_n`` at the end.

Simulation evaluates all requested input assignments at once: wire state is a
``(width, N)`` boolean array with one column per assignment.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .errors import (
    AssignmentLengthMismatch,
    ArityTooLarge,
    BadOutputMap,
    CircuitSyntaxError,
    ContainsMct,
    DuplicateInput,
    NoDesignatedOutputs,
    WireOutOfRange,
)
from .function import MAX_TABLE_ARITY, ReversibleFunction

NOT, CNOT, TOF, MCT = "not", "cnot", "tof", "mct"
_ARITY = {NOT: 0, CNOT: 1, TOF: 2}


@dataclass(frozen=True)
class Gate:
    """A multiple-control Toffoli family gate: flip ``target`` when all controls are 1.

    ``kind`` distinguishes the NCT gates from a generic MCT; TOF controls keep
    their order since the first and second control are distinguishable.
    """

    kind: str
    controls: tuple[int, ...]
    target: int

    def __post_init__(self):
        if self.kind not in (NOT, CNOT, TOF, MCT):
            raise ValueError(f"unknown gate kind {self.kind!r}")
        if self.kind in _ARITY and len(self.controls) != _ARITY[self.kind]:
            raise ValueError(f"{self.kind} takes {_ARITY[self.kind]} controls")
        wires = self.controls + (self.target,)
        if len(set(wires)) != len(wires):
            raise ValueError(f"gate wires must be distinct: {wires}")

    @property
    def wires(self) -> tuple[int, ...]:
        return self.controls + (self.target,)

    def __str__(self) -> str:
        if self.kind == MCT:
            return " ".join(["mct", *map(str, self.controls), ";", str(self.target)])
        return " ".join([self.kind, *map(str, self.wires)])


def not_(target: int) -> Gate:
    return Gate(NOT, (), target)


def cnot(control: int, target: int) -> Gate:
    return Gate(CNOT, (control,), target)


def tof(control1: int, control2: int, target: int) -> Gate:
    return Gate(TOF, (control1, control2), target)


def mct(controls: Sequence[int], target: int) -> Gate:
    return Gate(MCT, tuple(controls), target)


def nct_gate(controls: Sequence[int], target: int) -> Gate:
    """The NCT gate for up to two controls, MCT beyond."""
    controls = tuple(controls)
    if len(controls) == 0:
        return not_(target)
    if len(controls) == 1:
        return cnot(controls[0], target)
    if len(controls) == 2:
        return tof(controls[0], controls[1], target)
    return mct(controls, target)


@dataclass(frozen=True)
class Input:
    """Wire role: primary input ``x_index`` (1-based)."""

    index: int


@dataclass(frozen=True)
class Const:
    """Wire role: ancilla initialised to ``value``."""

    value: int


Role = Input | Const


@dataclass(frozen=True)
class CostWeights:
    not_: int = 1
    cnot: int = 1
    tof: int = 1

    def __post_init__(self):
        if min(self.not_, self.cnot, self.tof) < 0:
            raise ValueError("cost weights must be non-negative")


class Cost(NamedTuple):
    total: int
    n_not: int
    n_cnot: int
    n_tof: int


@dataclass(frozen=True)
class Circuit:
    width: int
    roles: tuple[Role, ...]
    gates: tuple[Gate, ...] = ()
    outputs: tuple[int, ...] = ()
    """``outputs[i-1]`` is the wire read as ``f_i``; empty for fragments."""
    input_wires: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "roles", tuple(self.roles))
        object.__setattr__(self, "gates", tuple(self.gates))
        object.__setattr__(self, "outputs", tuple(self.outputs))
        if len(self.roles) != self.width:
            raise ValueError(f"{len(self.roles)} roles for {self.width} wires")
        inputs: dict[int, int] = {}
        for w, role in enumerate(self.roles):
            if isinstance(role, Input):
                if role.index in inputs:
                    raise DuplicateInput(f"x{role.index} appears on wires {inputs[role.index]} and {w}")
                inputs[role.index] = w
            elif not (isinstance(role, Const) and role.value in (0, 1)):
                raise ValueError(f"bad role {role!r} on wire {w}")
        n = len(inputs)
        if sorted(inputs) != list(range(1, n + 1)):
            raise DuplicateInput(f"primary inputs must be x1..x{n}, got {sorted(inputs)}")
        object.__setattr__(self, "input_wires", tuple(inputs[i] for i in range(1, n + 1)))
        for g in self.gates:
            for w in g.wires:
                if not 0 <= w < self.width:
                    raise WireOutOfRange(f"gate '{g}' references wire {w}, width is {self.width}")
        if self.outputs:
            if len(self.outputs) != n:
                raise BadOutputMap(f"{len(self.outputs)} outputs designated for {n} inputs")
            for w in self.outputs:
                if not 0 <= w < self.width:
                    raise BadOutputMap(f"output wire {w} out of range")

    # -- structure ---------------------------------------------------------

    @property
    def n(self) -> int:
        """Number of primary inputs."""
        return len(self.input_wires)

    @property
    def ancillae(self) -> tuple[int, ...]:
        return tuple(w for w, r in enumerate(self.roles) if isinstance(r, Const))

    @property
    def toffoli_count(self) -> int:
        return sum(g.kind == TOF for g in self.gates)

    def count(self, kind: str) -> int:
        return sum(g.kind == kind for g in self.gates)

    def __len__(self) -> int:
        return len(self.gates)

    def with_gates(self, gates: Iterable[Gate]) -> "Circuit":
        return Circuit(self.width, self.roles, tuple(gates), self.outputs)

    def initial_state(self, inputs: np.ndarray) -> np.ndarray:
        """Wire state before the first gate; ``inputs`` is an ``(n, N)`` 0/1 array."""
        inputs = np.asarray(inputs, dtype=bool)
        if inputs.ndim != 2 or inputs.shape[0] != self.n:
            raise AssignmentLengthMismatch(f"expected {self.n} input rows, got shape {inputs.shape}")
        state = np.zeros((self.width, inputs.shape[1]), dtype=bool)
        for w, role in enumerate(self.roles):
            if isinstance(role, Input):
                state[w] = inputs[role.index - 1]
            elif role.value:
                state[w] = True
        return state


def apply_gate(state: np.ndarray, g: Gate) -> None:
    """Apply one gate in place to a ``(width, N)`` wire state."""
    if g.kind == NOT:
        np.logical_not(state[g.target], out=state[g.target])
    elif g.kind == CNOT:
        state[g.target] ^= state[g.controls[0]]
    elif g.kind == TOF:
        state[g.target] ^= state[g.controls[0]] & state[g.controls[1]]
    elif g.controls:
        state[g.target] ^= np.logical_and.reduce(state[list(g.controls)], axis=0)
    else:
        np.logical_not(state[g.target], out=state[g.target])


def run(c: Circuit, state: np.ndarray) -> np.ndarray:
    """Apply every gate of ``c`` to a copy of ``state`` and return it."""
    state = np.array(state, dtype=bool, copy=True)
    for g in c.gates:
        apply_gate(state, g)
    return state


def trace(c: Circuit, inputs: np.ndarray) -> list[np.ndarray]:
    """Wire states at every cut: ``result[p]`` is the state before gate ``p``."""
    state = c.initial_state(inputs)
    cuts = [state.copy()]
    for g in c.gates:
        apply_gate(state, g)
        cuts.append(state.copy())
    return cuts


def input_bits(n: int, xs: np.ndarray | None = None) -> np.ndarray:
    """``(n, N)`` bit matrix of input indices ``xs`` (all 2^n when omitted), x_1 = MSB."""
    if xs is None:
        xs = np.arange(1 << n, dtype=np.int64)
    xs = np.asarray(xs, dtype=np.int64)
    shifts = np.arange(n - 1, -1, -1, dtype=np.int64)[:, None]
    return ((xs[None, :] >> shifts) & 1).astype(bool)


def pack_bits(rows: np.ndarray) -> np.ndarray:
    """Inverse of :func:`input_bits`: first row is the most significant bit."""
    rows = np.asarray(rows, dtype=np.int64)
    k = rows.shape[0]
    weights = (1 << np.arange(k - 1, -1, -1, dtype=np.int64))[:, None]
    return (rows * weights).sum(axis=0)


class SimulationResult(NamedTuple):
    wires: tuple[int, ...]
    output: int | None


def simulate(c: Circuit, assignment: Sequence[int]) -> SimulationResult:
    """Run ``c`` on one assignment of its primary inputs (``assignment[i-1]`` is x_i)."""
    if len(assignment) != c.n:
        raise AssignmentLengthMismatch(f"circuit has {c.n} primary inputs, got {len(assignment)} bits")
    bits = np.asarray(assignment, dtype=bool).reshape(c.n, 1)
    state = run(c, c.initial_state(bits))[:, 0]
    wires = tuple(int(v) for v in state)
    output = None
    if c.outputs:
        output = 0
        for w in c.outputs:
            output = (output << 1) | wires[w]
    return SimulationResult(wires, output)


def final_states(c: Circuit, xs: np.ndarray | None = None) -> np.ndarray:
    """Final ``(width, N)`` wire state over the input indices ``xs`` (default: all)."""
    return run(c, c.initial_state(input_bits(c.n, xs)))


class RealizedTable(NamedTuple):
    table: tuple[int, ...]
    bijective: bool

    def as_function(self) -> ReversibleFunction:
        return ReversibleFunction((len(self.table) - 1).bit_length(), self.table)


def realized_function(c: Circuit, max_arity: int = MAX_TABLE_ARITY) -> RealizedTable:
    """Designated outputs of ``c`` over all 2^n assignments."""
    if not c.outputs:
        raise NoDesignatedOutputs("circuit has no designated outputs")
    if c.n > max_arity:
        raise ArityTooLarge(f"n={c.n} exceeds the enumeration limit {max_arity}")
    state = final_states(c)
    table = tuple(int(v) for v in pack_bits(state[list(c.outputs)]))
    return RealizedTable(table, len(set(table)) == len(table))


def invert(c: Circuit) -> Circuit:
    """Every gate is an involution, so reversing the gate string inverts the circuit."""
    return c.with_gates(reversed(c.gates))


def cost(c: Circuit, w: CostWeights = CostWeights()) -> Cost:
    n_not = n_cnot = n_tof = 0
    for g in c.gates:
        if g.kind == NOT:
            n_not += 1
        elif g.kind == CNOT:
            n_cnot += 1
        elif g.kind == TOF:
            n_tof += 1
        else:
            raise ContainsMct("decompose MCT gates before costing")
    return Cost(w.not_ * n_not + w.cnot * n_cnot + w.tof * n_tof, n_not, n_cnot, n_tof)


def random_circuit(
    n: int,
    n_gates: int,
    seed: int,
    n_const: int = 0,
    kinds: Sequence[str] = (NOT, CNOT, TOF),
    outputs: bool = True,
) -> Circuit:
    """Random NCT circuit over ``n`` inputs and ``n_const`` random constants."""
    rng = np.random.default_rng(seed)
    width = n + n_const
    roles: list[Role] = [Input(i + 1) for i in range(n)]
    roles += [Const(int(v)) for v in rng.integers(0, 2, n_const)]
    gates = []
    usable = [k for k in kinds if _ARITY.get(k, 0) < width]
    for _ in range(n_gates):
        kind = usable[rng.integers(len(usable))]
        wires = [int(w) for w in rng.choice(width, _ARITY[kind] + 1, replace=False)]
        gates.append(Gate(kind, tuple(wires[:-1]), wires[-1]))
    outs: tuple[int, ...] = ()
    if outputs:
        outs = tuple(int(w) for w in rng.choice(width, n, replace=False))
    return Circuit(width, tuple(roles), tuple(gates), outs)


# -- .nct text format ------------------------------------------------------

def serialize(c: Circuit) -> str:
    lines = [f".width {c.width}"]
    for w, role in enumerate(c.roles):
        if isinstance(role, Input):
            lines.append(f".input {w} x{role.index}")
        else:
            lines.append(f".const {w} {role.value}")
    for i, w in enumerate(c.outputs, start=1):
        lines.append(f".output {i} {w}")
    if any(g.kind == MCT for g in c.gates):
        lines.append(".allow-mct")
    lines.extend(str(g) for g in c.gates)
    lines.append(".end")
    return "\n".join(lines) + "\n"


def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise CircuitSyntaxError(f"expected integers, got {' '.join(tokens)!r}", lineno) from None


def parse(text: str) -> Circuit:
    width = None
    roles: dict[int, Role] = {}
    outputs: dict[int, int] = {}
    gates: list[Gate] = []
    allow_mct = False
    ended = False

    def check_wire(w: int, lineno: int) -> int:
        if width is None:
            raise CircuitSyntaxError(".width must come first", lineno)
        if not 0 <= w < width:
            raise WireOutOfRange(f"line {lineno}: wire {w} outside 0..{width - 1}")
        return w

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ended:
            raise CircuitSyntaxError("content after .end", lineno)
        head, *rest = line.split()
        if head.startswith("."):
            if gates and head != ".end":
                raise CircuitSyntaxError("directives must precede gates", lineno)
            if head == ".width":
                if width is not None or len(rest) != 1:
                    raise CircuitSyntaxError("expected a single '.width <k>'", lineno)
                (width,) = _ints(rest, lineno)
                if width < 0:
                    raise CircuitSyntaxError("negative width", lineno)
            elif head == ".input":
                if len(rest) != 2 or not rest[1].startswith("x"):
                    raise CircuitSyntaxError("expected '.input <wire> x<i>'", lineno)
                w = check_wire(_ints(rest[:1], lineno)[0], lineno)
                (idx,) = _ints([rest[1][1:]], lineno)
                if idx < 1:
                    raise CircuitSyntaxError("input indices start at x1", lineno)
                if w in roles:
                    raise DuplicateInput(f"line {lineno}: wire {w} already has a role")
                if Input(idx) in roles.values():
                    raise DuplicateInput(f"line {lineno}: x{idx} declared twice")
                roles[w] = Input(idx)
            elif head == ".const":
                w, v = _ints(rest, lineno) if len(rest) == 2 else (None, None)
                if w is None or v not in (0, 1):
                    raise CircuitSyntaxError("expected '.const <wire> 0|1'", lineno)
                check_wire(w, lineno)
                if w in roles:
                    raise DuplicateInput(f"line {lineno}: wire {w} already has a role")
                roles[w] = Const(v)
            elif head == ".output":
                if len(rest) != 2:
                    raise CircuitSyntaxError("expected '.output <index> <wire>'", lineno)
                idx, w = _ints(rest, lineno)
                if width is None or not 0 <= w < width:
                    raise BadOutputMap(f"line {lineno}: output wire {w} out of range")
                if idx in outputs:
                    raise BadOutputMap(f"line {lineno}: output f{idx} designated twice")
                outputs[idx] = w
            elif head == ".allow-mct":
                allow_mct = True
            elif head == ".end":
                ended = True
            else:
                raise CircuitSyntaxError(f"unknown directive {head}", lineno)
            continue

        if width is None:
            raise CircuitSyntaxError(".width must come first", lineno)
        if head == MCT:
            if not allow_mct:
                raise CircuitSyntaxError("mct gate requires the .allow-mct directive", lineno)
            ctrl_part, sep, tgt_part = " ".join(rest).partition(";")
            if not sep or len(tgt_part.split()) != 1:
                raise CircuitSyntaxError("expected 'mct <controls> ; <target>'", lineno)
            controls = _ints(ctrl_part.split(), lineno)
            (target,) = _ints(tgt_part.split(), lineno)
        elif head in _ARITY:
            wires = _ints(rest, lineno)
            if len(wires) != _ARITY[head] + 1:
                raise CircuitSyntaxError(f"{head} takes {_ARITY[head] + 1} wires", lineno)
            controls, target = wires[:-1], wires[-1]
        else:
            raise CircuitSyntaxError(f"unknown gate {head!r}", lineno)
        for w in (*controls, target):
            check_wire(w, lineno)
        try:
            gates.append(Gate(head, tuple(controls), target))
        except ValueError as exc:
            raise CircuitSyntaxError(str(exc), lineno) from None

    if width is None:
        raise CircuitSyntaxError("missing .width")
    if not ended:
        raise CircuitSyntaxError("missing .end")
    missing = [w for w in range(width) if w not in roles]
    if missing:
        raise CircuitSyntaxError(f"wires without a role: {missing}")
    n = sum(isinstance(r, Input) for r in roles.values())
    if outputs and sorted(outputs) != list(range(1, n + 1)):
        raise BadOutputMap(f"outputs must cover f1..f{n} exactly once, got {sorted(outputs)}")
    return Circuit(
        width,
        tuple(roles[w] for w in range(width)),
        tuple(gates),
        tuple(outputs[i] for i in range(1, len(outputs) + 1)),
    )
