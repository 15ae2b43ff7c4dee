"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 malformed input file,
3 invalid arguments or violated preconditions.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import NamedTuple, Sequence

from . import analysis, circuit, synthesis
from .errors import FormatError, NctError
from .function import ReversibleFunction, parse_perm
from .verify import verify as verify_circuit

EXIT_OK, EXIT_VERIFY, EXIT_FORMAT, EXIT_ARGS = 0, 1, 2, 3


class CommandOutcome(NamedTuple):
    exit_code: int
    report: str
    error: str = ""


class _ArgumentError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _ArgumentError(message)


def _read_text(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror}") from None


def _load_spec(path: str) -> ReversibleFunction:
    return parse_perm(_read_text(path))


def _load_circuit(path: str) -> circuit.Circuit:
    return circuit.parse(_read_text(path))


def _emit(c: circuit.Circuit, out: str | None, summary: str) -> str:
    text = circuit.serialize(c)
    if out is None:
        return text
    Path(out).write_text(text)
    return summary


def _describe(c: circuit.Circuit) -> str:
    kinds = {k: c.count(k) for k in (circuit.NOT, circuit.CNOT, circuit.TOF, circuit.MCT)}
    parts = [f"width={c.width}", f"gates={len(c)}"] + [f"{k}={v}" for k, v in kinds.items()]
    return " ".join(parts) + "\n"


# -- subcommands -----------------------------------------------------------

def _cmd_synth(args) -> CommandOutcome:
    f = _load_spec(args.spec)
    if args.method == "pprm-split":
        c = synthesis.pprm_split_synth(f, args.a, args.prune)
    elif args.method == "bennett":
        c = synthesis.bennett_synth(f, args.a, args.prune)
    elif args.method == "mmd":
        c = synthesis.mmd_baseline(f)
    else:
        c = synthesis.one_not_pipeline(f)
    return CommandOutcome(EXIT_OK, _emit(c, args.out, _describe(c)))


def _cmd_wrap(args) -> CommandOutcome:
    c = _load_circuit(args.inp)
    f = _load_spec(args.spec)
    if args.mode == "intermediate":
        d = synthesis.weak_to_intermediate(c)
    else:
        d = synthesis.weak_to_strong(c, f)
    return CommandOutcome(EXIT_OK, _emit(d, args.out, _describe(d)))


def _cmd_transform(args) -> CommandOutcome:
    c = _load_circuit(args.inp)
    if args.eliminate_not:
        d = synthesis.eliminate_nots(c)
    elif args.eliminate_cnot:
        d = synthesis.eliminate_cnots(c)
    else:
        d = synthesis.decompose_mct(c)
    return CommandOutcome(EXIT_OK, _emit(d, args.out, _describe(d)))


def _cmd_simulate(args) -> CommandOutcome:
    c = _load_circuit(args.inp)
    if set(args.input) - {"0", "1"}:
        return CommandOutcome(EXIT_ARGS, "", f"--input must be a bit string, got {args.input!r}")
    res = circuit.simulate(c, [int(ch) for ch in args.input])
    lines = ["wires=" + "".join(map(str, res.wires))]
    if res.output is not None:
        lines.append("output=" + format(res.output, f"0{c.n}b"))
    return CommandOutcome(EXIT_OK, "\n".join(lines) + "\n")


def _cmd_verify(args) -> CommandOutcome:
    c = _load_circuit(args.inp)
    f = _load_spec(args.spec)
    verdict = verify_circuit(c, f, args.mode, args.seed)
    if verdict.ok:
        return CommandOutcome(EXIT_OK, f"ok: {verdict.checked} cases ({args.mode})\n")
    return CommandOutcome(EXIT_VERIFY, f"FAIL: {verdict.counterexample}\n")


def _cmd_cost(args) -> CommandOutcome:
    try:
        a, b, cw = (int(v) for v in args.weights.split(","))
        weights = circuit.CostWeights(a, b, cw)
    except ValueError:
        return CommandOutcome(EXIT_ARGS, "", f"--weights expects a,b,c non-negative integers, got {args.weights!r}")
    res = circuit.cost(_load_circuit(args.inp), weights)
    return CommandOutcome(EXIT_OK, f"cost={res.total} not={res.n_not} cnot={res.n_cnot} tof={res.n_tof}\n")


def _cmd_analyze(args) -> CommandOutcome:
    c = _load_circuit(args.inp)
    if args.what == "ls":
        ls = analysis.linear_sum(c, args.wire, args.position)
        return CommandOutcome(EXIT_OK, f"LS = {ls}\naffine_index={ls.affine_index()}\n")
    dag = analysis.encode_dag(c)
    lines = [f"n={dag.n} h={dag.h}"]
    lines += [f"T{i + 1} labels={la},{lb}" for i, (la, lb) in enumerate(dag.t_labels)]
    lines += [f"F{k + 1} label={lf}" for k, lf in enumerate(dag.f_labels)]
    lines += [f"edge {u}->{v} label={lab}" for u, v, lab in dag.edges()]
    if args.decode:
        lines.append("decoded=" + " ".join(map(str, analysis.decoded_table(dag))))
    return CommandOutcome(EXIT_OK, "\n".join(lines) + "\n")


def _cmd_bounds(args) -> CommandOutcome:
    report = analysis.bounds_report(args.n, args.t_over_cnot)
    if args.format == "kv":
        return CommandOutcome(EXIT_OK, report.format_kv())
    lines = [report.format_text()]
    for e in analysis.summary_report(args.n):
        value = f"{e.lower:g}" if e.exact else f"{e.lower:.6g} .. {e.upper:.6g}"
        lines.append(f"L_{e.case}: {value:<28} {e.statement}\n")
    return CommandOutcome(EXIT_OK, "".join(lines))


def _cmd_table(args) -> CommandOutcome:
    rows = analysis.tcount_table(args.n_from, args.n_to, args.tof_t)
    return CommandOutcome(EXIT_OK, analysis.format_tcount_table(rows))


def _cmd_crossing(args) -> CommandOutcome:
    n = analysis.crossing_search(args.min, args.max, args.t_over_cnot)
    return CommandOutcome(EXIT_OK, f"{n if n is not None else 'none'}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="nctsynth", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("synth", help="synthesise a circuit for a .perm function")
    s.add_argument("--spec", required=True)
    s.add_argument("--method", required=True, choices=["pprm-split", "bennett", "mmd", "one-not"])
    s.add_argument("--a", type=int, default=None, help="split size (default: optimal)")
    s.add_argument("--prune", action="store_true")
    s.add_argument("--out")
    s.set_defaults(run=_cmd_synth)

    s = sub.add_parser("wrap", help="turn a weak circuit into an intermediate or strong one")
    s.add_argument("--mode", required=True, choices=["intermediate", "strong"])
    s.add_argument("--in", dest="inp", required=True)
    s.add_argument("--spec", required=True)
    s.add_argument("--out")
    s.set_defaults(run=_cmd_wrap)

    s = sub.add_parser("transform", help="gate-basis rewrites")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--eliminate-not", action="store_true")
    g.add_argument("--eliminate-cnot", action="store_true")
    g.add_argument("--decompose-mct", action="store_true")
    s.add_argument("--in", dest="inp", required=True)
    s.add_argument("--out")
    s.set_defaults(run=_cmd_transform)

    s = sub.add_parser("simulate", help="run a circuit on one input")
    s.add_argument("--in", dest="inp", required=True)
    s.add_argument("--input", required=True, help="bits x1..xn")
    s.set_defaults(run=_cmd_simulate)

    s = sub.add_parser("verify", help="check a circuit against a .perm function")
    s.add_argument("--in", dest="inp", required=True)
    s.add_argument("--spec", required=True)
    s.add_argument("--mode", default="weak", choices=["weak", "intermediate", "strong"])
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(run=_cmd_verify)

    s = sub.add_parser("cost", help="weighted NOT/CNOT/TOF cost")
    s.add_argument("--in", dest="inp", required=True)
    s.add_argument("--weights", default="1,1,1")
    s.set_defaults(run=_cmd_cost)

    s = sub.add_parser("analyze", help="linear sums and DAG encoding")
    s.add_argument("what", choices=["ls", "dag"])
    s.add_argument("--in", dest="inp", required=True)
    s.add_argument("--wire", type=int)
    s.add_argument("--position", type=int, default=None)
    s.add_argument("--decode", action="store_true")
    s.set_defaults(run=_cmd_analyze)

    s = sub.add_parser("bounds", help="all bound formulas for one n")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--t-over-cnot", type=float, default=analysis.bounds.DEFAULT_T_OVER_CNOT)
    s.add_argument("--format", choices=["text", "kv"], default="text")
    s.set_defaults(run=_cmd_bounds)

    s = sub.add_parser("table", help="T-count upper bounds per n")
    s.add_argument("--from", dest="n_from", type=int, required=True)
    s.add_argument("--to", dest="n_to", type=int, required=True)
    s.add_argument("--tof-t", type=int, choices=[7, 4], default=7)
    s.set_defaults(run=_cmd_table)

    s = sub.add_parser("crossing", help="smallest n where the T-count undervalues the gate-count bound")
    s.add_argument("--max", type=int, required=True)
    s.add_argument("--min", type=int, default=2)
    s.add_argument("--t-over-cnot", type=float, default=analysis.bounds.DEFAULT_T_OVER_CNOT)
    s.set_defaults(run=_cmd_crossing)
    return p


def run(argv: Sequence[str]) -> CommandOutcome:
    try:
        args = build_parser().parse_args(list(argv))
    except _ArgumentError as exc:
        return CommandOutcome(EXIT_ARGS, "", str(exc))
    if args.command == "analyze" and args.what == "ls" and args.wire is None:
        return CommandOutcome(EXIT_ARGS, "", "analyze ls requires --wire")
    try:
        return args.run(args)
    except FormatError as exc:
        return CommandOutcome(EXIT_FORMAT, "", str(exc))
    except (NctError, ValueError) as exc:
        return CommandOutcome(EXIT_ARGS, "", str(exc))


def main(argv: Sequence[str] | None = None) -> int:
    outcome = run(sys.argv[1:] if argv is None else argv)
    if outcome.report:
        sys.stdout.write(outcome.report)
    if outcome.error:
        sys.stderr.write(f"nctsynth: {outcome.error}\n")
    return outcome.exit_code


if __name__ == "__main__":
    sys.exit(main())
