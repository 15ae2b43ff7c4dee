"""Closed-form bounds, counting arguments and T-count tables."""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass, fields
from typing import Iterator, Literal

from ..errors import ArityTooSmall, DegenerateBase, TooLargeForExact
from ..synthesis.split import bennett_toffoli_count, optimal_split, weak_toffoli_count

Method = Literal["exact", "stirling"]

#: Largest argument accepted by the exact log-factorial summation.
EXACT_FACTORIAL_LIMIT = 1 << 20

#: Published upper bounds on the T-count (7 T gates per Toffoli), n = 3..20.
REFERENCE_TCOUNT = {
    3: 36, 4: 84, 5: 175, 6: 294, 7: 525, 8: 812, 9: 1295, 10: 2002, 11: 2989,
    12: 4648, 13: 6643, 14: 10430, 15: 14441, 16: 22036, 17: 30975, 18: 46186,
    19: 65877, 20: 96320,
}

#: T gates per Toffoli: unitary construction, and with measurement and feedback.
TOFFOLI_T_COST = (7, 4)

#: Rough cost of a T gate in units of a logical CNOT.
DEFAULT_T_OVER_CNOT = 50.0


def log2_factorial(m: int, method: Method = "exact") -> float:
    if m < 1:
        raise ValueError("m must be at least 1")
    if method == "exact":
        if m > EXACT_FACTORIAL_LIMIT:
            raise TooLargeForExact(f"exact summation limited to m <= {EXACT_FACTORIAL_LIMIT}")
        return math.fsum(math.log2(k) for k in range(2, m + 1))
    if method == "stirling":
        return m * math.log2(m) - m * math.log2(math.e) + 0.5 * math.log2(2 * math.pi * m)
    raise ValueError(f"unknown method {method!r}")


def log2_permutation_count(n: int) -> tuple[float, Method]:
    """log2 of (2^n)!, exact while feasible, Stirling beyond."""
    method: Method = "exact" if (1 << n) <= EXACT_FACTORIAL_LIMIT else "stirling"
    return log2_factorial(1 << n, method), method


def dag_count_log2(n: int, h: int) -> int:
    """log2 of the number of labelled DAGs with h Toffoli vertices and n outputs."""
    return h * (h - 1) + n * h + 2 * h * (n + 1) + n * (n + 1)


def lower_bound_001(n: int) -> int:
    """Smallest h whose DAG count reaches the number of n-bit reversible functions."""
    if n < 1:
        raise ValueError("n must be at least 1")
    target, _ = log2_permutation_count(n)
    # h^2 + (3n+1)h + n^2 + n >= target
    p = 3 * n + 1
    disc = p * p - 4 * (n * n + n - target)
    h = max(0, int((-p + math.sqrt(max(disc, 0.0))) / 2) - 1)
    while dag_count_log2(n, h) < target:
        h += 1
    while h > 0 and dag_count_log2(n, h - 1) >= target:
        h -= 1
    return h


def counting_lower_bound(log2_g: float, log2_b: float) -> float:
    """Cost lower bound log2 G / log2 b for G targets and b distinct unit-cost circuits."""
    if log2_b <= 0:
        raise DegenerateBase("need more than one distinct unit-cost circuit")
    return log2_g / log2_b


def bennett_width(n: int, a: int) -> int:
    """Wire budget S = 2^a + 2^b + n + 1 of the Bennett-wrapped construction."""
    return 2**a + 2 ** (n - a) + n + 1


def unit_cost_circuits(width: int) -> int:
    """Distinct single Toffoli or CNOT gates on ``width`` wires, with free input-side NOTs."""
    s = width
    return 4 * s * (s - 1) * (s - 2) + 4 * s * (s - 1)


def gate_count_lower_bound(n: int, a: int | None = None) -> tuple[float, int, int, Method]:
    """CNOT+Toffoli lower bound over the Bennett construction's wire budget.

    Functions are counted up to free output negation, (2^n)!/2^n of them.
    Returns (bound, a, S, factorial method).
    """
    if a is None:
        a = optimal_split(n, "bennett")
    s = bennett_width(n, a)
    log2_perm, method = log2_permutation_count(n)
    bound = counting_lower_bound(log2_perm - n, math.log2(unit_cost_circuits(s)))
    return bound, a, s, method


# -- asymptotic formulas ---------------------------------------------------

def sqrt_n_2_half_n(n: int) -> float:
    return math.sqrt(n) * 2 ** (n / 2)


def lb_001_asymptotic(n: int) -> float:
    return sqrt_n_2_half_n(n)


def ub_001_asymptotic(n: int) -> float:
    return 3 / math.sqrt(2) * sqrt_n_2_half_n(n)


def lb_011_asymptotic(n: int) -> float:
    return n * 2**n / (3 * math.log2(n))


def ub_011_asymptotic(n: int) -> float:
    return 40 * n * 2**n / math.log2(n)


def ub_111_asymptotic(n: int) -> float:
    return 48 * n * 2**n / math.log2(n)


# -- T-count tables --------------------------------------------------------

@dataclass(frozen=True)
class TcountRow:
    n: int
    a: int
    toffolis: int
    tcount: int
    reference: int | None
    """Published value scaled to the same per-Toffoli T cost, when one exists."""

    @property
    def discrepant(self) -> bool:
        return self.reference is not None and self.reference != self.tcount


def bennett_minimum(n: int) -> tuple[int, int]:
    """(a, Toffoli count) minimising the Bennett construction."""
    a = optimal_split(n, "bennett")
    return a, bennett_toffoli_count(n, a)


def tcount_table(n_from: int, n_to: int, toffoli_t_cost: int = 7) -> list[TcountRow]:
    if n_from < 2:
        raise ArityTooSmall("T-count rows start at n = 2")
    rows = []
    for n in range(n_from, n_to + 1):
        a, tofs = bennett_minimum(n)
        ref = REFERENCE_TCOUNT.get(n)
        if ref is not None and toffoli_t_cost != 7:
            ref = ref * toffoli_t_cost / 7
            ref = int(ref) if ref == int(ref) else None
        rows.append(TcountRow(n, a, tofs, toffoli_t_cost * tofs, ref))
    return rows


def format_tcount_table(rows: list[TcountRow]) -> str:
    lines = ["n   T-count"]
    notes = []
    for r in rows:
        lines.append(f"{r.n:<3d} {r.tcount:,}")
        if r.discrepant:
            notes.append(f"note: n={r.n} computes to {r.tcount:,}; the published table lists {r.reference:,}")
    return "\n".join(lines + notes) + "\n"


# -- T-count versus CNOT-cost discrepancy ----------------------------------

@dataclass(frozen=True)
class Discrepancy:
    n: int
    a: int
    width: int
    x: int
    """T-count upper bound, 7 per Toffoli of the Bennett construction."""
    y: float
    """CNOT+Toffoli count lower bound on the same wire budget."""
    y_scaled: float
    ratio: float
    method: Method


def discrepancy_report(n: int, t_over_cnot: float = DEFAULT_T_OVER_CNOT) -> Discrepancy:
    if n < 2:
        raise ArityTooSmall("need n >= 2")
    a, tofs = bennett_minimum(n)
    x = 7 * tofs
    y, a, s, method = gate_count_lower_bound(n, a)
    y_scaled = y / t_over_cnot
    return Discrepancy(n, a, s, x, y, y_scaled, y_scaled / x, method)


def crossing_search(n_min: int, n_max: int, t_over_cnot: float = DEFAULT_T_OVER_CNOT) -> int | None:
    """Smallest n in the range where the scaled gate-count bound exceeds the T-count bound."""
    for n in range(max(n_min, 2), n_max + 1):
        d = discrepancy_report(n, t_over_cnot)
        if d.y_scaled > d.x:
            return n
    return None


# -- reports ---------------------------------------------------------------

@dataclass(frozen=True)
class SummaryEntry:
    case: str
    lower: float
    upper: float
    exact: bool
    statement: str


def summary_report(n: int, g: int = 1) -> list[SummaryEntry]:
    """All eight gate-type cost cases L_abc(n, g) for NOT/CNOT/TOF weights a, b, c."""
    if n < 2:
        raise ArityTooSmall("need n >= 2")
    lb1, ub1 = lb_001_asymptotic(n), ub_001_asymptotic(n)
    lb3 = lb_011_asymptotic(n)
    l110 = 1 if g == 1 else 0

    def exact(case: str, value: int, text: str) -> SummaryEntry:
        return SummaryEntry(case, value, value, True, text)

    return [
        exact("000", 0, "L_000(n,g) = 0 for all g"),
        SummaryEntry("001", lb1, ub1, False, "sqrt(n)2^(n/2) <~ L_001(n) <~ (3/sqrt2)sqrt(n)2^(n/2)"),
        exact("010", 0, "L_010(n,g) = 0 for all g"),
        SummaryEntry("011", lb3, ub_011_asymptotic(n), False, "n2^n/(3log2 n) <~ L_011(n,1) <~ 40n2^n/log2 n"),
        exact("100", 0, "L_100(n,g) = 0 for all g"),
        SummaryEntry("101", lb1, ub1, False, "sqrt(n)2^(n/2) <~ L_101(n) <~ (3/sqrt2)sqrt(n)2^(n/2)"),
        exact("110", l110, "L_110(n,1) = 1, L_110(n,g) = 0 for g > 1"),
        SummaryEntry("111", lb3, ub_111_asymptotic(n), False, "n2^n/(3log2 n) <~ L_111(n,1) <~ 48n2^n/log2 n"),
    ]


@dataclass(frozen=True)
class BoundsReport:
    n: int
    lb_001_exact: int
    lb_001_method: str
    lb_001_asym: float
    ub_001_asym: float
    conjecture: float
    lb_011: float
    ub_011_asym: float
    lb_111: float
    ub_111_asym: float
    weak_a: int
    weak_toffolis: int
    bennett_a: int
    bennett_toffolis: int
    tcount7: int
    tcount4: int
    x: int
    y: float
    y_scaled: float
    ratio: float
    t_over_cnot: float

    def items(self) -> Iterator[tuple[str, object]]:
        for f in fields(self):
            yield f.name, getattr(self, f.name)

    def as_dict(self) -> dict:
        return asdict(self)

    def format_kv(self) -> str:
        return "".join(f"{k}={_fmt(v)}\n" for k, v in self.items())

    def format_text(self) -> str:
        width = max(len(f.name) for f in fields(self))
        return "".join(f"{k:<{width}}  {_fmt(v)}\n" for k, v in self.items())


def _fmt(v: object) -> str:
    if isinstance(v, float):
        return f"{v:.6g}" if abs(v) < 1e6 else f"{v:.6e}"
    return str(v)


def bounds_report(n: int, t_over_cnot: float = DEFAULT_T_OVER_CNOT) -> BoundsReport:
    if n < 2:
        raise ArityTooSmall("need n >= 2")
    weak_a = optimal_split(n, "weak")
    bennett_a, tofs = bennett_minimum(n)
    d = discrepancy_report(n, t_over_cnot)
    _, method = log2_permutation_count(n)
    lb3 = lb_011_asymptotic(n)
    return BoundsReport(
        n=n,
        lb_001_exact=lower_bound_001(n),
        lb_001_method=method,
        lb_001_asym=lb_001_asymptotic(n),
        ub_001_asym=ub_001_asymptotic(n),
        conjecture=sqrt_n_2_half_n(n),
        lb_011=lb3,
        ub_011_asym=ub_011_asymptotic(n),
        lb_111=lb3,
        ub_111_asym=ub_111_asymptotic(n),
        weak_a=weak_a,
        weak_toffolis=weak_toffoli_count(n, weak_a),
        bennett_a=bennett_a,
        bennett_toffolis=tofs,
        tcount7=7 * tofs,
        tcount4=4 * tofs,
        x=d.x,
        y=d.y,
        y_scaled=d.y_scaled,
        ratio=d.ratio,
        t_over_cnot=t_over_cnot,
    )
