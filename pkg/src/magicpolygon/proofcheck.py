"""Mechanical check of the linear-algebra step behind odd-n nonexistence.

Write n = 2k+1.  In a magic n-gon the center is 2k+2, the line sum is 6k+6
and every diagonal pair sums to 4k+4.  Put the pair (1, 4k+3) on a diagonal
with x at the vertex and y at the opposite midpoint.  The sides through the
neighbouring nodes give five linear equations in the six unknown neighbours
a, b, d, e, f, g.  Whichever end holds 1, every solution has e = g, which is
impossible because all node values differ.  So the pair cannot be placed and
no magic odd polygon exists.

The systems are reduced symbolically over Q(k), so one pass covers every k.
A sweep then rebuilds each system for k = 1..K with plain rationals and
reduces it again as an independent check.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .kpoly import KPolynomial, RationalFunction

VARIABLES = ("a", "b", "d", "e", "f", "g")


class Case(str, enum.Enum):
    X_EQUALS_ONE = "x=1"
    X_EQUALS_MAX = "x=4k+3"


# (variables with coefficient 1, constant as (slope, intercept) in k)
def _equations(case: Case):
    if case is Case.X_EQUALS_ONE:
        outer, inner = (6, 5), (2, 3)
    else:
        outer, inner = (2, 3), (6, 5)
    return [
        (("d", "e"), outer),
        (("f", "g"), outer),
        (("a", "b"), inner),
        (("b", "e"), (4, 4)),
        (("a", "f"), (4, 4)),
    ]


@dataclass
class LinearSystemSpec:
    case: Case
    variables: tuple[str, ...]
    rows: list[list[RationalFunction]]


def build_system(case: Case) -> LinearSystemSpec:
    """The 5x7 augmented matrix (columns a, b, d, e, f, g | constant)."""
    case = Case(case)
    rows = []
    for names, (slope, intercept) in _equations(case):
        row = [RationalFunction(1 if v in names else 0) for v in VARIABLES]
        row.append(RationalFunction(KPolynomial.linear(slope, intercept)))
        rows.append(row)
    return LinearSystemSpec(case, VARIABLES, rows)


def numeric_system(case: Case, k: int) -> list[list[Fraction]]:
    """The same system with k fixed, built straight from the equations."""
    rows = []
    for names, (slope, intercept) in _equations(Case(case)):
        rows.append([Fraction(int(v in names)) for v in VARIABLES] + [Fraction(slope * k + intercept)])
    return rows


def _is_zero(x) -> bool:
    return x.is_zero() if isinstance(x, RationalFunction) else x == 0


def rref(matrix: Sequence[Sequence], poles: Optional[list] = None):
    """Reduced row echelon form over any exact field.

    Entries may be ``Fraction`` or ``RationalFunction``.  Returns a new matrix
    and the 0-based pivot columns.  Pivots that are non-constant rational
    functions are appended to ``poles`` when given: the reduction is invalid
    at their zeros.
    """
    m = [list(row) for row in matrix]
    if not m:
        return [], []
    n_rows, n_cols = len(m), len(m[0])
    pivots = []
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        pick = next((i for i in range(r, n_rows) if not _is_zero(m[i][c])), None)
        if pick is None:
            continue
        m[r], m[pick] = m[pick], m[r]
        p = m[r][c]
        if poles is not None and isinstance(p, RationalFunction) and (p.num.degree > 0 or p.den.degree > 0):
            poles.append(p)
        if p != 1:
            m[r] = [x / p for x in m[r]]
        for i in range(n_rows):
            if i != r and not _is_zero(m[i][c]):
                factor = m[i][c]
                m[i] = [x if _is_zero(y) else x - factor * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m, pivots


def is_consistent(reduced, pivots) -> bool:
    """No row reads 0 = nonzero.  Expects an augmented matrix in RREF."""
    last = len(reduced[0]) - 1 if reduced else 0
    return last not in pivots


def general_solution(reduced, pivots):
    """Each variable as (constant, {free column: coefficient}).

    Expects a consistent augmented matrix in RREF.
    """
    n_vars = len(reduced[0]) - 1
    free = [c for c in range(n_vars) if c not in pivots]
    one = _one_like(reduced[0][0])
    zero = one - one
    out = {}
    for c in free:
        out[c] = (zero, {f: (one if f == c else zero) for f in free})
    for row, c in zip(reduced, pivots):
        out[c] = (row[-1], {f: -row[f] for f in free})
    return [out[c] for c in range(n_vars)]


def _one_like(x):
    return RationalFunction(1) if isinstance(x, RationalFunction) else Fraction(1)


def forces_equal(reduced, pivots, i: int, j: int) -> bool:
    """True when every solution has variable i equal to variable j."""
    sol = general_solution(reduced, pivots)
    ci, ti = sol[i]
    cj, tj = sol[j]
    return _is_zero(ci - cj) and all(_is_zero(ti[f] - tj[f]) for f in ti)


def in_row_space(row, basis) -> bool:
    """Whether ``row`` is a combination of the rows of an RREF ``basis``.

    The coefficients are read off the pivot columns, then checked everywhere.
    """
    reduced = [b for b in basis if not all(_is_zero(x) for x in b)]
    pivot_cols = [next(c for c, x in enumerate(b) if not _is_zero(x)) for b in reduced]
    combo = [row[c] for c in pivot_cols]
    for c in range(len(row)):
        acc = row[c] - row[c]
        for w, b in zip(combo, reduced):
            acc = acc + w * b[c]
        if not _is_zero(acc - row[c]):
            return False
    return True


def _linear(slope, intercept):
    return RationalFunction(KPolynomial.linear(slope, intercept))


# Case x=1 reduced form as displayed alongside the argument; the check
# compares against it entry by entry.
REFERENCE_CASE1_RREF = [
    [1, 0, 0, 0, 0, -1, _linear(-2, -1)],
    [0, 1, 0, 0, 0, 1, _linear(4, 4)],
    [0, 0, 1, 0, 0, 1, _linear(6, 5)],
    [0, 0, 0, 1, 0, -1, 0],
    [0, 0, 0, 0, 1, 1, _linear(6, 5)],
]


def format_row(row) -> list[str]:
    return [str(x) for x in row]


@dataclass
class CaseReport:
    case: Case
    system: list[list[str]]
    reduced: list[list[str]]
    pivots: list[str]
    consistent: bool
    e_equals_g: bool
    row_space_preserved: bool
    poles: list[str]
    matches_reference: Optional[bool] = None

    @property
    def contradiction(self) -> bool:
        # e and g are different nodes, so a forced e = g repeats a value
        return self.consistent and self.e_equals_g

    def to_dict(self) -> dict:
        out = {
            "case": self.case.value,
            "system": self.system,
            "rref": self.reduced,
            "pivots": self.pivots,
            "consistent": self.consistent,
            "e_equals_g": self.e_equals_g,
            "row_space_preserved": self.row_space_preserved,
            "poles": self.poles,
            "contradiction": self.contradiction,
        }
        if self.matches_reference is not None:
            out["matches_reference"] = self.matches_reference
        return out


@dataclass
class SweepReport:
    k_max: int
    checked: int = 0
    failures: list[dict] = field(default_factory=list)

    @property
    def agreed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "k_range": [1, self.k_max] if self.k_max else [],
            "systems_checked": self.checked,
            "agreed": self.agreed,
            "failures": self.failures[:20],
        }


@dataclass
class ProofReport:
    cases: list[CaseReport]
    sweep: SweepReport

    @property
    def fatal(self) -> bool:
        """Set when a check fails; that would point to a bug here, not new mathematics."""
        return not (all(c.contradiction and c.row_space_preserved and not c.poles for c in self.cases)
                    and all(c.matches_reference is not False for c in self.cases)
                    and self.sweep.agreed)

    @property
    def conclusion(self) -> str:
        if self.fatal:
            return "inconsistent: at least one check failed"
        return ("both placements of the pair (1, 4k+3) force e = g, repeating a value; "
                "no magic n-gon exists for odd n")

    def to_dict(self) -> dict:
        return {
            "cases": [c.to_dict() for c in self.cases],
            "sweep": self.sweep.to_dict(),
            "fatal": self.fatal,
            "conclusion": self.conclusion,
        }


E, G = VARIABLES.index("e"), VARIABLES.index("g")


def check_case(case: Case) -> CaseReport:
    spec = build_system(case)
    poles: list = []
    reduced, pivots = rref(spec.rows, poles)
    consistent = is_consistent(reduced, pivots)
    report = CaseReport(
        case=spec.case,
        system=[format_row(r) for r in spec.rows],
        reduced=[format_row(r) for r in reduced],
        pivots=[VARIABLES[c] if c < len(VARIABLES) else "constant" for c in pivots],
        consistent=consistent,
        e_equals_g=consistent and forces_equal(reduced, pivots, E, G),
        row_space_preserved=all(in_row_space(r, reduced) for r in spec.rows),
        poles=[str(p) for p in poles],
    )
    if spec.case is Case.X_EQUALS_ONE:
        report.matches_reference = reduced == [
            [RationalFunction.coerce(x) for x in row] for row in REFERENCE_CASE1_RREF
        ]
    return report


def sweep(k_max: int, symbolic: Optional[dict] = None, k_min: int = 1) -> SweepReport:
    """Reduce every system for k in [k_min, k_max] over Q.

    Each k must give a consistent system forcing e = g, and when symbolic
    reductions are supplied, their evaluation at k must equal the numeric one.
    """
    report = SweepReport(k_max=k_max)
    for k in range(k_min, k_max + 1):
        for case in Case:
            reduced, pivots = rref(numeric_system(case, k))
            report.checked += 1
            if not is_consistent(reduced, pivots) or not forces_equal(reduced, pivots, E, G):
                report.failures.append({"k": k, "case": case.value, "reason": "e = g not forced"})
                continue
            if symbolic is not None:
                sym_reduced, sym_pivots = symbolic[case]
                evaluated = [[x(k) for x in row] for row in sym_reduced]
                if sym_pivots != pivots or evaluated != reduced:
                    report.failures.append({"k": k, "case": case.value, "reason": "symbolic mismatch"})
    return report


def _sweep_chunk(args):
    k_min, k_max = args
    return sweep(k_max, _symbolic_reductions(), k_min)


def _symbolic_reductions():
    return {case: rref(build_system(case).rows) for case in Case}


def check_odd_contradiction(sweep_max: int = 10_000, workers: int = 1) -> ProofReport:
    """Run both symbolic cases and the numeric sweep over k = 1..sweep_max."""
    cases = [check_case(case) for case in Case]
    if sweep_max <= 0:
        return ProofReport(cases, SweepReport(k_max=0))
    if workers <= 1:
        sw = sweep(sweep_max, _symbolic_reductions())
    else:
        from concurrent.futures import ProcessPoolExecutor

        step = -(-sweep_max // workers)
        bounds = [(lo, min(lo + step - 1, sweep_max)) for lo in range(1, sweep_max + 1, step)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_sweep_chunk, bounds))
        sw = SweepReport(k_max=sweep_max)
        for part in parts:
            sw.checked += part.checked
            sw.failures += part.failures
    return ProofReport(cases, sw)
