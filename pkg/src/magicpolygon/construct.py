"""Closed-form magic n-gons for even n.

For even n >= 6 the first half of the vertices is fixed by a simple rule
(:func:`f_initial`), the second half is the complement across the center
(:func:`extend_vertex`) and each midpoint closes its side to the magic sum
(:func:`extend_midpoint`).  n = 4 is special-cased: the formulas collide
there, so the classical 3x3 square is returned instead.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .core import DomainError, Labeling, NonexistenceError, _check_order

# 3x3 Lo Shu square read as a 4-gon, v_1 at the top-left corner, clockwise.
SQUARE_4 = Labeling(4, vertices=(2, 6, 8, 4), midpoints=(7, 1, 3, 9), center=5)


def _check_even(n, minimum: int) -> None:
    _check_order(n)
    if n % 2:
        raise DomainError(f"n must be even, got {n}")
    if n < minimum:
        raise DomainError(f"n must be >= {minimum}, got {n}")


def _check_half_index(i, n: int) -> None:
    if isinstance(i, bool) or not isinstance(i, int) or not 1 <= i <= n // 2:
        raise DomainError(f"vertex index must lie in [1, {n // 2}], got {i!r}")


def f_initial(i: int, n: int) -> int:
    """Value of v_i for 1 <= i <= n/2."""
    _check_even(n, 6)
    _check_half_index(i, n)
    if i == 1:
        return n - 1
    if i == 2:
        return 2 * n + 1
    return n + i if i % 2 == 0 else i - 1


def extend_vertex(i: int, n: int) -> int:
    """Value of v_{n/2+i}, the diagonal partner of v_i."""
    return 2 * n + 2 - f_initial(i, n)


def extend_midpoint(i: int, vertex_values: Sequence[Optional[int]]) -> int:
    """Value of m_i given all n vertex values (v_1 first)."""
    n = len(vertex_values)
    _check_order(n)
    if isinstance(i, bool) or not isinstance(i, int) or not 1 <= i <= n:
        raise DomainError(f"midpoint index must lie in [1, {n}], got {i!r}")
    left = vertex_values[i - 1]
    right = vertex_values[i % n]
    if left is None or right is None:
        which = i if left is None else i % n + 1
        raise DomainError(f"vertex v{which} is unassigned")
    return 3 * n + 3 - left - right


def half_assignment(n: int) -> list[int]:
    """v_1..v_{n/2} as a list."""
    _check_even(n, 6)
    half = n // 2
    values = [n - 1, 2 * n + 1]
    values += [n + i if i % 2 == 0 else i - 1 for i in range(3, half + 1)]
    return values[:half]


def construct(n: int) -> Labeling:
    """A magic n-gon for even n.

    Raises NonexistenceError for odd n: no magic n-gon exists then.
    """
    _check_order(n)
    if n % 2:
        raise NonexistenceError(f"no magic {n}-gon exists (odd n)")
    if n == 4:
        return SQUARE_4
    top = 2 * n + 2
    first = half_assignment(n)
    verts = first + [top - x for x in first]
    total = 3 * n + 3
    mids = [total - verts[i] - verts[i + 1] for i in range(n - 1)]
    mids.append(total - verts[-1] - verts[0])
    return Labeling(n, tuple(verts), tuple(mids), n + 1)


@dataclass
class RangePartitionReport:
    n: int
    checks: dict[str, bool]
    low_range: tuple[int, int]
    high_range: tuple[int, int]
    low_members: list[int]
    high_members: list[int]
    boundary: dict[str, int]
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "passed": self.passed,
            "checks": self.checks,
            "low_range": list(self.low_range),
            "high_range": list(self.high_range),
            "low_members": self.low_members,
            "high_members": self.high_members,
            "boundary": self.boundary,
            "notes": self.notes,
        }


def range_partition_check(n: int) -> RangePartitionReport:
    """Check where the non-initial values of construct(n) land.

    Apart from eleven fixed values, every node of construct(n) takes a value
    in the low range L = {4..n-2} or the high range U = {n+4..2n-2}.  The
    report confirms the memberships index family by index family, that the
    families do not collide, where m_{n/2} and m_n land, and that opposite
    midpoints sum to 2n+2.
    """
    _check_even(n, 8)
    lab = construct(n)
    half = n // 2

    def v(i):
        return lab.vertices[i - 1]

    def m(i):
        return lab.midpoints[i - 1]

    low = set(range(4, n - 1))
    high = set(range(n + 4, 2 * n - 1))
    evens = [x for x in range(4, half + 1) if x % 2 == 0]  # 2*l1
    odds = [x for x in range(4, half + 1) if x % 2 == 1]  # 2*l2 + 1
    js = list(range(3, half))

    low_families = {
        "v[n/2+2l1]": [v(half + x) for x in evens],
        "v[2l2+1]": [v(x) for x in odds],
        "m[n/2+j]": [m(half + j) for j in js],
    }
    high_families = {
        "v[2l1]": [v(x) for x in evens],
        "v[n/2+2l2+1]": [v(half + x) for x in odds],
        "m[j]": [m(j) for j in js],
    }
    checks: dict[str, bool] = {}
    for name, vals in low_families.items():
        checks[f"{name} in L"] = all(x in low for x in vals)
    for name, vals in high_families.items():
        checks[f"{name} in U"] = all(x in high for x in vals)

    p_low = [x for vals in low_families.values() for x in vals]
    p_high = [x for vals in high_families.values() for x in vals]
    checks["P_L distinct"] = len(set(p_low)) == len(p_low)
    checks["P_U distinct"] = len(set(p_high)) == len(p_high)
    checks["|P_L| = n-6"] = len(p_low) == n - 6
    checks["|P_U| = n-6"] = len(p_high) == n - 6

    mid_half, mid_last = m(half), m(n)
    if half % 2 == 0:
        checks["m[n/2] = n/2"] = mid_half == half
        checks["m[n] = 3n/2+2"] = mid_last == 3 * half + 2
        low_extra, high_extra = mid_half, mid_last
    else:
        checks["m[n/2] = 3n/2+1"] = mid_half == 3 * half + 1
        checks["m[n] = n/2+1"] = mid_last == half + 1
        low_extra, high_extra = mid_last, mid_half
    checks["boundary low value in L, outside P_L"] = low_extra in low and low_extra not in p_low
    checks["boundary high value in U, outside P_U"] = (
        high_extra in high and high_extra not in p_high
    )
    checks["P_L + boundary = L"] = set(p_low) | {low_extra} == low
    checks["P_U + boundary = U"] = set(p_high) | {high_extra} == high

    initial_nodes = [
        v(1), v(2), v(3), lab.center, v(half + 1), v(half + 2), v(half + 3),
        m(1), m(2), m(half + 1), m(half + 2),
    ]
    initial_values = [
        n - 1, 2 * n + 1, 2, n + 1, n + 3, 1, 2 * n, 3, n, 2 * n - 1, n + 2,
    ]
    checks["initial values at fixed nodes"] = initial_nodes == initial_values
    checks["m[j] + m[n/2+j] = 2n+2"] = all(
        m(j) + m(half + j) == 2 * n + 2 for j in range(1, half + 1)
    )

    notes = []
    inner = low_families["m[n/2+j]"]
    if inner and (min(inner) < 7 or max(inner) > half):
        # the tighter chain 7 <= m[n/2+j] <= n/2 does not hold; L membership does
        notes.append(
            f"m[n/2+j] for 3 <= j < n/2 spans [{min(inner)}, {max(inner)}], "
            f"outside the chain [7, {half}]; values equal 2j-1"
        )
    return RangePartitionReport(
        n=n,
        checks=checks,
        low_range=(4, n - 2),
        high_range=(n + 4, 2 * n - 2),
        low_members=sorted(p_low),
        high_members=sorted(p_high),
        boundary={"m[n/2]": mid_half, "m[n]": mid_last},
        notes=notes,
    )
