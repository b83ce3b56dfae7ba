"""Node layout, line geometry and verification for magic polygons.

A magic n-gon has 2n+1 nodes: vertices v_1..v_n (clockwise), midpoints
m_1..m_n (m_i sits between v_i and v_{i+1}, with v_{n+1} = v_1) and one
center node.  Every side triple and every diagonal triple must share one sum.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import lru_cache, total_ordering
from typing import Iterator, Mapping, Optional, Sequence


class DomainError(ValueError):
    """Raised when an argument lies outside an operation's domain."""


class NonexistenceError(DomainError):
    """Raised when asked to build an object that provably does not exist."""


class NodeKind(enum.Enum):
    VERTEX = "v"
    MIDPOINT = "m"
    CENTER = "c"


@total_ordering
@dataclass(frozen=True)
class NodeId:
    kind: NodeKind
    index: Optional[int] = None

    def __post_init__(self):
        if self.kind is NodeKind.CENTER:
            if self.index is not None:
                raise DomainError("center node carries no index")
        elif self.index is None or self.index < 1:
            raise DomainError(f"{self.kind.name.lower()} needs an index >= 1")

    def __str__(self):
        if self.kind is NodeKind.CENTER:
            return "c"
        return f"{self.kind.value}{self.index}"

    def __lt__(self, other):
        return _node_key(self) < _node_key(other)


def _node_key(node: NodeId):
    order = {NodeKind.CENTER: 0, NodeKind.VERTEX: 1, NodeKind.MIDPOINT: 2}
    return (order[node.kind], node.index or 0)


CENTER = NodeId(NodeKind.CENTER)


def vertex(i: int) -> NodeId:
    return NodeId(NodeKind.VERTEX, i)


def midpoint(i: int) -> NodeId:
    return NodeId(NodeKind.MIDPOINT, i)


def wrap(i: int, n: int) -> int:
    """Reduce an index to the 1-based range [1, n]."""
    return (i - 1) % n + 1


def nodes(n: int) -> list[NodeId]:
    """All 2n+1 nodes in serialization order: center, vertices, midpoints."""
    _check_order(n)
    return [CENTER] + [vertex(i) for i in range(1, n + 1)] + [midpoint(i) for i in range(1, n + 1)]


class LineKind(enum.Enum):
    SIDE = "side"
    DIAGONAL = "diagonal"


@dataclass(frozen=True)
class Line:
    nodes: tuple[NodeId, NodeId, NodeId]
    kind: LineKind

    def __str__(self):
        return "(" + ",".join(str(x) for x in self.nodes) + ")"


def _check_order(n) -> None:
    if isinstance(n, bool) or not isinstance(n, int):
        raise DomainError(f"polygon order must be an integer, got {n!r}")
    if n < 3:
        raise DomainError(f"polygon order must be >= 3, got {n}")


@lru_cache(maxsize=64)
def _lines(n: int) -> tuple[Line, ...]:
    sides = [
        Line((vertex(i), midpoint(i), vertex(wrap(i + 1, n))), LineKind.SIDE)
        for i in range(1, n + 1)
    ]
    diagonals = []
    if n % 2 == 0:
        half = n // 2
        for i in range(1, half + 1):
            diagonals.append(Line((vertex(i), CENTER, vertex(i + half)), LineKind.DIAGONAL))
        for i in range(1, half + 1):
            diagonals.append(Line((midpoint(i), CENTER, midpoint(i + half)), LineKind.DIAGONAL))
    else:
        # vertex i faces the midpoint of the opposite side
        half = (n - 1) // 2
        for i in range(1, n + 1):
            diagonals.append(
                Line((vertex(i), CENTER, midpoint(wrap(i + half, n))), LineKind.DIAGONAL)
            )
    return tuple(sides + diagonals)


def lines(n: int) -> list[Line]:
    """The 2n lines of an n-gon: n sides followed by n diagonals."""
    _check_order(n)
    return list(_lines(n))


def diagonal_partner(node: NodeId, n: int) -> NodeId:
    """The rim node sharing a diagonal with ``node``."""
    _check_order(n)
    if node.kind is NodeKind.CENTER:
        raise DomainError("the center lies on every diagonal")
    for line in _lines(n):
        if line.kind is LineKind.DIAGONAL and node in line.nodes:
            a, _, b = line.nodes
            return b if a == node else a
    raise DomainError(f"{node} is not a node of a {n}-gon")


def magic_sum(n: int) -> int:
    """The forced common line sum of a magic n-gon."""
    _check_order(n)
    return 3 * n + 3


def center_value(n: int) -> int:
    """The forced center value of a magic n-gon."""
    _check_order(n)
    return n + 1


@dataclass(frozen=True)
class Labeling:
    """Values on the nodes of an n-gon.

    ``vertices[i-1]`` holds v_i and ``midpoints[i-1]`` holds m_i.  Entries may
    be ``None`` for a partial labeling; most operations require completeness.
    """

    n: int
    vertices: tuple
    midpoints: tuple
    center: Optional[int]

    def __post_init__(self):
        _check_order(self.n)
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "midpoints", tuple(self.midpoints))
        if len(self.vertices) != self.n or len(self.midpoints) != self.n:
            raise DomainError(
                f"expected {self.n} vertices and {self.n} midpoints, "
                f"got {len(self.vertices)} and {len(self.midpoints)}"
            )

    @classmethod
    def from_mapping(cls, n: int, values: Mapping[NodeId, int]) -> "Labeling":
        return cls(
            n,
            tuple(values.get(vertex(i)) for i in range(1, n + 1)),
            tuple(values.get(midpoint(i)) for i in range(1, n + 1)),
            values.get(CENTER),
        )

    @classmethod
    def from_tuple(cls, n: int, flat: Sequence[int]) -> "Labeling":
        """Inverse of :meth:`as_tuple`."""
        if len(flat) != 2 * n + 1:
            raise DomainError(f"expected {2 * n + 1} values, got {len(flat)}")
        return cls(n, tuple(flat[1:n + 1]), tuple(flat[n + 1:]), flat[0])

    def __getitem__(self, node: NodeId):
        if node.kind is NodeKind.CENTER:
            return self.center
        if not 1 <= node.index <= self.n:
            raise KeyError(node)
        if node.kind is NodeKind.VERTEX:
            return self.vertices[node.index - 1]
        return self.midpoints[node.index - 1]

    def items(self) -> Iterator[tuple[NodeId, Optional[int]]]:
        for node in nodes(self.n):
            yield node, self[node]

    def as_tuple(self) -> tuple:
        """Serialization order (center, v_1..v_n, m_1..m_n)."""
        return (self.center,) + self.vertices + self.midpoints

    def missing(self) -> list[NodeId]:
        return [node for node, value in self.items() if value is None]

    @property
    def is_complete(self) -> bool:
        """True when the values are a permutation of 1..2n+1."""
        values = self.as_tuple()
        return None not in values and sorted(values) == list(range(1, 2 * self.n + 2))

    def complement(self) -> "Labeling":
        """Replace every value x by 2n+2-x."""
        self._require_populated()
        top = 2 * self.n + 2
        return Labeling.from_tuple(self.n, [top - x for x in self.as_tuple()])

    def _require_populated(self) -> None:
        if None in self.vertices or None in self.midpoints or self.center is None:
            gaps = self.missing()
            raise DomainError("labeling is missing nodes: " + ", ".join(map(str, gaps)))


def _line_totals(n: int, values: tuple) -> list[int]:
    """Line sums from the flat tuple, in the order of :func:`lines`."""
    c, v, m = values[0], values[1:n + 1], values[n + 1:]
    nxt = v[1:] + v[:1]
    totals = [a + b + d for a, b, d in zip(v, m, nxt)]
    if n % 2 == 0:
        half = n // 2
        totals += [a + c + b for a, b in zip(v[:half], v[half:])]
        totals += [a + c + b for a, b in zip(m[:half], m[half:])]
    else:
        half = (n - 1) // 2
        opposite = m[half:] + m[:half]
        totals += [a + c + b for a, b in zip(v, opposite)]
    return totals


@dataclass
class VerificationReport:
    n: int
    is_permutation: bool
    sums: tuple[int, ...]
    common_sum: Optional[int]
    is_magic: bool
    violations: list[dict] = field(default_factory=list)

    @property
    def line_sums(self) -> dict[Line, int]:
        """Sum of each line, keyed in the order of :func:`lines`."""
        return dict(zip(_lines(self.n), self.sums))

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "is_magic": self.is_magic,
            "is_permutation": self.is_permutation,
            "common_sum": self.common_sum,
            "line_sums": [
                {"line": str(line), "kind": line.kind.value, "sum": total}
                for line, total in self.line_sums.items()
            ],
            "violations": self.violations,
        }


def verify(labeling: Labeling) -> VerificationReport:
    """Check the magic property of a fully populated labeling."""
    labeling._require_populated()
    n = labeling.n
    values = labeling.as_tuple()
    violations: list[dict] = []

    is_permutation = sorted(values) == list(range(1, 2 * n + 2))
    if not is_permutation:
        seen: dict[int, list[str]] = {}
        for node, value in labeling.items():
            seen.setdefault(value, []).append(str(node))
        for value in sorted(seen):
            if len(seen[value]) > 1:
                violations.append({"type": "duplicate", "value": value, "nodes": seen[value]})
        for value in sorted(v for v in seen if not 1 <= v <= 2 * n + 1):
            violations.append({"type": "out_of_range", "value": value, "nodes": seen[value]})

    sums = tuple(_line_totals(n, values))
    first = sums[0]
    common_sum = first if all(t == first for t in sums) else None
    if common_sum is None:
        # the most frequent sum is taken as the target, ties broken low
        counts: dict[int, int] = {}
        for total in sums:
            counts[total] = counts.get(total, 0) + 1
        target = min(counts, key=lambda s: (-counts[s], s))
        for line, total in zip(_lines(n), sums):
            if total != target:
                violations.append(
                    {"type": "line_sum", "line": str(line), "sum": total, "expected": target}
                )
    return VerificationReport(
        n=n,
        is_permutation=is_permutation,
        sums=sums,
        common_sum=common_sum,
        is_magic=is_permutation and common_sum is not None,
        violations=violations,
    )
