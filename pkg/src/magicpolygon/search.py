"""Exhaustive backtracking enumeration of magic n-gons.

Rim nodes are visited in cyclic order v_1, m_1, v_2, m_2, ...  Each rim node
shares a diagonal with exactly one partner, so choosing a value for a node
fixes its partner as soon as the line sum is known, and a side with two
assigned nodes forces the third.  Two modes:

* ``exhaustive`` tries every center value and lets the first diagonal fix the
  line sum; it assumes nothing about the center or the magic sum.
* ``pruned`` fixes the center to n+1 and the line sum to 3n+3.

With ``up_to_symmetry`` the search additionally requires v_1 to be the
smallest vertex value (every orbit has such a member), keeps only canonical
solutions and recovers the total from orbit sizes.

The top-level branches (the choices for v_1, plus the center and v_1's partner
in exhaustive mode) are split statically across worker processes.  Counts are
summed and canonical solution sets unioned, so results do not depend on the
number of workers.
"""

from __future__ import annotations

import enum
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

from .core import DomainError, Labeling, _check_order, diagonal_partner, midpoint, vertex
from .symmetry import canonical_tuple, images

log = logging.getLogger(__name__)

DEFAULT_EXHAUSTIVE_CAP = 6
DEFAULT_PRUNED_ODD_CAP = 7
DEFAULT_PRUNED_EVEN_CAP = 8


class Mode(str, enum.Enum):
    EXHAUSTIVE = "exhaustive"
    PRUNED = "pruned"


class CapExceeded(DomainError):
    """The requested n is above the configured search cap."""


@dataclass(frozen=True)
class SearchConfig:
    mode: Mode = Mode.PRUNED
    up_to_symmetry: bool = False
    solution_limit: Optional[int] = None
    emit_solutions: bool = False
    worker_count: int = 1
    # None means the default cap for the mode and parity
    max_n: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "mode", Mode(self.mode))
        if self.worker_count < 1:
            raise DomainError("worker_count must be positive")
        if self.solution_limit is not None and self.solution_limit < 0:
            raise DomainError("solution_limit must be non-negative")

    def cap(self, n: int) -> int:
        if self.max_n is not None:
            return self.max_n
        if self.mode is Mode.EXHAUSTIVE:
            return DEFAULT_EXHAUSTIVE_CAP
        return DEFAULT_PRUNED_ODD_CAP if n % 2 else DEFAULT_PRUNED_EVEN_CAP


@dataclass
class EnumerationResult:
    n: int
    mode: Mode
    up_to_symmetry: bool
    total_count: int
    class_count: int
    self_complementary_classes: int
    nodes_explored: int
    solutions: Optional[list[Labeling]] = None
    wall_time: float = field(default=0.0, compare=False)

    def to_dict(self, include_timing: bool = False) -> dict:
        from .document import labeling_to_dict

        out = {
            "n": self.n,
            "mode": self.mode.value,
            "up_to_symmetry": self.up_to_symmetry,
            "total_count": self.total_count,
            "class_count": self.class_count,
            "self_complementary_classes": self.self_complementary_classes,
            "nodes_explored": self.nodes_explored,
        }
        if self.solutions is not None:
            out["solutions"] = [labeling_to_dict(s) for s in self.solutions]
        if include_timing:
            out["wall_time"] = self.wall_time
        return out


class _Layout:
    """Flat-slot view of an n-gon: 0 = center, 1..n = vertices, n+1..2n = midpoints."""

    def __init__(self, n: int):
        self.n = n
        self.size = 2 * n + 1

        def slot(node):
            return node.index if node.kind.value == "v" else n + node.index

        self.rim = []
        for i in range(1, n + 1):
            self.rim += [i, n + i]
        self.partner = [0] * self.size
        for i in range(1, n + 1):
            for node in (vertex(i), midpoint(i)):
                self.partner[slot(node)] = slot(diagonal_partner(node, n))
        self.sides = [(i, n + i, i % n + 1) for i in range(1, n + 1)]
        self.sides_of: list[list[tuple[int, int, int]]] = [[] for _ in range(self.size)]
        self.others: list[list[tuple[int, int]]] = [[] for _ in range(self.size)]
        for a, b, c in self.sides:
            for x in (a, b, c):
                self.sides_of[x].append((a, b, c))
            self.others[a].append((b, c))
            self.others[b].append((a, c))
            self.others[c].append((a, b))

    def is_vertex(self, s: int) -> bool:
        return 1 <= s <= self.n


def _branches(n: int, mode: Mode) -> list[tuple[int, int, int]]:
    """Top-level (center, v_1, partner of v_1) choices in a fixed order."""
    size = 2 * n + 1
    if mode is Mode.PRUNED:
        c = n + 1
        return [(c, x, 2 * c - x) for x in range(1, size + 1) if x != c]
    out = []
    for c in range(1, size + 1):
        for x in range(1, size + 1):
            if x == c:
                continue
            for w in range(1, size + 1):
                if w not in (c, x):
                    out.append((c, x, w))
    return out


def _run_branches(n: int, branches: list, break_symmetry: bool):
    """Search every branch; return (total, nodes, canonical solution tuples)."""
    lay = _Layout(n)
    size = lay.size
    rim, partner, sides_of, others = lay.rim, lay.partner, lay.sides_of, lay.others
    is_vertex = [lay.is_vertex(s) for s in range(size)]
    values = [0] * size
    used = [False] * (size + 1)
    found: set[tuple] = set()
    total = 0
    nodes = 0
    line_sum = 0
    pair_sum = 0
    floor = 0  # smallest value a vertex may take when breaking symmetry

    def sides_ok(x):
        for a, b, c in sides_of[x]:
            va, vb, vc = values[a], values[b], values[c]
            if va and vb and vc and va + vb + vc != line_sum:
                return False
        return True

    def record():
        nonlocal total
        flat = tuple(values)
        if break_symmetry:
            imgs = images(n, flat)
            if min(imgs) != flat:
                return
            total += len(set(imgs))
            found.add(flat)
        else:
            total += 1
            found.add(canonical_tuple(n, flat))

    def dfs(pos):
        nonlocal nodes
        while pos < len(rim) and values[rim[pos]]:
            pos += 1
        if pos == len(rim):
            record()
            return
        x = rim[pos]
        y = partner[x]
        cands = None
        for a, b in others[x]:
            if values[a] and values[b]:
                cands = (line_sum - values[a] - values[b],)
                break
        if cands is None:
            cands = range(1, size + 1)
        for val in cands:
            if val < 1 or val > size or used[val]:
                continue
            p = pair_sum - val
            if p < 1 or p > size or p == val or used[p]:
                continue
            if break_symmetry and ((is_vertex[x] and val < floor) or (is_vertex[y] and p < floor)):
                continue
            nodes += 1
            values[x], values[y] = val, p
            used[val] = used[p] = True
            if sides_ok(x) and sides_ok(y):
                dfs(pos + 1)
            values[x] = values[y] = 0
            used[val] = used[p] = False

    v1, v1_partner = rim[0], partner[rim[0]]
    for c, x, w in branches:
        if break_symmetry and is_vertex[v1_partner] and w < x:
            continue
        nodes += 1
        line_sum = c + x + w
        pair_sum = x + w
        floor = x
        values[0], values[v1], values[v1_partner] = c, x, w
        used[c] = used[x] = used[w] = True
        if sides_ok(v1) and sides_ok(v1_partner):
            dfs(1)
        values[0] = values[v1] = values[v1_partner] = 0
        used[c] = used[x] = used[w] = False
    return total, nodes, found


def _worker(args):
    n, branches, break_symmetry = args
    return _run_branches(n, branches, break_symmetry)


def enumerate_magic(n: int, config: SearchConfig = SearchConfig()) -> EnumerationResult:
    """Count every magic labeling of the n-gon and its symmetry classes."""
    _check_order(n)
    cap = config.cap(n)
    if n > cap:
        hint = (
            "use --mode pruned, or raise the cap explicitly"
            if config.mode is Mode.EXHAUSTIVE
            else "raise the cap explicitly (runtime grows steeply)"
        )
        raise CapExceeded(f"n={n} exceeds the {config.mode.value} cap of {cap}; {hint}")

    start = time.perf_counter()
    branches = _branches(n, config.mode)
    workers = min(config.worker_count, max(1, len(branches)))
    chunks = [branches[k::workers] for k in range(workers)]
    jobs = [(n, chunk, config.up_to_symmetry) for chunk in chunks]
    log.info("n=%d mode=%s: %d branches over %d worker(s)", n, config.mode.value, len(branches), workers)
    if workers == 1:
        parts = [_worker(jobs[0])]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_worker, jobs))

    total = sum(p[0] for p in parts)
    nodes = sum(p[1] for p in parts)
    classes: set[tuple] = set()
    for p in parts:
        classes |= p[2]
    reps = sorted(classes)

    top = 2 * n + 2
    self_comp = sum(
        1 for rep in reps if canonical_tuple(n, tuple(top - x for x in rep)) == rep
    )
    solutions = None
    if config.emit_solutions:
        chosen = reps if config.solution_limit is None else reps[: config.solution_limit]
        solutions = [Labeling.from_tuple(n, rep) for rep in chosen]
    elapsed = time.perf_counter() - start
    log.info("n=%d: %d labelings in %d classes, %d nodes, %.2fs", n, total, len(reps), nodes, elapsed)
    return EnumerationResult(
        n=n,
        mode=config.mode,
        up_to_symmetry=config.up_to_symmetry,
        total_count=total,
        class_count=len(reps),
        self_complementary_classes=self_comp,
        nodes_explored=nodes,
        solutions=solutions,
        wall_time=elapsed,
    )


@dataclass
class NonexistenceReport:
    n: int
    total_count: int
    nodes_explored: int
    wall_time: float
    mode: Mode

    @property
    def consistent(self) -> bool:
        """False would mean a magic odd polygon was found: an implementation bug."""
        return self.total_count == 0

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "mode": self.mode.value,
            "total_count": self.total_count,
            "nodes_explored": self.nodes_explored,
            "consistent": self.consistent,
        }


def verify_nonexistence(n: int, mode: Mode = Mode.PRUNED, max_n: Optional[int] = None,
                        worker_count: int = 1) -> NonexistenceReport:
    """Search an odd n-gon completely and report the (expected zero) count."""
    _check_order(n)
    if n % 2 == 0:
        raise DomainError(f"nonexistence is only claimed for odd n, got {n}")
    config = SearchConfig(mode=mode, max_n=max_n, worker_count=worker_count)
    result = enumerate_magic(n, config)
    report = NonexistenceReport(n, result.total_count, result.nodes_explored, result.wall_time, config.mode)
    if not report.consistent:
        log.error("found %d magic labelings of an odd %d-gon", result.total_count, n)
    return report
