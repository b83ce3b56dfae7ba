"""Dihedral symmetries of the wheel layout, orbits and canonical forms."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .core import CENTER, DomainError, Labeling, NodeId, NodeKind, _check_order, midpoint, vertex, wrap


@dataclass(frozen=True)
class SymmetryElement:
    """Rotation by ``rotation`` steps, preceded by the base reflection if ``reflected``.

    The base reflection fixes v_1 and sends v_i to v_{2-i}, m_i to m_{1-i}.
    """

    n: int
    rotation: int = 0
    reflected: bool = False

    def __post_init__(self):
        _check_order(self.n)
        object.__setattr__(self, "rotation", self.rotation % self.n)

    def __call__(self, node: NodeId) -> NodeId:
        if node.kind is NodeKind.CENTER:
            return CENTER
        i = node.index
        if self.reflected:
            i = 2 - i if node.kind is NodeKind.VERTEX else 1 - i
        i = wrap(i + self.rotation, self.n)
        return vertex(i) if node.kind is NodeKind.VERTEX else midpoint(i)

    def __mul__(self, other: "SymmetryElement") -> "SymmetryElement":
        """Composition: ``(g * h)(x) == g(h(x))``."""
        if self.n != other.n:
            raise DomainError("cannot compose symmetries of different polygons")
        if self.reflected:
            return SymmetryElement(self.n, self.rotation - other.rotation, not other.reflected)
        return SymmetryElement(self.n, self.rotation + other.rotation, other.reflected)

    def inverse(self) -> "SymmetryElement":
        if self.reflected:
            return self
        return SymmetryElement(self.n, -self.rotation, False)


def identity(n: int) -> SymmetryElement:
    return SymmetryElement(n)


def group(n: int) -> list[SymmetryElement]:
    """All 2n elements, rotations first."""
    _check_order(n)
    return [SymmetryElement(n, t, r) for r in (False, True) for t in range(n)]


@lru_cache(maxsize=256)
def _flat_index_maps(n: int) -> tuple[tuple[int, ...], ...]:
    # flat layout: 0 = center, 1..n = v_1..v_n, n+1..2n = m_1..m_n
    def flat(node: NodeId) -> int:
        if node.kind is NodeKind.CENTER:
            return 0
        return node.index if node.kind is NodeKind.VERTEX else n + node.index

    order = [CENTER] + [vertex(i) for i in range(1, n + 1)] + [midpoint(i) for i in range(1, n + 1)]
    maps = []
    for g in group(n):
        # gather[k] = source slot whose value lands on slot k
        target = [flat(g(node)) for node in order]
        gather = [0] * (2 * n + 1)
        for src, dst in enumerate(target):
            gather[dst] = src
        maps.append(tuple(gather))
    return tuple(maps)


def images(n: int, flat: tuple) -> list[tuple]:
    """Images of a flat (center, v..., m...) tuple under every group element."""
    return [tuple(flat[k] for k in gather) for gather in _flat_index_maps(n)]


def canonical_tuple(n: int, flat: tuple) -> tuple:
    return min(images(n, flat))


def _require(labeling: Labeling) -> None:
    labeling._require_populated()


def apply(g: SymmetryElement, labeling: Labeling) -> Labeling:
    """Move every value from its node x to node g(x)."""
    _require(labeling)
    if g.n != labeling.n:
        raise DomainError(f"symmetry of a {g.n}-gon applied to a {labeling.n}-gon")
    index = g.rotation + (labeling.n if g.reflected else 0)
    gather = _flat_index_maps(labeling.n)[index]
    flat = labeling.as_tuple()
    return Labeling.from_tuple(labeling.n, [flat[k] for k in gather])


def orbit(labeling: Labeling) -> set[Labeling]:
    _require(labeling)
    n = labeling.n
    return {Labeling.from_tuple(n, t) for t in images(n, labeling.as_tuple())}


def stabilizer(labeling: Labeling) -> list[SymmetryElement]:
    _require(labeling)
    return [g for g in group(labeling.n) if apply(g, labeling) == labeling]


def canonical_form(labeling: Labeling) -> Labeling:
    """The orbit member with the smallest (center, v_1..v_n, m_1..m_n) tuple."""
    _require(labeling)
    n = labeling.n
    return Labeling.from_tuple(n, canonical_tuple(n, labeling.as_tuple()))


def is_canonical(labeling: Labeling) -> bool:
    return canonical_form(labeling) == labeling
