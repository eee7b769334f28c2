"""Lattice isometries and placed copies of the prototile.

A placement (rot, mirror, t) realizes z -> zeta**rot * z + t, or
z -> zeta**rot * conj(z) + t when mirrored, applied to the canonical
prototile.  The same triple also serves as a general lattice isometry, so
placements compose: a placed tile is just an isometry applied to the
canonical tile.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exact import CYC_ZERO, CycInt
from .pentagon import ANGLE_UNITS, CANONICAL_VERTICES, EDGE_KINDS, LABELS

Key = tuple  # (rot, mirror, 8 coefficients)


@dataclass(frozen=True)
class PlacedPentagon:
    rot: int
    mirror: bool
    t: CycInt

    def __post_init__(self):
        if not 0 <= self.rot < 16:
            object.__setattr__(self, "rot", self.rot % 16)

    def key(self) -> Key:
        return (self.rot, self.mirror, self.t.c)

    def apply(self, z: CycInt) -> CycInt:
        w = z.conj() if self.mirror else z
        return w.mul_zeta(self.rot) + self.t

    def vertices(self) -> tuple[CycInt, ...]:
        cached = _VERTEX_CACHE.get(self.key())
        if cached is None:
            cached = tuple(self.apply(v) for v in CANONICAL_VERTICES)
            _VERTEX_CACHE[self.key()] = cached
        return cached

    def ccw_order(self) -> tuple[int, ...]:
        """Corner indices in counterclockwise geometric order."""
        return (0, 4, 3, 2, 1) if self.mirror else (0, 1, 2, 3, 4)

    def ccw_vertices(self) -> tuple[CycInt, ...]:
        vs = self.vertices()
        return tuple(vs[i] for i in self.ccw_order())

    def ccw_labels(self) -> tuple[str, ...]:
        return tuple(LABELS[i] for i in self.ccw_order())

    def ccw_angle_units(self) -> tuple[int, ...]:
        return tuple(ANGLE_UNITS[i] for i in self.ccw_order())

    def ccw_edge_kinds(self) -> tuple[str, ...]:
        # the CCW edge starting at position j joins corners order[j], order[j+1]
        if self.mirror:
            return ("d", "e", "c", "b", "a")
        return EDGE_KINDS


_VERTEX_CACHE: dict[Key, tuple[CycInt, ...]] = {}


IDENTITY = PlacedPentagon(0, False, CYC_ZERO)


def compose(g: PlacedPentagon, h: PlacedPentagon) -> PlacedPentagon:
    """Isometry composition g o h (apply h first)."""
    if not g.mirror:
        return PlacedPentagon((g.rot + h.rot) % 16, h.mirror, h.t.mul_zeta(g.rot) + g.t)
    return PlacedPentagon(
        (g.rot - h.rot) % 16, not h.mirror, h.t.conj().mul_zeta(g.rot) + g.t
    )


def inverse(g: PlacedPentagon) -> PlacedPentagon:
    if not g.mirror:
        return PlacedPentagon((-g.rot) % 16, False, -g.t.mul_zeta((-g.rot) % 16))
    return PlacedPentagon(g.rot, True, -g.t.conj().mul_zeta(g.rot))


def translation(t: CycInt) -> PlacedPentagon:
    return PlacedPentagon(0, False, t)


def rotation(k: int, center: CycInt = CYC_ZERO) -> PlacedPentagon:
    """Rotation by k*22.5 degrees about a lattice point."""
    return PlacedPentagon(k % 16, False, center - center.mul_zeta(k % 16))


def rotation_about_double(k: int, double_center: CycInt) -> PlacedPentagon:
    """Rotation about a half-lattice point given as 2*center.

    Only rotations whose translation part lands back on the lattice are
    representable; raises ValueError otherwise.
    """
    tc = double_center - double_center.mul_zeta(k % 16)
    if any(x % 2 for x in tc.c):
        raise ValueError("rotation center produces a non-lattice isometry")
    return PlacedPentagon(k % 16, False, CycInt(tuple(x // 2 for x in tc.c)))


def reflection(k: int, through: CycInt = CYC_ZERO) -> PlacedPentagon:
    """Reflection z -> zeta**k conj(z) + t across the axis of angle k*11.25
    degrees through a lattice point."""
    return PlacedPentagon(k % 16, True, through - through.conj().mul_zeta(k % 16))


def point_reflection_about_edge_midpoint(a: CycInt, b: CycInt) -> PlacedPentagon:
    """180-degree rotation about the midpoint of segment ab (a half-lattice point)."""
    return PlacedPentagon(8, False, a + b)


def reflection_across_line(p: CycInt, direction: int) -> PlacedPentagon:
    """Reflection across the line through p with direction index `direction`."""
    k = (2 * direction) % 16
    return PlacedPentagon(k, True, p - p.conj().mul_zeta(k))
