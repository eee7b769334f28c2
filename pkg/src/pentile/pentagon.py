"""The prototile and its vertex-concentration catalog.

The tile is the convex pentagon with interior angles 90, 135, 135, 67.5,
112.5 degrees at corners A..E, four unit edges a..d and one long edge e
between D and E.  Angles are held as integer multiples of 22.5 degrees so
the catalog enumeration is pure integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import CYC_ONE, CYC_ZERO, CycInt, RealQuad, ZETA, orient

LABELS = ("A", "B", "C", "D", "E")

# interior angles in 22.5-degree units; they sum to 24 (= 540 degrees)
ANGLE_UNITS = (4, 6, 6, 3, 5)

FULL_TURN_UNITS = 16  # 360 degrees
FLAT_UNITS = 8  # 180 degrees

# canonical placement: A at the origin, edge AB along direction 0
CANONICAL_VERTICES: tuple[CycInt, ...] = (
    CYC_ZERO,  # A
    ZETA[0],  # B
    ZETA[0] + ZETA[2],  # C
    ZETA[0] + ZETA[2] + ZETA[4],  # D
    ZETA[4],  # E
)

# edge kinds in counterclockwise vertex order (A,B),(B,C),(C,D),(D,E),(E,A)
EDGE_KINDS = ("a", "b", "c", "e", "d")

# squared edge lengths: the four unit edges and e**2 = 2 + sqrt2
UNIT_LEN2 = RealQuad(1)
LONG_LEN2 = RealQuad(2, 1)


@dataclass(frozen=True)
class Prototile:
    vertices: tuple[CycInt, ...]
    angle_units: tuple[int, ...] = ANGLE_UNITS
    labels: tuple[str, ...] = LABELS

    def edge_vector(self, i: int) -> CycInt:
        return self.vertices[(i + 1) % 5] - self.vertices[i]

    def edge_len2(self, i: int) -> RealQuad:
        return self.edge_vector(i).norm2()


def build_prototile() -> Prototile:
    """Construct the pentagon and certify closure, convexity, angles and edges."""
    tile = Prototile(CANONICAL_VERTICES)
    total = CYC_ZERO
    for i in range(5):
        total = total + tile.edge_vector(i)
    if not total.is_zero():
        raise AssertionError("prototile boundary does not close")
    for i in range(5):
        if orient(tile.vertices[i], tile.vertices[(i + 1) % 5], tile.vertices[(i + 2) % 5]) != 1:
            raise AssertionError("prototile is not convex counterclockwise")
    expected = [UNIT_LEN2, UNIT_LEN2, UNIT_LEN2, LONG_LEN2, UNIT_LEN2]
    for i in range(5):
        if tile.edge_len2(i) != expected[i]:
            raise AssertionError(f"edge {EDGE_KINDS[i]} has wrong length")
    for i in range(5):
        if corner_units(tile.vertices, i) != ANGLE_UNITS[i]:
            raise AssertionError(f"angle at {LABELS[i]} is wrong")
    return tile


def corner_units(vertices: tuple[CycInt, ...], i: int) -> int:
    """Interior angle at vertex i of a CCW polygon, in 22.5-degree units."""
    from .exact import direction_index

    n = len(vertices)
    din = direction_index(vertices[i] - vertices[i - 1])
    dout = direction_index(vertices[(i + 1) % n] - vertices[i])
    if din is None or dout is None:
        raise ValueError("edge direction is not a multiple of 22.5 degrees")
    turn = (dout - din + 8) % 16 - 8
    return 8 - turn


def pentagon_area() -> RealQuad:
    """Exact area by the shoelace formula: 1 + 3*sqrt2/4."""
    area2 = RealQuad(0)
    vs = CANONICAL_VERTICES
    for i in range(5):
        w = vs[i].conj() * vs[(i + 1) % 5]
        area2 = area2 + w.im_part()
    return area2 * Fraction(1, 2)


PENTAGON_AREA = RealQuad(1, Fraction(3, 4))


@dataclass(frozen=True, order=True)
class VertexRelation:
    """A multiset of corner labels whose angles sum to 360 (full) or 180 (flat)."""

    counts: tuple[int, int, int, int, int]
    target_units: int

    @property
    def units(self) -> int:
        return sum(c * u for c, u in zip(self.counts, ANGLE_UNITS))

    def name(self) -> str:
        parts = []
        for count, label in zip(self.counts, LABELS):
            if count == 1:
                parts.append(label)
            elif count > 1:
                parts.append(f"{count}{label}")
        return "+".join(parts)

    def __str__(self) -> str:
        return self.name()


def enumerate_relations(target_units: int) -> list[VertexRelation]:
    """All corner-label multisets with the given angle sum, by brute force."""
    out = []
    max_counts = [target_units // u for u in ANGLE_UNITS]
    for a in range(max_counts[0] + 1):
        for b in range(max_counts[1] + 1):
            for c in range(max_counts[2] + 1):
                for d in range(max_counts[3] + 1):
                    for e in range(max_counts[4] + 1):
                        units = 4 * a + 6 * b + 6 * c + 3 * d + 5 * e
                        if units == target_units and units > 0:
                            out.append(VertexRelation((a, b, c, d, e), target_units))
    out.sort()
    return out


FULL_RELATIONS: tuple[VertexRelation, ...] = tuple(enumerate_relations(FULL_TURN_UNITS))
FLAT_RELATIONS: tuple[VertexRelation, ...] = tuple(enumerate_relations(FLAT_UNITS))

# The published catalog lists the eleven full relations and the flat D+E.
# Enumeration also finds the flat 2A, which the published list omits; it is
# kept (and flagged) because non-edge-to-edge verification needs the complete
# flat-node list.
FLAT_D_PLUS_E = VertexRelation((0, 0, 0, 1, 1), FLAT_UNITS)
FLAT_2A = VertexRelation((2, 0, 0, 0, 0), FLAT_UNITS)
LISTED_FLAT_RELATIONS = (FLAT_D_PLUS_E,)
UNLISTED_FLAT_RELATIONS = (FLAT_2A,)

FULL_RELATION_SET = frozenset(r.counts for r in FULL_RELATIONS)
FLAT_RELATION_SET = frozenset(r.counts for r in FLAT_RELATIONS)

# prefix closure used by the search to prune partial vertex figures
_PREFIXES: set[tuple[int, ...]] = set()
for _r in FULL_RELATIONS:
    _a, _b, _c, _d, _e = _r.counts
    for _pa in range(_a + 1):
        for _pb in range(_b + 1):
            for _pc in range(_c + 1):
                for _pd in range(_d + 1):
                    for _pe in range(_e + 1):
                        _PREFIXES.add((_pa, _pb, _pc, _pd, _pe))
RELATION_PREFIXES = frozenset(_PREFIXES)
del _PREFIXES, _r, _a, _b, _c, _d, _e, _pa, _pb, _pc, _pd, _pe


def completable(counts: tuple[int, int, int, int, int]) -> bool:
    """True if the partial corner multiset extends to a full 360 relation."""
    return counts in RELATION_PREFIXES
