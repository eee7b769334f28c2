"""Two-pentagon units and the four-octa 16-gon, with exact shape certification.

Units are placement sets, not fused polygons; the fused boundary is computed
on demand for certification.  An Octa-unit joins a tile with its reflection
across the long edge e (an equilateral concave octagon).  A Hexa-unit joins a
tile with its half-turn image about the midpoint of e (a centrally symmetric
convex hexagon).  Four Octa-units whose A corners share a point form the
concave 16-gon unit; it exists in two mirror chiralities whose outline is the
same D4-symmetric polygon.
"""

from __future__ import annotations

from .exact import CYC_ZERO, CycInt, ZETA, direction_index, orient
from .pentagon import corner_units
from .patch import Patch
from .placement import (
    PlacedPentagon,
    compose,
    point_reflection_about_edge_midpoint,
    reflection_across_line,
    translation,
)

OCTA = "octa"
HEXA = "hexa"
HEXADECA_L = "hexadeca-L"
HEXADECA_R = "hexadeca-R"


def e_edge_endpoints(tile: PlacedPentagon) -> tuple[CycInt, CycInt]:
    vs = tile.vertices()
    return vs[3], vs[4]  # D, E


def octa_partner(tile: PlacedPentagon) -> PlacedPentagon:
    """The reflection of a tile across the line of its own edge e."""
    d, e = e_edge_endpoints(tile)
    direction = direction_index(d - e)
    refl = reflection_across_line(e, direction)
    return compose(refl, tile)


def hexa_partner(tile: PlacedPentagon) -> PlacedPentagon:
    """The half-turn image of a tile about the midpoint of its edge e."""
    d, e = e_edge_endpoints(tile)
    rot = point_reflection_about_edge_midpoint(d, e)
    return compose(rot, tile)


def make_octa_unit(base: PlacedPentagon) -> tuple[PlacedPentagon, PlacedPentagon]:
    return (base, octa_partner(base))


def make_hexa_unit(base: PlacedPentagon) -> tuple[PlacedPentagon, PlacedPentagon]:
    return (base, hexa_partner(base))


# ---------------------------------------------------------------------------
# dented-square cells: an octa-unit in the frame where edge e is horizontal
# occupies an axis-aligned square of side 2*cos(pi/8), with a triangular bump
# on three sides and a matching dent on the fourth.

CELL_SIDE = ZETA[1] + ZETA[15]  # 2*cos(pi/8), a positive real lattice element

# base cell [0,S]x[0,S] with the dent on the west side: the lower pentagon is
# the canonical tile rotated by -22.5 degrees, the upper one its reflection
# across the horizontal midline
_CELL_LOW = PlacedPentagon(15, False, CYC_ZERO)
_CELL_UP = compose(
    reflection_across_line(ZETA[3], 0),  # the dent apex sits on the midline
    _CELL_LOW,
)

# dent directions: 0 = west (base), k rotates by k*90 degrees about the
# cell center, whose double is S*(1+i)
_CELL_CENTER2 = CELL_SIDE + CELL_SIDE.mul_zeta(4)

DENT_W, DENT_S, DENT_E, DENT_N = 0, 1, 2, 3


def octa_cell(
    corner: CycInt, dent: int, frame: int = 0
) -> tuple[PlacedPentagon, PlacedPentagon]:
    """Octa-unit on the square cell whose SW corner (in frame coordinates) is
    `corner`, with the dent on side `dent` (W,S,E,N = 0..3), the whole cell
    rotated by frame*22.5 degrees about the origin."""
    from .placement import rotation_about_double

    k = (4 * dent) % 16
    spin = rotation_about_double(k, _CELL_CENTER2)
    outer = compose(PlacedPentagon(frame % 16, False, corner), spin)
    return (compose(outer, _CELL_LOW), compose(outer, _CELL_UP))


def make_hexadeca_unit(kind: str, center: CycInt, frame: int = 0):
    """Four octa-units whose A corners meet at `center`, as 8 placements.

    The two kinds are mirror images; both fill the same D4-symmetric concave
    16-gon outline.
    """
    S = CELL_SIDE
    if kind == HEXADECA_L:
        cells = ((-1, -1, DENT_N), (-1, 0, DENT_E), (0, 0, DENT_S), (0, -1, DENT_W))
    elif kind == HEXADECA_R:
        cells = ((-1, -1, DENT_E), (0, -1, DENT_N), (0, 0, DENT_W), (-1, 0, DENT_S))
    else:
        raise ValueError(f"unknown hexadeca kind {kind!r}")
    shift = translation(center)
    out = []
    for (ix, iy, dent) in cells:
        corner = S * ix + S.mul_zeta(4) * iy
        corner = corner.mul_zeta(frame % 16)
        low, up = octa_cell(corner, dent, frame)
        out.append(compose(shift, low))
        out.append(compose(shift, up))
    return tuple(out)


# ---------------------------------------------------------------------------
# shape certification helpers


def fused_boundary(tiles) -> list[CycInt]:
    """Single outer boundary polygon of a unit, straight vertices merged."""
    p = Patch(tiles)
    loops = p.boundary_loops()
    if len(loops) != 1:
        raise ValueError(f"unit boundary is not a single loop ({len(loops)} loops)")
    loop = loops[0]
    n = len(loop)
    return [
        loop[i]
        for i in range(n)
        if orient(loop[i - 1], loop[i], loop[(i + 1) % n]) != 0
    ]


def polygon_angle_units(poly: list[CycInt]) -> list[int]:
    return [corner_units(tuple(poly), i) for i in range(len(poly))]


def polygon_side_len2(poly: list[CycInt]):
    n = len(poly)
    return [(poly[(i + 1) % n] - poly[i]).norm2() for i in range(n)]


def polygon_point_group(poly: list[CycInt]) -> tuple[int, int, CycInt]:
    """(rotation order, reflection count, 2*center) of a lattice polygon.

    Candidate isometries must fix the vertex centroid, which pins the
    translation part exactly.
    """
    pts = {v.c for v in poly}
    m = len(poly)
    total = CYC_ZERO
    for v in poly:
        total = total + v
    rot_ks = []
    for k in range(16):
        tv = total - total.mul_zeta(k)
        if any(x % m for x in tv.c):
            continue
        tau = CycInt(tuple(x // m for x in tv.c))
        if all((v.mul_zeta(k) + tau).c in pts for v in poly):
            rot_ks.append(k)
    refl = 0
    for k in range(16):
        tv = total - total.conj().mul_zeta(k)
        if any(x % m for x in tv.c):
            continue
        tau = CycInt(tuple(x // m for x in tv.c))
        if all((v.conj().mul_zeta(k) + tau).c in pts for v in poly):
            refl += 1
    order = len(rot_ks)
    # 2*center from the smallest nontrivial rotation, when present
    center2 = CYC_ZERO
    if order > 1:
        k0 = min(k for k in rot_ks if k)
        from .symmetry import solve_center2

        center2 = solve_center2(k0, _tau_for(total, m, k0))
    return order, refl, center2


def _tau_for(total: CycInt, m: int, k: int) -> CycInt:
    tv = total - total.mul_zeta(k)
    return CycInt(tuple(x // m for x in tv.c))


def certify_octa(tiles) -> dict:
    """Exact certificate for the octa-unit boundary."""
    poly = fused_boundary(tiles)
    sides = polygon_side_len2(poly)
    angles = polygon_angle_units(poly)
    return {
        "sides": len(poly),
        "equilateral": all(s == sides[0] for s in sides),
        "side_len2": sides[0],
        "angle_units": angles,
        "reflex_count": sum(1 for a in angles if a > 8),
        "angle_sum_units": sum(angles),
    }


def certify_hexa(tiles) -> dict:
    poly = fused_boundary(tiles)
    angles = polygon_angle_units(poly)
    order, refl, center2 = polygon_point_group(poly)
    return {
        "sides": len(poly),
        "angle_units": angles,
        "convex": all(a < 8 for a in angles),
        "side_len2": polygon_side_len2(poly),
        "rotation_order": order,
        "reflections": refl,
        "center2": center2,
    }


def certify_hexadeca(tiles) -> dict:
    poly = fused_boundary(tiles)
    angles = polygon_angle_units(poly)
    sides = polygon_side_len2(poly)
    order, refl, center2 = polygon_point_group(poly)
    return {
        "sides": len(poly),
        "equilateral": all(s == sides[0] for s in sides),
        "angle_units": angles,
        "rotation_order": order,
        "reflections": refl,
        "center2": center2,
    }


def unit_decomposition(patch: Patch):
    """Pair every tile with its e-edge neighbour and classify the pair.

    Returns (units, incomplete) where units is a list of
    (kind, (tile_i, tile_j)) and incomplete lists tiles whose partner is
    outside the patch.
    """
    em = patch.edge_map
    units = []
    incomplete = []
    seen = set()
    for i, tile in enumerate(patch.tiles):
        if i in seen:
            continue
        d, e = e_edge_endpoints(tile)
        kd, ke = d.c, e.c
        ek = (kd, ke) if kd < ke else (ke, kd)
        entries = em.get(ek, ())
        partner = None
        for (j, _, _) in entries:
            if j != i:
                partner = j
                break
        if partner is None:
            incomplete.append(i)
            continue
        seen.add(i)
        seen.add(partner)
        other = patch.tiles[partner]
        if octa_partner(tile).key() == other.key():
            units.append((OCTA, (i, partner)))
        elif hexa_partner(tile).key() == other.key():
            units.append((HEXA, (i, partner)))
        else:
            raise ValueError(f"tiles {i},{partner} share edge e but form no unit")
    return units, incomplete
