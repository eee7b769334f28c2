"""Deterministic generators for every tiling family in the catalog.

Each pattern is reconstructed from a fixed seed configuration and a
deterministic completion procedure, then certified against its contract
(verification mode, point group, unit composition, hole shape) before being
returned.  Rotationally symmetric patterns grow by staged exhaustive
completion: at every stage all completions of the current patch out to the
stage window are enumerated and the canonically smallest extendable one is
committed.  Stage enumeration is exhaustive and window predicates are exact,
so the procedure is a pure function of the spec and commutes with lattice
isometries; that is what makes the mirror-image relation between the two
four-fold spirals testable as exact placement-set equality.

Aperiodic-looking figure layouts were reconstructed by search against their
published invariants; the seed tables below pin those reconstructions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .exact import CYC_ZERO, CycInt, RealQuad, ZETA, orient
from .patch import Patch
from .placement import (
    IDENTITY,
    PlacedPentagon,
    compose,
    point_reflection_about_edge_midpoint,
    reflection,
    rotation,
    translation,
)
from .search import Occupancy, attachments_for_edge, canonical_form
from .units import (
    CELL_SIDE,
    DENT_E,
    DENT_N,
    DENT_S,
    DENT_W,
    HEXADECA_L,
    HEXADECA_R,
    make_hexa_unit,
    make_hexadeca_unit,
    hexa_partner,
    octa_cell,
    octa_partner,
    unit_decomposition,
)

PATTERN_IDS = (
    "type1-rows",
    "type7",
    "type7-alt",
    "c8-hole",
    "spiral-c2",
    "strip-c2",
    "spiral-c4-a",
    "spiral-c4-b",
    "c4-a",
    "c4-b",
    "c2-hexa",
    "c2-mixed",
    "fig15-a",
    "fig15-b",
    "dailey-a",
    "dailey-b",
    "dailey-c",
)


class GenerationError(Exception):
    """A generator failed its own construction or certification."""


@dataclass(frozen=True)
class GenSpec:
    pattern: str
    size: int
    options: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.pattern not in PATTERN_IDS:
            raise GenerationError(f"unknown pattern {self.pattern!r}")
        if self.size < 1:
            raise GenerationError("size must be >= 1")


# ---------------------------------------------------------------------------
# exact window predicates (doubled coordinates throughout so half-lattice
# window centers stay exact)


def _dot2(a: CycInt, b: CycInt):
    re2, _ = (a.conj() * b).double_re_im()
    return re2


def _cross_quad(a: CycInt, b: CycInt) -> RealQuad:
    _, im2 = (a.conj() * b).double_re_im()
    return RealQuad(Fraction(im2[0], 2), Fraction(im2[1], 2), Fraction(im2[2], 2), Fraction(im2[3], 2))


def _sign4(v) -> int:
    from .exact import sign_quad_int

    return sign_quad_int(*v)


def _point_seg_dist2_lt(U: CycInt, V: CycInt, four_r2: Fraction) -> bool:
    """dist(0, segment UV)**2 < four_r2/4, with U, V doubled coordinates."""
    W = V - U
    limit = RealQuad(four_r2)
    if _sign4(_dot2(W, -U)) <= 0:
        return U.norm2() < limit
    if _sign4(_dot2(W, -V)) >= 0:
        return V.norm2() < limit
    c = _cross_quad(U, V)
    return c * c < limit * W.norm2()


class DiskWindow:
    """Open disk of squared radius r2 about a (possibly half-lattice) center."""

    def __init__(self, r2: Fraction, center2: CycInt = CYC_ZERO):
        self.four_r2 = Fraction(4) * Fraction(r2)
        self.center2 = center2

    def edge_active(self, u: CycInt, v: CycInt) -> bool:
        U = u + u - self.center2
        V = v + v - self.center2
        return _point_seg_dist2_lt(U, V, self.four_r2)


class StadiumWindow:
    """Points within distance r of the segment [-a, a] * direction (doubled)."""

    def __init__(self, r2: Fraction, half_axis2: CycInt, center2: CycInt = CYC_ZERO):
        self.four_r2 = Fraction(4) * Fraction(r2)
        self.a2 = half_axis2
        self.center2 = center2

    def edge_active(self, u: CycInt, v: CycInt) -> bool:
        U = u + u - self.center2
        V = v + v - self.center2
        A, B = -self.a2, self.a2
        # strict crossing puts the edge inside the stadium outright
        if orient(A, B, U) * orient(A, B, V) < 0 and orient(U, V, A) * orient(U, V, B) < 0:
            return True
        for P in (U, V):
            if _point_seg_dist2_lt(A - P, B - P, self.four_r2):
                return True
        for P in (A, B):
            if _point_seg_dist2_lt(U - P, V - P, self.four_r2):
                return True
        return False


# ---------------------------------------------------------------------------
# deterministic completion machinery


def _forbidden_hit(tile: PlacedPentagon, polys) -> bool:
    if not polys:
        return False
    vs = tile.ccw_vertices()
    for poly in polys:
        n = len(poly)
        sep = False
        for k in range(n):
            if all(orient(poly[k], poly[(k + 1) % n], w) <= 0 for w in vs):
                sep = True
                break
        if not sep:
            for k in range(5):
                if all(orient(vs[k], vs[(k + 1) % 5], q) <= 0 for q in poly):
                    sep = True
                    break
        if not sep:
            return True
    return False


def _enumerate_completions(
    tiles,
    group,
    window,
    allow_hexa: bool,
    forbidden=None,
    frozen_points=frozenset(),
    cap: int = 768,
    max_nodes: int = 2_000_000,
):
    """All ways to close every active boundary edge, keyed by canonical form.

    Exhaustive by construction; raises GenerationError when the cap or node
    budget trips, so a truncated enumeration can never masquerade as a
    complete one.
    """
    occ = Occupancy()
    for t in tiles:
        if occ.try_add(t) is None:
            raise GenerationError("seed configuration is not legal")
    sols: dict = {}
    nodes = 0

    def open_edges():
        out = []
        for (u, v) in occ.boundary_edges():
            if u.c in frozen_points and v.c in frozen_points:
                continue
            if window.edge_active(u, v):
                out.append((abs(complex(u)) + abs(complex(v)), u.c, u, v))
        out.sort(key=lambda x: (round(x[0], 9), x[1]))
        return out

    def rec():
        nonlocal nodes
        nodes += 1
        if nodes > max_nodes:
            raise GenerationError("completion search exceeded its node budget")
        edges = open_edges()
        if not edges:
            key = canonical_form(list(occ.tiles))
            if key not in sols:
                if len(sols) >= cap:
                    raise GenerationError("completion enumeration exceeded its cap")
                sols[key] = [PlacedPentagon(t.rot, t.mirror, t.t) for t in occ.tiles]
            return
        _, _, u, v = edges[0]
        cands = []
        for tile in attachments_for_edge(u, v):
            cands.append((tile, octa_partner(tile)))
            if allow_hexa:
                cands.append((tile, hexa_partner(tile)))
        for unit in cands:
            placed = []
            ok = True
            for g in group:
                for t in unit:
                    gt = compose(g, t)
                    if gt.key() in occ.keys:
                        continue
                    if _forbidden_hit(gt, forbidden):
                        ok = False
                        break
                    token = occ.try_add(gt, require_completable=True)
                    if token is None:
                        ok = False
                        break
                    placed.append(token)
                if not ok:
                    break
            if ok and any((uu.c, vv.c) == (u.c, v.c) for uu, vv in occ.boundary_edges()):
                ok = False
            if ok:
                rec()
            for token in reversed(placed):
                occ.rollback(token)

    rec()
    return sols


def _grow_stages(seed, group, windows, allow_hexa, forbidden=None, frozen_points=frozenset()):
    """Stagewise canonical completion with backtracking across stages."""

    def rec(cur, i):
        if i == len(windows):
            return cur
        sols = _enumerate_completions(
            cur, group, windows[i], allow_hexa, forbidden, frozen_points
        )
        for key in sorted(sols):
            res = rec(sols[key], i + 1)
            if res is not None:
                return res
        return None

    out = rec(list(seed), 0)
    if out is None:
        raise GenerationError("no completion satisfies the staged windows")
    return out


def _grow_greedy(
    seed,
    group,
    window,
    allow_hexa,
    forbidden=None,
    frozen_points=frozenset(),
    max_nodes: int = 2_000_000,
):
    """First-solution backtracking completion (deterministic order)."""
    occ = Occupancy()
    for t in seed:
        if occ.try_add(t) is None:
            raise GenerationError("seed configuration is not legal")
    nodes = 0

    def open_edges():
        out = []
        for (u, v) in occ.boundary_edges():
            if u.c in frozen_points and v.c in frozen_points:
                continue
            if window.edge_active(u, v):
                out.append((abs(complex(u)) + abs(complex(v)), u.c, u, v))
        out.sort(key=lambda x: (round(x[0], 9), x[1]))
        return out

    def rec():
        nonlocal nodes
        nodes += 1
        if nodes > max_nodes:
            raise GenerationError("completion search exceeded its node budget")
        edges = open_edges()
        if not edges:
            return True
        _, _, u, v = edges[0]
        cands = []
        for tile in attachments_for_edge(u, v):
            cands.append((tile, octa_partner(tile)))
            if allow_hexa:
                cands.append((tile, hexa_partner(tile)))
        for unit in cands:
            placed = []
            ok = True
            for g in group:
                for t in unit:
                    gt = compose(g, t)
                    if gt.key() in occ.keys:
                        continue
                    if _forbidden_hit(gt, forbidden):
                        ok = False
                        break
                    token = occ.try_add(gt, require_completable=True)
                    if token is None:
                        ok = False
                        break
                    placed.append(token)
                if not ok:
                    break
            if ok and any((uu.c, vv.c) == (u.c, v.c) for uu, vv in occ.boundary_edges()):
                ok = False
            if ok and rec():
                return True
            for token in reversed(placed):
                occ.rollback(token)
        return False

    if not rec():
        raise GenerationError("no completion inside the window")
    return [PlacedPentagon(t.rot, t.mirror, t.t) for t in occ.tiles]


# ---------------------------------------------------------------------------
# building blocks shared by the direct constructions

_S = CELL_SIDE  # 2*cos(pi/8); also the octa-cell side
_IS = CELL_SIDE.mul_zeta(4)
# one row up with a half-cell shift right / left (both lattice vectors)
_UP_RIGHT = ZETA[1] + ZETA[3] + ZETA[5]  # +S/2 + i(S+h)
_UP_LEFT = ZETA[3] + ZETA[5] + ZETA[7]  # -S/2 + i(S+h)
_2H = ZETA[3] + ZETA[13]  # 2*sin(pi/8), a real lattice element

_CELL_LOW = PlacedPentagon(15, False, CYC_ZERO)
_CELL_UP_OCTA = octa_partner(_CELL_LOW)
_CELL_UP_HEXA = hexa_partner(_CELL_LOW)


def _type1_rows(n: int, unit_kinds: str, offsets) -> list[PlacedPentagon]:
    """Rows of unit pairs on horizontal long-edge lines.

    Lines are indexed -n..n; line j carries pentagons below it paired with
    pentagons above it, joined across the shared long-edge line by a
    reflection (octa rows) or a half turn (hexa rows).  The inter-line tooth
    mesh fixes every phase; the per-line slide offsets reproduce the
    non-edge-to-edge variations (flat 180-degree nodes on the line).
    """
    width = 2 * n + 2
    kinds = [unit_kinds[(j + n) % len(unit_kinds)] for j in range(-n, n + 1)]
    slides = list(offsets) if offsets else [0] * (2 * n + 1)
    if len(slides) != 2 * n + 1:
        raise GenerationError("offsets must give one lattice slide per line")
    phase = CYC_ZERO
    out = []
    for idx, j in enumerate(range(-n, n + 1)):
        kind = kinds[idx]
        slide = ZETA[0] * slides[idx]
        up_t = phase + slide
        up_part = _CELL_UP_OCTA if kind == "O" else _CELL_UP_HEXA
        for k in range(-width, width + 1):
            base = phase + _S * k
            out.append(compose(translation(base), _CELL_LOW))
            out.append(compose(translation(up_t + _S * k), up_part))
        # next line: tooth mesh on top of this line's upper row
        phase = up_t + _UP_RIGHT + (_2H if kind == "H" else CYC_ZERO)
    return out


def _brick_field(n: int, seam_shifts) -> list[PlacedPentagon]:
    """Rows of octa cells with half-cell brick shifts between rows."""
    width = 2 * n + 2
    out = []
    phase = CYC_ZERO
    rows = range(-n, n + 1)
    shifts = list(seam_shifts)
    for idx, j in enumerate(rows):
        for k in range(-width, width + 1):
            low, up = octa_cell(phase + _S * k, DENT_W, 0)
            out.append(low)
            out.append(up)
        phase = phase + (_UP_RIGHT if shifts[idx % len(shifts)] > 0 else _UP_LEFT)
    return out


# ---------------------------------------------------------------------------
# stored seeds for the reconstructed rotationally symmetric layouts

# first ring of the eight-fold pattern: one dented-square cell per 45-degree
# sector, dent apex biting a corner of the central regular octagonal hole
_C8_CORNER = CycInt((1, 0, 1, 0, 0, 0, -1, 0))  # (1+sqrt2, 0)
_C8_HOLE_VERTEX = CycInt((1, 0, 1, 0, 1, 0, -1, 0))  # (1+sqrt2, 1)

# brick-mated octa pair whose shared edge midpoint is the two-fold center of
# the spiral; the two cells are exchanged by the half turn
_SPIRAL_C2_APEX = ZETA[1] + ZETA[3] + ZETA[5]  # (S/2, S+h)
_SPIRAL_C2_CORNER = ZETA[1] + ZETA[3] + ZETA[5] - ZETA[7]  # (S, S)

SPIRAL_C4_A_BASE = (
    (11, False, (0, -1, 0, 0, 0, 0, 0, 1)),
    (13, True, (0, 0, 0, 0, 0, 0, 0, 0)),
    (7, False, (0, 0, 0, 1, 0, 1, 0, 0)),
    (9, True, (0, 0, 0, 0, 0, 0, 0, 0)),
    (3, False, (0, 1, 0, 0, 0, 0, 0, -1)),
    (5, True, (0, 0, 0, 0, 0, 0, 0, 0)),
    (15, False, (0, 0, 0, -1, 0, -1, 0, 0)),
    (1, True, (0, 0, 0, 0, 0, 0, 0, 0)),
    (5, False, (0, 0, 0, -1, 0, -2, 0, -1)),
    (7, True, (0, -1, 0, -2, 0, -2, 0, -1)),
    (9, False, (0, 2, 0, 1, 0, 0, 0, -1)),
    (11, True, (0, 2, 0, 1, 0, -1, 0, -2)),
    (13, False, (0, 0, 0, 1, 0, 2, 0, 1)),
    (15, True, (0, 1, 0, 2, 0, 2, 0, 1)),
    (1, False, (0, -2, 0, -1, 0, 0, 0, 1)),
    (3, True, (0, -2, 0, -1, 0, 1, 0, 2)),
    (9, False, (0, -1, 0, -1, 0, 0, 0, 1)),
    (11, True, (0, -1, 0, -1, 0, -1, 0, 0)),
    (13, False, (0, 0, 0, -1, 0, -1, 0, -1)),
    (15, True, (0, 1, 0, 0, 0, -1, 0, -1)),
    (1, False, (0, 1, 0, 1, 0, 0, 0, -1)),
    (3, True, (0, 1, 0, 1, 0, 1, 0, 0)),
    (5, False, (0, 0, 0, 1, 0, 1, 0, 1)),
    (7, True, (0, -1, 0, 0, 0, 1, 0, 1)),
    (13, True, (0, -1, 0, -2, 0, -1, 0, 0)),
    (11, False, (0, -2, 0, -2, 0, -1, 0, 1)),
    (1, True, (0, 1, 0, 0, 0, -1, 0, -2)),
    (15, False, (0, 1, 0, -1, 0, -2, 0, -2)),
    (5, True, (0, 1, 0, 2, 0, 1, 0, 0)),
    (3, False, (0, 2, 0, 2, 0, 1, 0, -1)),
    (9, True, (0, -1, 0, 0, 0, 1, 0, 2)),
    (7, False, (0, -1, 0, 1, 0, 2, 0, 2)),
    (3, False, (0, -2, 0, -2, 0, 0, 0, 1)),
    (5, True, (0, -3, 0, -2, 0, 0, 0, 2)),
    (7, False, (0, 0, 0, -1, 0, -2, 0, -2)),
    (9, True, (0, 0, 0, -2, 0, -3, 0, -2)),
    (11, False, (0, 2, 0, 2, 0, 0, 0, -1)),
    (13, True, (0, 3, 0, 2, 0, 0, 0, -2)),
    (15, False, (0, 0, 0, 1, 0, 2, 0, 2)),
    (1, True, (0, 0, 0, 2, 0, 3, 0, 2)),
    (3, False, (0, -2, 0, -3, 0, -1, 0, 1)),
    (5, True, (0, -3, 0, -3, 0, -1, 0, 2)),
    (7, False, (0, 1, 0, -1, 0, -2, 0, -3)),
    (9, True, (0, 1, 0, -2, 0, -3, 0, -3)),
    (11, False, (0, 2, 0, 3, 0, 1, 0, -1)),
    (13, True, (0, 3, 0, 3, 0, 1, 0, -2)),
    (15, False, (0, -1, 0, 1, 0, 2, 0, 3)),
    (1, True, (0, -1, 0, 2, 0, 3, 0, 3)),
    (11, True, (0, -2, 0, 0, 0, 1, 0, 2)),
    (9, False, (0, -2, 0, 0, 0, 2, 0, 3)),
    (15, True, (0, -1, 0, -2, 0, -2, 0, 0)),
    (13, False, (0, -2, 0, -3, 0, -2, 0, 0)),
    (3, True, (0, 2, 0, 0, 0, -1, 0, -2)),
    (1, False, (0, 2, 0, 0, 0, -2, 0, -3)),
    (7, True, (0, 1, 0, 2, 0, 2, 0, 0)),
    (5, False, (0, 2, 0, 3, 0, 2, 0, 0)),
    (11, True, (0, -3, 0, -1, 0, 1, 0, 2)),
    (9, False, (0, -3, 0, -1, 0, 2, 0, 3)),
    (15, True, (0, -1, 0, -2, 0, -3, 0, -1)),
    (13, False, (0, -2, 0, -3, 0, -3, 0, -1)),
    (3, True, (0, 3, 0, 1, 0, -1, 0, -2)),
    (1, False, (0, 3, 0, 1, 0, -2, 0, -3)),
    (7, True, (0, 1, 0, 2, 0, 3, 0, 1)),
    (5, False, (0, 2, 0, 3, 0, 3, 0, 1)),
    (5, False, (0, -2, 0, -3, 0, -2, 0, 1)),
    (7, True, (0, -3, 0, -4, 0, -2, 0, 1)),
    (9, False, (0, 2, 0, -1, 0, -2, 0, -3)),
    (11, True, (0, 2, 0, -1, 0, -3, 0, -4)),
    (13, False, (0, 2, 0, 3, 0, 2, 0, -1)),
    (15, True, (0, 3, 0, 4, 0, 2, 0, -1)),
    (1, False, (0, -2, 0, 1, 0, 2, 0, 3)),
    (3, True, (0, -2, 0, 1, 0, 3, 0, 4)),
)

SPIRAL_C4_B_BASE = (
    (11, False, (0, -1, 0, 0, 0, 0, 0, 1)),
    (13, True, (0, 0, 0, 0, 0, 0, 0, 0)),
    (7, False, (0, 0, 0, 1, 0, 1, 0, 0)),
    (9, True, (0, 0, 0, 0, 0, 0, 0, 0)),
    (3, False, (0, 1, 0, 0, 0, 0, 0, -1)),
    (5, True, (0, 0, 0, 0, 0, 0, 0, 0)),
    (15, False, (0, 0, 0, -1, 0, -1, 0, 0)),
    (1, True, (0, 0, 0, 0, 0, 0, 0, 0)),
    (3, True, (0, -1, 0, -2, 0, -1, 0, 0)),
    (1, False, (0, -1, 0, -2, 0, -2, 0, -1)),
    (7, True, (0, 1, 0, 0, 0, -1, 0, -2)),
    (5, False, (0, 2, 0, 1, 0, -1, 0, -2)),
    (11, True, (0, 1, 0, 2, 0, 1, 0, 0)),
    (9, False, (0, 1, 0, 2, 0, 2, 0, 1)),
    (15, True, (0, -1, 0, 0, 0, 1, 0, 2)),
    (13, False, (0, -2, 0, -1, 0, 1, 0, 2)),
    (9, False, (0, -1, 0, -1, 0, 0, 0, 1)),
    (11, True, (0, -1, 0, -1, 0, -1, 0, 0)),
    (13, False, (0, 0, 0, -1, 0, -1, 0, -1)),
    (15, True, (0, 1, 0, 0, 0, -1, 0, -1)),
    (1, False, (0, 1, 0, 1, 0, 0, 0, -1)),
    (3, True, (0, 1, 0, 1, 0, 1, 0, 0)),
    (5, False, (0, 0, 0, 1, 0, 1, 0, 1)),
    (7, True, (0, -1, 0, 0, 0, 1, 0, 1)),
    (1, True, (0, -2, 0, -2, 0, -1, 0, 0)),
    (15, False, (0, -2, 0, -3, 0, -2, 0, 0)),
    (5, True, (0, 1, 0, 0, 0, -2, 0, -2)),
    (3, False, (0, 2, 0, 0, 0, -2, 0, -3)),
    (9, True, (0, 2, 0, 2, 0, 1, 0, 0)),
    (7, False, (0, 2, 0, 3, 0, 2, 0, 0)),
    (13, True, (0, -1, 0, 0, 0, 2, 0, 2)),
    (11, False, (0, -2, 0, 0, 0, 2, 0, 3)),
    (7, False, (0, -2, 0, -1, 0, 0, 0, 1)),
    (9, True, (0, -2, 0, -2, 0, -1, 0, 1)),
    (11, False, (0, 0, 0, -1, 0, -2, 0, -1)),
    (13, True, (0, 1, 0, -1, 0, -2, 0, -2)),
    (15, False, (0, 2, 0, 1, 0, 0, 0, -1)),
    (1, True, (0, 2, 0, 2, 0, 1, 0, -1)),
    (3, False, (0, 0, 0, 1, 0, 2, 0, 1)),
    (5, True, (0, -1, 0, 1, 0, 2, 0, 2)),
    (1, True, (0, -3, 0, -2, 0, -1, 0, 1)),
    (15, False, (0, -3, 0, -3, 0, -2, 0, 1)),
    (5, True, (0, 1, 0, -1, 0, -3, 0, -2)),
    (3, False, (0, 2, 0, -1, 0, -3, 0, -3)),
    (9, True, (0, 3, 0, 2, 0, 1, 0, -1)),
    (7, False, (0, 3, 0, 3, 0, 2, 0, -1)),
    (13, True, (0, -1, 0, 1, 0, 3, 0, 2)),
    (11, False, (0, -2, 0, 1, 0, 3, 0, 3)),
    (5, False, (0, -2, 0, -1, 0, 0, 0, 2)),
    (7, True, (0, -3, 0, -2, 0, 0, 0, 2)),
    (9, False, (0, 0, 0, -2, 0, -2, 0, -1)),
    (11, True, (0, 0, 0, -2, 0, -3, 0, -2)),
    (13, False, (0, 2, 0, 1, 0, 0, 0, -2)),
    (15, True, (0, 3, 0, 2, 0, 0, 0, -2)),
    (1, False, (0, 0, 0, 2, 0, 2, 0, 1)),
    (3, True, (0, 0, 0, 2, 0, 3, 0, 2)),
    (15, True, (0, -3, 0, -2, 0, -1, 0, 2)),
    (13, False, (0, -4, 0, -3, 0, -1, 0, 2)),
    (3, True, (0, 1, 0, -2, 0, -3, 0, -2)),
    (1, False, (0, 1, 0, -2, 0, -4, 0, -3)),
    (7, True, (0, 3, 0, 2, 0, 1, 0, -2)),
    (5, False, (0, 4, 0, 3, 0, 1, 0, -2)),
    (11, True, (0, -1, 0, 2, 0, 3, 0, 2)),
    (9, False, (0, -1, 0, 2, 0, 4, 0, 3)),
    (9, False, (0, -1, 0, -3, 0, -2, 0, -1)),
    (11, True, (0, -1, 0, -3, 0, -3, 0, -2)),
    (13, False, (0, 2, 0, 1, 0, -1, 0, -3)),
    (15, True, (0, 3, 0, 2, 0, -1, 0, -3)),
    (1, False, (0, 1, 0, 3, 0, 2, 0, 1)),
    (3, True, (0, 1, 0, 3, 0, 3, 0, 2)),
    (5, False, (0, -2, 0, -1, 0, 1, 0, 3)),
    (7, True, (0, -3, 0, -2, 0, 1, 0, 3)),
)

C4_A_BASE = (
    (11, False, (0, -1, 0, 0, 0, 0, 0, 1)),
    (13, True, (0, 0, 0, 0, 0, 0, 0, 0)),
    (7, False, (0, 0, 0, 1, 0, 1, 0, 0)),
    (9, True, (0, 0, 0, 0, 0, 0, 0, 0)),
    (3, False, (0, 1, 0, 0, 0, 0, 0, -1)),
    (5, True, (0, 0, 0, 0, 0, 0, 0, 0)),
    (15, False, (0, 0, 0, -1, 0, -1, 0, 0)),
    (1, True, (0, 0, 0, 0, 0, 0, 0, 0)),
    (7, False, (0, 0, 0, -1, 0, -1, 0, -1)),
    (9, True, (0, 0, 0, -2, 0, -2, 0, -1)),
    (11, False, (0, 1, 0, 1, 0, 0, 0, -1)),
    (13, True, (0, 2, 0, 1, 0, 0, 0, -2)),
    (15, False, (0, 0, 0, 1, 0, 1, 0, 1)),
    (1, True, (0, 0, 0, 2, 0, 2, 0, 1)),
    (3, False, (0, -1, 0, -1, 0, 0, 0, 1)),
    (5, True, (0, -2, 0, -1, 0, 0, 0, 2)),
    (7, False, (0, -1, 0, -1, 0, -1, 0, 0)),
    (9, True, (0, -1, 0, -2, 0, -2, 0, 0)),
    (11, False, (0, 1, 0, 0, 0, -1, 0, -1)),
    (13, True, (0, 2, 0, 0, 0, -1, 0, -2)),
    (15, False, (0, 1, 0, 1, 0, 1, 0, 0)),
    (1, True, (0, 1, 0, 2, 0, 2, 0, 0)),
    (3, False, (0, -1, 0, 0, 0, 1, 0, 1)),
    (5, True, (0, -2, 0, 0, 0, 1, 0, 2)),
    (5, False, (0, -1, 0, -1, 0, -1, 0, 1)),
    (7, True, (0, -2, 0, -2, 0, -1, 0, 1)),
    (9, False, (0, 1, 0, -1, 0, -1, 0, -1)),
    (11, True, (0, 1, 0, -1, 0, -2, 0, -2)),
    (13, False, (0, 1, 0, 1, 0, 1, 0, -1)),
    (15, True, (0, 2, 0, 2, 0, 1, 0, -1)),
    (1, False, (0, -1, 0, 1, 0, 1, 0, 1)),
    (3, True, (0, -1, 0, 1, 0, 2, 0, 2)),
    (7, False, (0, -1, 0, -2, 0, -2, 0, -1)),
    (9, True, (0, -1, 0, -3, 0, -3, 0, -1)),
    (11, False, (0, 2, 0, 1, 0, -1, 0, -2)),
    (13, True, (0, 3, 0, 1, 0, -1, 0, -3)),
    (15, False, (0, 1, 0, 2, 0, 2, 0, 1)),
    (1, True, (0, 1, 0, 3, 0, 3, 0, 1)),
    (3, False, (0, -2, 0, -1, 0, 1, 0, 2)),
    (5, True, (0, -3, 0, -1, 0, 1, 0, 3)),
    (3, False, (0, -2, 0, -2, 0, 0, 0, 2)),
    (5, True, (0, -3, 0, -2, 0, 0, 0, 3)),
    (7, False, (0, 0, 0, -2, 0, -2, 0, -2)),
    (9, True, (0, 0, 0, -3, 0, -3, 0, -2)),
    (11, False, (0, 2, 0, 2, 0, 0, 0, -2)),
    (13, True, (0, 3, 0, 2, 0, 0, 0, -3)),
    (15, False, (0, 0, 0, 2, 0, 2, 0, 2)),
    (1, True, (0, 0, 0, 3, 0, 3, 0, 2)),
    (5, False, (0, -2, 0, -2, 0, -2, 0, 1)),
    (7, True, (0, -3, 0, -3, 0, -2, 0, 1)),
    (9, False, (0, 2, 0, -1, 0, -2, 0, -2)),
    (11, True, (0, 2, 0, -1, 0, -3, 0, -3)),
    (13, False, (0, 2, 0, 2, 0, 2, 0, -1)),
    (15, True, (0, 3, 0, 3, 0, 2, 0, -1)),
    (1, False, (0, -2, 0, 1, 0, 2, 0, 2)),
    (3, True, (0, -2, 0, 1, 0, 3, 0, 3)),
    (7, False, (0, -2, 0, -2, 0, -2, 0, 0)),
    (9, True, (0, -2, 0, -3, 0, -3, 0, 0)),
    (11, False, (0, 2, 0, 0, 0, -2, 0, -2)),
    (13, True, (0, 3, 0, 0, 0, -2, 0, -3)),
    (15, False, (0, 2, 0, 2, 0, 2, 0, 0)),
    (1, True, (0, 2, 0, 3, 0, 3, 0, 0)),
    (3, False, (0, -2, 0, 0, 0, 2, 0, 2)),
    (5, True, (0, -3, 0, 0, 0, 2, 0, 3)),
    (5, False, (0, -2, 0, -2, 0, -1, 0, 2)),
    (7, True, (0, -3, 0, -3, 0, -1, 0, 2)),
    (9, False, (0, 1, 0, -2, 0, -2, 0, -2)),
    (11, True, (0, 1, 0, -2, 0, -3, 0, -3)),
    (13, False, (0, 2, 0, 2, 0, 1, 0, -2)),
    (15, True, (0, 3, 0, 3, 0, 1, 0, -2)),
    (1, False, (0, -1, 0, 2, 0, 2, 0, 2)),
    (3, True, (0, -1, 0, 2, 0, 3, 0, 3)),
)


def _tiles_from_table(table) -> list[PlacedPentagon]:
    return [PlacedPentagon(r, m, CycInt(c)) for (r, m, c) in table]


_HEXADECA_KEYS_L = frozenset(t.key() for t in make_hexadeca_unit(HEXADECA_L, CYC_ZERO))


def _flip_center(tiles) -> list[PlacedPentagon]:
    """Swap the central 16-gon unit for its mirror chirality, keeping the rest."""
    rest = [t for t in tiles if t.key() not in _HEXADECA_KEYS_L]
    return list(make_hexadeca_unit(HEXADECA_R, CYC_ZERO)) + rest


def _c8_seed():
    tiles = []
    for k in range(8):
        corner = _C8_CORNER.mul_zeta(2 * k)
        low, up = octa_cell(corner, DENT_W, frame=(1 + 2 * k) % 16)
        tiles.append(low)
        tiles.append(up)
    return tiles


def c8_hole_polygon() -> list[CycInt]:
    return [_C8_HOLE_VERTEX.mul_zeta(2 * k) for k in range(8)]


def _c8_frozen_points() -> frozenset:
    pts = set()
    for k in range(8):
        pts.add(_C8_HOLE_VERTEX.mul_zeta(2 * k).c)
        pts.add(_C8_CORNER.mul_zeta(2 * k).c)
    return frozenset(pts)


def _spiral_c2_seed(dent: int):
    low, up = octa_cell(CYC_ZERO, dent, frame=0)
    c2 = point_reflection_about_edge_midpoint(_SPIRAL_C2_APEX, _SPIRAL_C2_CORNER)
    tiles = [low, up, compose(c2, low), compose(c2, up)]
    return tiles, c2


def _c2_hexa_seed():
    h = make_hexa_unit(IDENTITY)
    refl_y = reflection(8)
    half = rotation(8)
    tiles = list(h)
    tiles += [compose(refl_y, t) for t in h]
    tiles += [compose(half, t) for t in tiles[:4]]
    return tiles


_C2_MIXED_CENTER2 = CycInt((1, 0, 2, 0, 2, 0, 2, 0))


def _mixed_cluster():
    """One 4A vertex at the origin formed by two octa- and two hexa-units."""
    out = []
    for k, leaning in ((0, DENT_W), (1, DENT_W)):
        base = octa_cell(CYC_ZERO, leaning, frame=1)
        out += [compose(rotation(4 * k), t) for t in base]
    h = make_hexa_unit(IDENTITY)
    out += [compose(rotation(8), t) for t in h]
    mirrored = [compose(PlacedPentagon(4, True, CYC_ZERO), t) for t in h]
    out += [compose(rotation(12), t) for t in mirrored]
    return out


def _c2_mixed_seed():
    cluster = _mixed_cluster()
    c2 = PlacedPentagon(8, False, _C2_MIXED_CENTER2)
    tiles = list(cluster)
    for t in cluster:
        g = compose(c2, t)
        if g.key() not in {x.key() for x in tiles}:
            tiles.append(g)
    return tiles, c2


def _type7_seed(alt: bool):
    X = octa_cell(CYC_ZERO, DENT_W, frame=0)
    Y = octa_cell(-ZETA[1], DENT_N if alt else DENT_W, frame=2)
    return list(X) + list(Y)


def _fig15b_seed(n: int):
    tiles = []
    for k in range(-n, n + 1):
        tiles += make_hexadeca_unit(HEXADECA_L, _S * (5 * k))
    return tiles


# ---------------------------------------------------------------------------


def _disk_windows(base: Fraction, step: Fraction, n: int, center2=CYC_ZERO):
    return [DiskWindow((base + step * k) ** 2, center2) for k in range(1, n + 1)]


def generate(spec: GenSpec) -> Patch:
    """Build and certify the requested pattern at the requested size."""
    n = spec.size
    pattern = spec.pattern
    opts = dict(spec.options)

    if pattern == "type1-rows":
        kinds = opts.pop("units", "H")
        offsets = opts.pop("offsets", None)
        _reject_unknown(pattern, opts)
        if any(k not in "OH" for k in kinds) or not kinds:
            raise GenerationError("units must be a nonempty string over O and H")
        tiles = _type1_rows(n, kinds, offsets)
        mode = "general" if offsets and any(offsets) else "edge-to-edge"
        return _certify(tiles, spec, mode=mode)

    if pattern in ("dailey-a", "dailey-b", "dailey-c"):
        _reject_unknown(pattern, opts)
        shifts = {"dailey-a": (1,), "dailey-b": (1, -1), "dailey-c": (1, 1, -1, -1)}[pattern]
        tiles = _brick_field(n, shifts)
        return _certify(tiles, spec, octa_only=True)

    if pattern in ("type7", "type7-alt"):
        _reject_unknown(pattern, opts)
        seed = _type7_seed(alt=(pattern == "type7-alt"))
        window = DiskWindow((Fraction(16, 5) + Fraction(13, 10) * n) ** 2)
        tiles = _grow_greedy(seed, [IDENTITY], window, allow_hexa=False)
        return _certify(tiles, spec, octa_only=True)

    if pattern == "c8-hole":
        _reject_unknown(pattern, opts)
        seed = _c8_seed()
        group = [rotation(2 * k) for k in range(8)]
        window = DiskWindow((Fraction(21, 5) + Fraction(8, 5) * n) ** 2)
        tiles = _grow_greedy(
            seed,
            group,
            window,
            allow_hexa=False,
            forbidden=[c8_hole_polygon()],
            frozen_points=_c8_frozen_points(),
        )
        return _certify(
            tiles, spec, octa_only=True, rotation_order=8, hole_sides=8
        )

    if pattern == "spiral-c2":
        _reject_unknown(pattern, opts)
        seed, c2 = _spiral_c2_seed(DENT_S)
        center2 = _SPIRAL_C2_APEX + _SPIRAL_C2_CORNER
        window = DiskWindow((Fraction(17, 5) + Fraction(8, 5) * n) ** 2, center2)
        tiles = _grow_greedy(seed, [IDENTITY, c2], window, allow_hexa=False)
        return _certify(tiles, spec, octa_only=True, rotation_order=2)

    if pattern == "strip-c2":
        variant = opts.pop("variant", "a")
        _reject_unknown(pattern, opts)
        dent = {"a": DENT_S, "b": DENT_W}.get(variant)
        if dent is None:
            raise GenerationError("strip-c2 variant must be 'a' or 'b'")
        seed, c2 = _spiral_c2_seed(dent)
        center2 = _SPIRAL_C2_APEX + _SPIRAL_C2_CORNER
        length2 = _S * (2 * n) + _S * 2
        windows = [
            StadiumWindow(Fraction(21, 5) ** 2, length2, center2)
        ]
        tiles = _grow_greedy(seed, [IDENTITY, c2], windows[0], allow_hexa=False)
        return _certify(tiles, spec, octa_only=True)

    if pattern in ("spiral-c4-a", "spiral-c4-b"):
        # staged exhaustive completion keeps these two constructions
        # isometry-covariant, which the mirror-image relation test relies on
        _reject_unknown(pattern, opts)
        table = SPIRAL_C4_A_BASE if pattern == "spiral-c4-a" else SPIRAL_C4_B_BASE
        seed = _tiles_from_table(table)
        group = [rotation(4 * k) for k in range(4)]
        windows = _disk_windows(Fraction(28, 5), Fraction(8, 5), n)
        tiles = _grow_stages(seed, group, windows, allow_hexa=False)
        return _certify(tiles, spec, octa_only=True, rotation_order=4)

    if pattern in ("c4-a", "c4-b"):
        # the second non-spiral four-fold tiling is, by construction, the
        # first one with the central 16-gon unit turned over
        _reject_unknown(pattern, opts)
        seed = _tiles_from_table(C4_A_BASE)
        group = [rotation(4 * k) for k in range(4)]
        window = DiskWindow((Fraction(28, 5) + Fraction(8, 5) * n) ** 2)
        tiles = _grow_greedy(seed, group, window, allow_hexa=False)
        if pattern == "c4-b":
            tiles = _flip_center(tiles)
        return _certify(tiles, spec, octa_only=True, rotation_order=4)

    if pattern == "c2-hexa":
        _reject_unknown(pattern, opts)
        seed = _c2_hexa_seed()
        window = DiskWindow((Fraction(18, 5) + Fraction(8, 5) * n) ** 2)
        tiles = _grow_greedy(seed, [IDENTITY, rotation(8)], window, allow_hexa=True)
        return _certify(tiles, spec, rotation_order=2, hexa_center=True)

    if pattern == "c2-mixed":
        _reject_unknown(pattern, opts)
        seed, c2 = _c2_mixed_seed()
        window = DiskWindow(
            (Fraction(21, 5) + Fraction(8, 5) * n) ** 2, _C2_MIXED_CENTER2
        )
        tiles = _grow_greedy(seed, [IDENTITY, c2], window, allow_hexa=True)
        return _certify(tiles, spec, rotation_order=2, mixed_4a=2)

    if pattern == "fig15-a":
        _reject_unknown(pattern, opts)
        seed = _mixed_cluster()
        window = DiskWindow((Fraction(14, 5) + Fraction(13, 10) * n) ** 2)
        tiles = _grow_greedy(seed, [IDENTITY], window, allow_hexa=True)
        return _certify(tiles, spec, mixed_4a_min=1)

    if pattern == "fig15-b":
        _reject_unknown(pattern, opts)
        seed = _fig15b_seed(n)
        length2 = _S * (10 * n + 4)  # doubled half-axis: covers the block row
        window = StadiumWindow(Fraction(21, 5) ** 2, length2)
        tiles = _grow_greedy(seed, [IDENTITY], window, allow_hexa=False)
        return _certify(tiles, spec, octa_only=True)

    raise GenerationError(f"unhandled pattern {pattern!r}")


def _reject_unknown(pattern: str, opts: dict) -> None:
    if opts:
        raise GenerationError(f"invalid options for {pattern}: {sorted(opts)}")


def _certify(
    tiles,
    spec: GenSpec,
    mode: str = "edge-to-edge",
    octa_only: bool = False,
    rotation_order: int | None = None,
    hole_sides: int | None = None,
    hexa_center: bool = False,
    mixed_4a: int | None = None,
    mixed_4a_min: int | None = None,
) -> Patch:
    patch = Patch(tiles)
    patch.meta = {"pattern": spec.pattern, "size": spec.size, "mode": mode}
    report = patch.verify(mode)
    if not report.ok:
        raise GenerationError(
            f"{spec.pattern} size {spec.size} failed verification: {report.problems}"
        )
    units, incomplete = unit_decomposition(patch)
    if incomplete and mode == "edge-to-edge":
        raise GenerationError(f"{spec.pattern} left {len(incomplete)} half units")
    if octa_only and any(kind != "octa" for kind, _ in units):
        raise GenerationError(f"{spec.pattern} must consist of octa units only")
    if rotation_order is not None:
        from .symmetry import symmetry

        sym = symmetry(patch)
        if sym.rotation_order != rotation_order or sym.reflection_axes != 0:
            raise GenerationError(
                f"{spec.pattern} symmetry {sym.classification}, expected C{rotation_order}"
            )
    if hole_sides is not None:
        if len(report.holes) != 1:
            raise GenerationError(
                f"{spec.pattern} has {len(report.holes)} holes, expected exactly one"
            )
        poly = report.holes[0]
        sides = [(poly[(i + 1) % len(poly)] - poly[i]).norm2() for i in range(len(poly))]
        from .pentagon import corner_units

        angles = [corner_units(tuple(poly), i) for i in range(len(poly))]
        if len(poly) != hole_sides or len(set(sides)) != 1 or set(angles) != {6}:
            raise GenerationError(f"{spec.pattern} hole is not a regular {hole_sides}-gon")
    elif report.holes:
        raise GenerationError(f"{spec.pattern} has unexpected holes")
    if hexa_center:
        kinds = _units_at_vertex(patch, units, CYC_ZERO)
        if sorted(k for k, _ in kinds) != ["hexa"] * 4 or len({u for _, u in kinds}) != 4:
            raise GenerationError("central 4A vertex is not four distinct hexa units")
    if mixed_4a is not None and _count_mixed_4a(patch, units) != mixed_4a:
        raise GenerationError(f"expected exactly {mixed_4a} mixed 4A vertices")
    if mixed_4a_min is not None and _count_mixed_4a(patch, units) < mixed_4a_min:
        raise GenerationError("expected at least one mixed 4A vertex")
    return patch


def _tile_to_unit(units):
    t2u = {}
    for ui, (kind, (i, j)) in enumerate(units):
        t2u[i] = ui
        t2u[j] = ui
    return t2u


def _units_at_vertex(patch: Patch, units, point: CycInt):
    t2u = _tile_to_unit(units)
    out = []
    for (ti, pos) in patch.vertex_map.get(point.c, ()):
        ui = t2u[ti]
        out.append((units[ui][0], ui))
    return out


def _count_mixed_4a(patch: Patch, units) -> int:
    t2u = _tile_to_unit(units)
    count = 0
    for pk, incident in patch.vertex_map.items():
        labels = [0, 0, 0, 0, 0]
        for ti, pos in incident:
            labels[patch.corner_label_index(ti, pos)] += 1
        if tuple(labels) != (4, 0, 0, 0, 0):
            continue
        kinds = sorted(units[t2u[ti]][0] for ti, _ in incident)
        if kinds == ["hexa", "hexa", "octa", "octa"]:
            count += 1
    return count


def mirror_relation_check(n: int) -> bool:
    """The published relation between the two four-fold spirals.

    Replace the central 16-gon unit of the second spiral with its mirror
    chirality, reflect the whole patch, and compare with the first spiral as
    a placement set up to a lattice isometry.
    """
    from .search import congruent

    b = generate(GenSpec("spiral-c4-b", n))
    a = generate(GenSpec("spiral-c4-a", n))
    flipped = _flip_center(list(b.tiles))
    mirror = PlacedPentagon(0, True, CYC_ZERO)
    mirrored = [compose(mirror, t) for t in flipped]
    return congruent(mirrored, a.tiles)


def coverage_radius2(patch: Patch, center2: CycInt = CYC_ZERO) -> RealQuad:
    """Squared radius of the largest center-disk avoiding the outer boundary.

    Hole loops are ignored: the measure certifies how far the covered annulus
    extends, which is what grows monotonically with pattern size.
    """
    best: RealQuad | None = None
    for loop in patch.boundary_loops():
        if patch._loop_signed_area2_sign(loop) < 0:
            continue  # hole loop
        m = len(loop)
        for i in range(m):
            u, v = loop[i], loop[(i + 1) % m]
            d2 = _seg_dist2(u + u - center2, v + v - center2)
            if best is None or d2 < best:
                best = d2
    if best is None:
        raise GenerationError("patch has no outer boundary")
    return best * Fraction(1, 4)


def _seg_dist2(U: CycInt, V: CycInt) -> RealQuad:
    W = V - U
    if _sign4(_dot2(W, -U)) <= 0:
        return U.norm2()
    if _sign4(_dot2(W, -V)) >= 0:
        return V.norm2()
    c = _cross_quad(U, V)
    num = c * c
    den = W.norm2()
    # exact division by a rational is enough: den is |W|^2, a RealQuad, so
    # return the comparison-friendly量 num/den via cross-multiplied compare is
    # preferred; here we return num * (1/den) computed in the field.
    return num * _rq_inverse(den)


def _rq_inverse(v: RealQuad) -> RealQuad:
    """Field inverse in Q(sqrt(2+sqrt2)) via the tower Q < Q(sqrt2) < field.

    Writes v = P + Q*s with s = sqrt(2+sqrt2) and P, Q in Q(sqrt2), using
    sqrt(2-sqrt2) = (sqrt2 - 1)*s; then 1/v = (P - Q*s)/(P**2 - Q**2*s**2).
    """
    q = v.q
    P = (q[0], q[1])
    Q = (q[2] - q[3], q[3])

    def q2_mul(x, y):
        return (x[0] * y[0] + 2 * x[1] * y[1], x[0] * y[1] + x[1] * y[0])

    def q2_sub(x, y):
        return (x[0] - y[0], x[1] - y[1])

    def q2_inv(x):
        n = x[0] * x[0] - 2 * x[1] * x[1]
        if n == 0:
            raise ZeroDivisionError("not invertible")
        return (x[0] / n, -x[1] / n)

    denom = q2_sub(q2_mul(P, P), q2_mul(q2_mul(Q, Q), (Fraction(2), Fraction(1))))
    inv_denom = q2_inv(denom)
    num_P = q2_mul(P, inv_denom)
    num_Q = q2_mul((-Q[0], -Q[1]), inv_denom)
    # back to the 4-basis: (x + y*sqrt2)*s = x*s + y*(s + t) with t = sqrt(2-sqrt2)
    # because sqrt2*s = s + t
    x, y = num_Q
    return RealQuad(num_P[0], num_P[1], x + y, y)
