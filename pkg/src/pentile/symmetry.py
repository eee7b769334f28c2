"""Point-group detection for placement sets.

A symmetry of a patch is a lattice isometry mapping the placement set onto
itself.  Any such isometry fixes the centroid of the tiles' anchor points,
which determines its translation part exactly, so detection is linear in the
patch size.  Rotation centers can sit on the half lattice (edge midpoints),
reported as doubled lattice points.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import CYC_ZERO, CycInt
from .placement import PlacedPentagon, compose


@dataclass(frozen=True)
class SymmetryReport:
    rotation_order: int
    center2: CycInt  # doubled coordinates; the center itself may be half-lattice
    reflection_axes: int
    classification: str

    @property
    def center_float(self) -> complex:
        return complex(self.center2) / 2.0


def _anchor_sum(tiles) -> CycInt:
    total = CYC_ZERO
    for t in tiles:
        total = total + t.t
    return total


def _div_exact(v: CycInt, m: int) -> CycInt | None:
    if any(x % m for x in v.c):
        return None
    return CycInt(tuple(x // m for x in v.c))


def solve_center2(k: int, tau: CycInt) -> CycInt:
    """Solve (1 - zeta**k) * c = tau for c, returned as 2c (exact).

    Multiplication by a fixed ring element is linear over the rational
    coefficient space; an 8x8 elimination recovers c.  Raises if 2c is not a
    lattice point.
    """
    w = CycInt((1, 0, 0, 0, 0, 0, 0, 0)) - CycInt((1, 0, 0, 0, 0, 0, 0, 0)).mul_zeta(k)
    cols = []
    for i in range(8):
        basis = CycInt(tuple(1 if j == i else 0 for j in range(8)))
        cols.append((basis * w).c)
    # solve M x = tau where M[r][i] = cols[i][r]
    m = [[Fraction(cols[i][r]) for i in range(8)] + [Fraction(2 * tau.c[r])] for r in range(8)]
    for col in range(8):
        piv = next(r for r in range(col, 8) if m[r][col] != 0)
        m[col], m[piv] = m[piv], m[col]
        pv = m[col][col]
        m[col] = [x / pv for x in m[col]]
        for r in range(8):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[col])]
    x = [m[r][8] for r in range(8)]
    if any(f.denominator != 1 for f in x):
        raise ValueError("rotation center is not on the half lattice")
    return CycInt(tuple(int(f) for f in x))


def symmetry(patch) -> SymmetryReport:
    """Largest rotation order of the placement set, plus reflection count."""
    tiles = patch.tiles
    n = len(tiles)
    if n == 0:
        raise ValueError("symmetry of an empty patch is undefined")
    keys = patch.keyset
    total = _anchor_sum(tiles)

    valid_rot = []
    for k in range(16):
        tau = _div_exact(total - total.mul_zeta(k), n)
        if tau is None:
            continue
        g = PlacedPentagon(k, False, tau)
        if all(compose(g, t).key() in keys for t in tiles):
            valid_rot.append((k, tau))

    refl = 0
    for k in range(16):
        tau = _div_exact(total - total.conj().mul_zeta(k), n)
        if tau is None:
            continue
        g = PlacedPentagon(k, True, tau)
        if all(compose(g, t).key() in keys for t in tiles):
            refl += 1

    order = len(valid_rot)
    if order > 1:
        k0 = min(k for k, _ in valid_rot if k != 0)
        tau0 = next(t for k, t in valid_rot if k == k0)
        center2 = solve_center2(k0, tau0)
    else:
        center2 = tiles[0].t + tiles[0].t
    cls = f"{'D' if refl else 'C'}{order}"
    return SymmetryReport(order, center2, refl, cls)
