import random

import pytest

from pentile.exact import CYC_ZERO, CycInt, ZETA
from pentile.patch import Patch
from pentile.placement import IDENTITY, PlacedPentagon, compose, rotation, translation
from pentile.symmetry import symmetry
from pentile.units import HEXADECA_L, make_hexa_unit, make_hexadeca_unit, make_octa_unit


def test_empty_patch_raises():
    with pytest.raises(ValueError):
        symmetry(Patch([]))


def test_single_tile_is_c1():
    rep = symmetry(Patch([IDENTITY]))
    assert rep.rotation_order == 1
    assert rep.reflection_axes == 0
    assert rep.classification == "C1"


def test_octa_unit_has_mirror():
    rep = symmetry(Patch(make_octa_unit(IDENTITY)))
    assert rep.rotation_order == 1
    assert rep.reflection_axes == 1
    assert rep.classification == "D1"


def test_hexa_unit_c2_about_edge_midpoint():
    rep = symmetry(Patch(make_hexa_unit(IDENTITY)))
    assert rep.classification == "C2"
    # midpoint of edge e: (D + E) / 2, doubled = D + E = 1 + z2 + 2*z4
    assert rep.center2 == CycInt((1, 0, 1, 0, 2, 0, 0, 0))


def test_hexadeca_c4_about_its_center():
    center = ZETA[0] * 3
    tiles = make_hexadeca_unit(HEXADECA_L, center)
    rep = symmetry(Patch(tiles))
    assert rep.classification == "C4"
    assert rep.center2 == center + center


def test_symmetry_is_isometry_covariant():
    rnd = random.Random(21)
    tiles = make_hexadeca_unit(HEXADECA_L, CYC_ZERO)
    base = symmetry(Patch(tiles))
    for _ in range(5):
        iso = PlacedPentagon(
            rnd.randrange(16),
            rnd.random() < 0.5,
            CycInt(tuple(rnd.randint(-4, 4) for _ in range(8))),
        )
        moved = Patch([compose(iso, t) for t in tiles])
        rep = symmetry(moved)
        assert rep.rotation_order == base.rotation_order
        assert rep.reflection_axes == base.reflection_axes


def test_d8_ring():
    # the first ring of the eight-fold pattern alone still has mirror axes
    from pentile.generators import _c8_seed

    rep = symmetry(Patch(_c8_seed()))
    assert rep.rotation_order == 8
    assert rep.reflection_axes == 8
    assert rep.classification == "D8"
    assert rep.center2 == CYC_ZERO
