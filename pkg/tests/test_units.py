import random

from pentile.exact import CYC_ZERO, CycInt, RealQuad, ZETA
from pentile.patch import Patch
from pentile.placement import IDENTITY, PlacedPentagon, compose, rotation, translation
from pentile.pentagon import PENTAGON_AREA
from pentile.search import congruent, directly_congruent
from pentile.units import (
    HEXADECA_L,
    HEXADECA_R,
    certify_hexa,
    certify_hexadeca,
    certify_octa,
    fused_boundary,
    make_hexa_unit,
    make_hexadeca_unit,
    make_octa_unit,
    octa_cell,
    octa_partner,
    hexa_partner,
    unit_decomposition,
)


def rnd_placement(rnd):
    return PlacedPentagon(
        rnd.randrange(16),
        rnd.random() < 0.5,
        CycInt(tuple(rnd.randint(-3, 3) for _ in range(8))),
    )


def cyclic_eq(a, b):
    n = len(a)
    if n != len(b):
        return False
    return any(tuple(a[(i + j) % n] for j in range(n)) == tuple(b) for i in range(n))


def test_octa_unit_certificate():
    cert = certify_octa(make_octa_unit(IDENTITY))
    assert cert["sides"] == 8
    assert cert["equilateral"] and cert["side_len2"] == RealQuad(1)
    assert cert["reflex_count"] == 1
    assert cert["angle_sum_units"] == 48  # 1080 degrees
    # from the merged D corner: 135,135,135,90,225,90,135,135
    assert cyclic_eq(cert["angle_units"], [6, 6, 6, 4, 10, 4, 6, 6])


def test_octa_unit_random_bases():
    rnd = random.Random(11)
    for _ in range(10):
        base = rnd_placement(rnd)
        pair = make_octa_unit(base)
        assert Patch(pair).verify().ok
        cert = certify_octa(pair)
        assert cert["equilateral"] and cert["reflex_count"] == 1


def test_hexa_unit_certificate():
    pair = make_hexa_unit(IDENTITY)
    cert = certify_hexa(pair)
    assert cert["sides"] == 6
    assert cert["convex"]
    assert sorted(cert["angle_units"]) == [4, 4, 6, 6, 6, 6]
    lens = sorted(float(x) for x in cert["side_len2"])
    assert lens == [1.0, 1.0, 1.0, 1.0, 4.0, 4.0]
    # centrally symmetric about the midpoint of edge e
    assert cert["rotation_order"] == 2
    assert cert["center2"] == CycInt((1, 0, 1, 0, 2, 0, 0, 0))


def test_hexa_area_is_twice_pentagon():
    pair = make_hexa_unit(IDENTITY)
    assert Patch(pair).exact_area() == PENTAGON_AREA * 2
    assert Patch(pair).boundary_shoelace_area() == PENTAGON_AREA * 2


def test_mirror_of_octa_is_octa():
    base = make_octa_unit(IDENTITY)
    mirror = PlacedPentagon(0, True, CYC_ZERO)
    mirrored = [compose(mirror, t) for t in base]
    assert congruent(base, mirrored)


def test_hexa_junction_is_flat():
    base, partner = make_hexa_unit(IDENTITY)
    # D of the base coincides with E of the partner and vice versa
    assert base.vertices()[3] == partner.vertices()[4]
    assert base.vertices()[4] == partner.vertices()[3]


def test_hexadeca_certificate():
    tiles = make_hexadeca_unit(HEXADECA_L, CYC_ZERO)
    assert len(tiles) == 8
    p = Patch(tiles)
    rep = p.verify()
    assert rep.ok and not rep.holes
    # central concentration is 4A
    counts = rep.interior_vertex_relations
    assert counts.get((4, 0, 0, 0, 0)) == 1
    cert = certify_hexadeca(tiles)
    assert cert["sides"] == 16
    assert cert["equilateral"]
    assert cert["rotation_order"] == 4 and cert["reflections"] == 4  # D4 outline
    assert cert["center2"] == CYC_ZERO


def test_hexadeca_chirality():
    left = make_hexadeca_unit(HEXADECA_L, CYC_ZERO)
    right = make_hexadeca_unit(HEXADECA_R, CYC_ZERO)
    assert congruent(left, right)  # mirror images
    assert not directly_congruent(left, right)  # no direct isometry relates them
    assert directly_congruent(left, left)


def test_hexadeca_placement_set_is_c4():
    from pentile.symmetry import symmetry

    for kind in (HEXADECA_L, HEXADECA_R):
        sym = symmetry(Patch(make_hexadeca_unit(kind, CYC_ZERO)))
        assert sym.rotation_order == 4
        assert sym.reflection_axes == 0


def test_hexadeca_outline_matches_between_chiralities():
    # the two chiralities fill the same D4 16-gon, which is what lets the
    # central unit of a four-fold tiling be swapped freely
    left = fused_boundary(make_hexadeca_unit(HEXADECA_L, CYC_ZERO))
    right = fused_boundary(make_hexadeca_unit(HEXADECA_R, CYC_ZERO))
    assert {v.c for v in left} == {v.c for v in right}


def test_octa_cell_translates():
    rnd = random.Random(12)
    for frame in (0, 1, 2, 5):
        for dent in range(4):
            corner = CycInt(tuple(rnd.randint(-2, 2) for _ in range(8)))
            low, up = octa_cell(corner, dent, frame)
            assert octa_partner(low).key() == up.key()
            assert Patch([low, up]).verify().ok


def test_unit_decomposition():
    tiles = list(make_octa_unit(IDENTITY))
    shift = translation(CycInt((5, 0, 0, 0, 0, 0, 0, 0)))
    tiles += [compose(shift, t) for t in make_hexa_unit(IDENTITY)]
    units, incomplete = unit_decomposition(Patch(tiles))
    kinds = sorted(k for k, _ in units)
    assert kinds == ["hexa", "octa"]
    assert not incomplete


def test_unit_decomposition_incomplete():
    units, incomplete = unit_decomposition(Patch([IDENTITY]))
    assert units == []
    assert incomplete == [0]
