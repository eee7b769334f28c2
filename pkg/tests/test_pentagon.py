from fractions import Fraction

from pentile.exact import RealQuad, ZETA, direction_index
from pentile.pentagon import (
    ANGLE_UNITS,
    EDGE_KINDS,
    FLAT_2A,
    FLAT_D_PLUS_E,
    FLAT_RELATIONS,
    FULL_RELATIONS,
    LISTED_FLAT_RELATIONS,
    PENTAGON_AREA,
    UNLISTED_FLAT_RELATIONS,
    VertexRelation,
    build_prototile,
    completable,
    corner_units,
    enumerate_relations,
    pentagon_area,
)


def test_angle_units_sum_to_540():
    assert sum(ANGLE_UNITS) == 24
    assert [u * 22.5 for u in ANGLE_UNITS] == [90, 135, 135, 67.5, 112.5]


def test_prototile_certifies():
    tile = build_prototile()
    assert tile.vertices[4] == ZETA[4]  # E at (0, 1)
    assert tile.edge_len2(3) == RealQuad(2, 1)  # |D - E|**2 = 2 + sqrt2
    assert corner_units(tile.vertices, 3) == 3  # 67.5 degrees at D


def test_edge_directions_on_grid():
    tile = build_prototile()
    for i in range(5):
        assert direction_index(tile.edge_vector(i)) is not None


def test_exterior_turns_sum():
    tile = build_prototile()
    turns = [8 - corner_units(tile.vertices, i) for i in range(5)]
    assert sum(turns) == 16  # 360 degrees


def test_area_exact():
    assert pentagon_area() == RealQuad(1, Fraction(3, 4))
    assert pentagon_area() == PENTAGON_AREA
    assert abs(float(PENTAGON_AREA) - 2.0606601717798212) < 1e-12


def test_full_relation_catalog():
    names = {r.name() for r in FULL_RELATIONS}
    assert names == {
        "A+B+C",
        "A+2B",
        "A+2C",
        "B+2E",
        "C+2E",
        "4A",
        "2A+D+E",
        "A+B+2D",
        "A+C+2D",
        "2D+2E",
        "A+4D",
    }
    assert len(FULL_RELATIONS) == 11
    for r in FULL_RELATIONS:
        assert r.units == 16


def test_flat_relations_and_flagging():
    assert set(FLAT_RELATIONS) == {FLAT_D_PLUS_E, FLAT_2A}
    assert LISTED_FLAT_RELATIONS == (FLAT_D_PLUS_E,)
    assert UNLISTED_FLAT_RELATIONS == (FLAT_2A,)
    for r in FLAT_RELATIONS:
        assert r.units == 8


def test_enumeration_is_exhaustive():
    # independent brute force over bounded counts
    expect_full = set()
    expect_flat = set()
    for a in range(5):
        for b in range(4):
            for c in range(4):
                for d in range(7):
                    for e in range(4):
                        s = 4 * a + 6 * b + 6 * c + 3 * d + 5 * e
                        if s == 16:
                            expect_full.add((a, b, c, d, e))
                        elif s == 8 and s > 0:
                            expect_flat.add((a, b, c, d, e))
    assert {r.counts for r in enumerate_relations(16)} == expect_full
    assert {r.counts for r in enumerate_relations(8)} == expect_flat


def test_relation_names():
    assert VertexRelation((1, 1, 1, 0, 0), 16).name() == "A+B+C"
    assert VertexRelation((0, 0, 0, 4, 0), 12).name() == "4D"


def test_completable_prefixes():
    assert completable((0, 0, 0, 0, 0))
    assert completable((1, 1, 0, 0, 0))  # extends to A+B+C
    assert completable((0, 0, 0, 3, 0))  # extends to A+4D
    assert not completable((3, 1, 0, 0, 0))
    assert not completable((0, 1, 0, 1, 1))  # B+D+E fits no catalog relation
