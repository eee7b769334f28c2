import json
import random

import pytest

from pentile.exact import CYC_ZERO, CycInt
from pentile.patch import Patch
from pentile.patchfile import PatchFileError, parse, serialize
from pentile.placement import IDENTITY, PlacedPentagon
from pentile.svg import RenderOptions, render_svg
from pentile.units import HEXADECA_L, make_hexadeca_unit, make_octa_unit


def test_single_tile_roundtrip():
    p = Patch([IDENTITY])
    text = serialize(p)
    doc = json.loads(text)
    assert doc["version"] == 1
    assert doc["tiles"] == [{"rot": 0, "mirror": False, "t": [0] * 8}]
    q = parse(text)
    assert q.equal_as_sets(p)


def test_random_roundtrip():
    rnd = random.Random(41)
    tiles = []
    seen = set()
    for _ in range(40):
        t = PlacedPentagon(
            rnd.randrange(16),
            rnd.random() < 0.5,
            CycInt(tuple(rnd.randint(-30, 30) for _ in range(8))),
        )
        if t.key() not in seen:
            seen.add(t.key())
            tiles.append(t)
    p = Patch(tiles)
    q = parse(serialize(p))
    assert q.equal_as_sets(p)
    # canonical order makes serialization placement-order independent
    rnd.shuffle(tiles)
    assert serialize(Patch(tiles)) == serialize(p)


def test_metadata_roundtrip():
    p = Patch([IDENTITY])
    p.meta = {"pattern": "type7", "size": 2, "mode": "edge-to-edge"}
    q = parse(serialize(p))
    assert q.meta == p.meta


def test_parse_rejects_bad_documents():
    good = serialize(Patch([IDENTITY]))
    with pytest.raises(PatchFileError):
        parse("not json")
    with pytest.raises(PatchFileError):
        parse("[1,2,3]")
    doc = json.loads(good)
    doc["extra"] = 1
    with pytest.raises(PatchFileError):
        parse(json.dumps(doc))
    doc = json.loads(good)
    doc["tiles"][0]["rot"] = 16
    with pytest.raises(PatchFileError):
        parse(json.dumps(doc))
    doc = json.loads(good)
    doc["tiles"][0]["t"] = [0.5] + [0] * 7
    with pytest.raises(PatchFileError):
        parse(json.dumps(doc))
    doc = json.loads(good)
    doc["tiles"][0]["mirror"] = 1
    with pytest.raises(PatchFileError):
        parse(json.dumps(doc))
    doc = json.loads(good)
    doc["version"] = 2
    with pytest.raises(PatchFileError):
        parse(json.dumps(doc))
    # duplicate placements rejected at patch construction
    doc = json.loads(good)
    doc["tiles"].append(dict(doc["tiles"][0]))
    with pytest.raises(PatchFileError):
        parse(json.dumps(doc))


def test_svg_deterministic():
    tiles = make_hexadeca_unit(HEXADECA_L, CYC_ZERO)
    p = Patch(tiles)
    a = render_svg(p)
    b = render_svg(p)
    assert a == b
    # placement order must not matter either
    q = Patch(list(reversed(tiles)))
    assert render_svg(q) == a


def test_svg_canonical_prototile_path():
    text = render_svg(Patch([IDENTITY]), RenderOptions(color_by="none"))
    assert "M 0.000000 0.000000" in text
    assert "1.000000 0.000000" in text
    assert "1.707107 -0.707107" in text  # svg y axis points down
    assert "1.707107 -1.707107" in text
    assert "0.000000 -1.000000" in text


def test_svg_empty_patch():
    text = render_svg(Patch([]))
    assert text.startswith("<?xml")
    assert "<svg" in text and "</svg>" in text


def test_svg_color_modes():
    tiles = list(make_octa_unit(IDENTITY))
    p = Patch(tiles)
    assert "octa" in render_svg(p, RenderOptions(color_by="unit"))
    assert "mirrored" in render_svg(p, RenderOptions(color_by="chirality"))
    assert "plain" in render_svg(p, RenderOptions(color_by="none"))
    with pytest.raises(ValueError):
        RenderOptions(color_by="rainbow")
    with pytest.raises(ValueError):
        RenderOptions(precision=0)
