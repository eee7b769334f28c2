"""Lossless patch files.

Coordinates in files are exact lattice coefficients, never floats: the file
is the ground truth and verification is replayable bit-exactly.  The schema
is strict; unknown fields are rejected so format evolution stays explicit.
"""

from __future__ import annotations

import json

from .exact import CycInt
from .patch import Patch
from .placement import PlacedPentagon

FORMAT_VERSION = 1


class PatchFileError(ValueError):
    pass


def serialize(patch: Patch) -> str:
    """Canonical text form: tiles ordered by (translation, rot, mirror)."""
    tiles = sorted(patch.tiles, key=lambda t: (t.t.c, t.rot, t.mirror))
    doc = {
        "version": FORMAT_VERSION,
        "tiles": [
            {"rot": t.rot, "mirror": t.mirror, "t": list(t.t.c)} for t in tiles
        ],
    }
    meta = getattr(patch, "meta", None)
    if meta:
        doc["metadata"] = {k: meta[k] for k in sorted(meta)}
    return json.dumps(doc, indent=1, sort_keys=True) + "\n"


def parse(text: str) -> Patch:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise PatchFileError(f"not valid JSON: {e}") from None
    if not isinstance(doc, dict):
        raise PatchFileError("top level must be an object")
    allowed = {"version", "tiles", "metadata"}
    unknown = set(doc) - allowed
    if unknown:
        raise PatchFileError(f"unknown fields: {sorted(unknown)}")
    if doc.get("version") != FORMAT_VERSION:
        raise PatchFileError(f"unsupported version {doc.get('version')!r}")
    tiles_field = doc.get("tiles")
    if not isinstance(tiles_field, list):
        raise PatchFileError("tiles must be a list")
    tiles = []
    for i, rec in enumerate(tiles_field):
        if not isinstance(rec, dict):
            raise PatchFileError(f"tile {i}: record must be an object")
        extra = set(rec) - {"rot", "mirror", "t"}
        if extra:
            raise PatchFileError(f"tile {i}: unknown fields {sorted(extra)}")
        rot = rec.get("rot")
        mirror = rec.get("mirror")
        coeffs = rec.get("t")
        if not isinstance(rot, int) or isinstance(rot, bool) or not 0 <= rot <= 15:
            raise PatchFileError(f"tile {i}: rot must be an integer in 0..15")
        if not isinstance(mirror, bool):
            raise PatchFileError(f"tile {i}: mirror must be a boolean")
        if (
            not isinstance(coeffs, list)
            or len(coeffs) != 8
            or any(not isinstance(c, int) or isinstance(c, bool) for c in coeffs)
        ):
            raise PatchFileError(f"tile {i}: t must be a list of 8 integers")
        tiles.append(PlacedPentagon(rot, mirror, CycInt(coeffs)))
    try:
        patch = Patch(tiles)
    except ValueError as e:
        raise PatchFileError(str(e)) from None
    meta = doc.get("metadata")
    if meta is not None:
        if not isinstance(meta, dict):
            raise PatchFileError("metadata must be an object")
        patch.meta = dict(meta)
    return patch
