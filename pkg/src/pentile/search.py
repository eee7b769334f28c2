"""Backtracking edge-to-edge extension search.

extend_search() enumerates every way to attach a given number of tiles to a
patch, one edge-to-edge tile at a time, pruning overlaps and vertices that
close to a figure outside the relation catalog.  Results are deduplicated
modulo the symmetry group of the starting patch and returned in canonical
order, so concurrent or re-run searches produce identical output.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exact import CYC_ZERO, CycInt, direction_index
from .pentagon import (
    ANGLE_UNITS,
    CANONICAL_VERTICES,
    FULL_RELATION_SET,
    FULL_TURN_UNITS,
    completable,
)
from .patch import Patch
from .placement import PlacedPentagon, compose
from .symmetry import symmetry


@dataclass
class SearchResult:
    patches: list[Patch]
    truncated: bool
    nodes: int


def canonical_form(tiles) -> tuple:
    """Canonical key of a placement set modulo all lattice isometries."""
    keys = [(t.rot, t.mirror, t.t) for t in tiles]
    best = None
    for mirror in (False, True):
        for k in range(16):
            g = PlacedPentagon(k, mirror, CYC_ZERO)
            moved = [compose(g, PlacedPentagon(r, m, t)) for (r, m, t) in keys]
            tmin = min(p.t.c for p in moved)
            shifted = sorted(
                (p.rot, p.mirror, tuple(a - b for a, b in zip(p.t.c, tmin)))
                for p in moved
            )
            cand = tuple(shifted)
            if best is None or cand < best:
                best = cand
    return best


def congruent(a, b) -> bool:
    """Placement-set equality up to a lattice isometry (mirrors included)."""
    ta = a.tiles if isinstance(a, Patch) else tuple(a)
    tb = b.tiles if isinstance(b, Patch) else tuple(b)
    if len(ta) != len(tb):
        return False
    return canonical_form(ta) == canonical_form(tb)


def directly_congruent(a, b) -> bool:
    """Equality up to direct (orientation-preserving) lattice isometries."""
    ta = a.tiles if isinstance(a, Patch) else tuple(a)
    tb = b.tiles if isinstance(b, Patch) else tuple(b)
    if len(ta) != len(tb):
        return False
    return _chiral_canon(ta) == _chiral_canon(tb)


def _chiral_canon(tiles) -> tuple:
    best = None
    for k in range(16):
        g = PlacedPentagon(k, False, CYC_ZERO)
        moved = [compose(g, t) for t in tiles]
        tmin = min(p.t.c for p in moved)
        cand = tuple(
            sorted(
                (p.rot, p.mirror, tuple(a - b for a, b in zip(p.t.c, tmin)))
                for p in moved
            )
        )
        if best is None or cand < best:
            best = cand
    return best


class Occupancy:
    """Incremental exact occupancy used while searching.

    Tracks vertex corner counts, edge usage and a float grid for overlap
    candidates; placements are only ever added, removal is by rollback
    tokens, so backtracking is cheap.
    """

    def __init__(self, tiles=()):
        self.tiles: list[PlacedPentagon] = []
        self.keys: set = set()
        self.vertex_units: dict[tuple, int] = {}
        self.vertex_counts: dict[tuple, list[int]] = {}
        self.edge_tiles: dict[tuple, list[int]] = {}
        self.grid: dict[tuple[int, int], list[int]] = {}
        self.cell = 2.75
        for t in tiles:
            ok = self.try_add(t)
            if ok is None:
                raise ValueError("seed tiles are not a legal configuration")

    def _cells_of(self, vf):
        xs = [z.real for z in vf]
        ys = [z.imag for z in vf]
        c = self.cell
        out = []
        for gx in range(int(min(xs) // c), int(max(xs) // c) + 1):
            for gy in range(int(min(ys) // c), int(max(ys) // c) + 1):
                out.append((gx, gy))
        return out

    def _overlaps_nearby(self, tile: PlacedPentagon, vs, vf) -> bool:
        seen = set()
        for cell in self._cells_of(vf):
            for i in self.grid.get(cell, ()):
                if i in seen:
                    continue
                seen.add(i)
                if not self._pair_disjoint(vs, vf, i):
                    return True
        return False

    def _pair_disjoint(self, vs, vf, i: int) -> bool:
        other = self.tiles[i]
        ovs = other.ccw_vertices()
        ovf = [complex(v) for v in ovs]
        if max(z.real for z in vf) < min(z.real for z in ovf) - 1e-9:
            return True
        if max(z.real for z in ovf) < min(z.real for z in vf) - 1e-9:
            return True
        if max(z.imag for z in vf) < min(z.imag for z in ovf) - 1e-9:
            return True
        if max(z.imag for z in ovf) < min(z.imag for z in vf) - 1e-9:
            return True
        # shared full edge implies disjoint interiors for convex CCW tiles,
        # provided the edge is traversed in opposite senses
        for va, vb in ((vs, ovs), (ovs, vs)):
            aset = {(va[j].c, va[(j + 1) % 5].c) for j in range(5)}
            for j in range(5):
                if (vb[(j + 1) % 5].c, vb[j].c) in aset:
                    return True
                if (vb[j].c, vb[(j + 1) % 5].c) in aset:
                    return False  # same sense: overlap
        from .exact import orient

        for va, fa, vb, fb in ((vs, vf, ovs, ovf), (ovs, ovf, vs, vf)):
            for k in range(5):
                u, v = va[k], va[(k + 1) % 5]
                if all(orient(u, v, w) <= 0 for w in vb):
                    return True
        return False

    def try_add(self, tile: PlacedPentagon, require_completable: bool = False):
        """Add a tile if legal; returns a rollback token or None."""
        key = tile.key()
        if key in self.keys:
            return None
        vs = tile.ccw_vertices()
        vf = [complex(v) for v in vs]
        units = tile.ccw_angle_units()
        order = tile.ccw_order()
        # vertex-figure prune
        for j, v in enumerate(vs):
            vk = v.c
            total = self.vertex_units.get(vk, 0) + units[j]
            if total > FULL_TURN_UNITS:
                return None
            counts = self.vertex_counts.get(vk)
            newc = list(counts) if counts else [0, 0, 0, 0, 0]
            newc[order[j]] += 1
            if total == FULL_TURN_UNITS:
                if tuple(newc) not in FULL_RELATION_SET:
                    return None
            elif require_completable and not completable(tuple(newc)):
                return None
        # edge usage prune: at most two tiles per edge, opposite senses
        idx = len(self.tiles)
        edge_entries = []
        for j in range(5):
            a, b = vs[j].c, vs[(j + 1) % 5].c
            ek = (a, b) if a < b else (b, a)
            cur = self.edge_tiles.get(ek, ())
            if len(cur) >= 2:
                return None
            edge_entries.append(ek)
        if self._overlaps_nearby(tile, vs, vf):
            return None
        # commit
        self.tiles.append(tile)
        self.keys.add(key)
        for j, v in enumerate(vs):
            vk = v.c
            self.vertex_units[vk] = self.vertex_units.get(vk, 0) + units[j]
            counts = self.vertex_counts.setdefault(vk, [0, 0, 0, 0, 0])
            counts[order[j]] += 1
        for ek in edge_entries:
            self.edge_tiles.setdefault(ek, []).append(idx)
        cells = self._cells_of(vf)
        for cell in cells:
            self.grid.setdefault(cell, []).append(idx)
        return (tile, vs, edge_entries, cells)

    def rollback(self, token) -> None:
        tile, vs, edge_entries, cells = token
        idx = len(self.tiles) - 1
        assert self.tiles[idx].key() == tile.key()
        self.tiles.pop()
        self.keys.discard(tile.key())
        units = tile.ccw_angle_units()
        order = tile.ccw_order()
        for j, v in enumerate(vs):
            vk = v.c
            self.vertex_units[vk] -= units[j]
            if self.vertex_units[vk] == 0:
                del self.vertex_units[vk]
                del self.vertex_counts[vk]
            else:
                self.vertex_counts[vk][order[j]] -= 1
        for ek in edge_entries:
            lst = self.edge_tiles[ek]
            lst.pop()
            if not lst:
                del self.edge_tiles[ek]
        for cell in cells:
            self.grid[cell].pop()

    def boundary_edges(self) -> list[tuple[CycInt, CycInt]]:
        """Directed boundary edges (owning tile on the left)."""
        out = []
        for ek, lst in self.edge_tiles.items():
            if len(lst) == 1:
                i = lst[0]
                vs = self.tiles[i].ccw_vertices()
                for j in range(5):
                    a, b = vs[j], vs[(j + 1) % 5]
                    kk = (a.c, b.c) if a.c < b.c else (b.c, a.c)
                    if kk == ek:
                        out.append((a, b))
                        break
        return out


_CCW_CANON = {
    False: tuple(CANONICAL_VERTICES[i] for i in (0, 1, 2, 3, 4)),
    True: tuple(CANONICAL_VERTICES[i].conj() for i in (0, 4, 3, 2, 1)),
}


def attachments_for_edge(u: CycInt, v: CycInt) -> list[PlacedPentagon]:
    """All placements whose tile lies right of the directed edge (u, v) and
    shares it in full.  Unit edges admit eight candidates, the long edge two."""
    host = u - v
    host_len2 = host.norm2()
    host_dir = direction_index(host)
    out = []
    for mirror in (False, True):
        canon = _CCW_CANON[mirror]
        for j in range(5):
            a = canon[j]
            b = canon[(j + 1) % 5]
            w = b - a
            if w.norm2() != host_len2:
                continue
            r = (host_dir - direction_index(w)) % 16
            t = v - a.mul_zeta(r)
            out.append(PlacedPentagon(r, mirror, t))
    return out


def extend_search(
    patch: Patch,
    depth: int,
    budget: int = 10**6,
    require_completable: bool = False,
) -> SearchResult:
    """Exhaustive depth-limited enumeration of edge-to-edge extensions.

    Returns all distinct patches obtained by attaching exactly `depth`
    tiles, canonicalized modulo the symmetry group of the input patch.  The
    node budget guards runaway searches; exceeding it sets `truncated`.
    """
    if depth < 1:
        raise ValueError("depth must be >= 1")
    base_keys = frozenset(patch.keyset)
    sym_group = _symmetry_isometries(patch) if len(patch) else [PlacedPentagon(0, False, CYC_ZERO)]

    nodes = 0
    truncated = False
    found: dict[tuple, tuple] = {}

    occ = Occupancy(patch.tiles)

    def rec(level: int, added: list[PlacedPentagon]):
        nonlocal nodes, truncated
        if level == depth:
            cls = _extension_class(added, sym_group)
            if cls not in found:
                found[cls] = tuple(added)
            return
        cands = []
        seenk = set()
        for (u, v) in occ.boundary_edges():
            for cand in attachments_for_edge(u, v):
                k = cand.key()
                if k not in seenk:
                    seenk.add(k)
                    cands.append(cand)
        cands.sort(key=lambda p: p.key())
        for cand in cands:
            if truncated:
                return
            nodes += 1
            if nodes > budget:
                truncated = True
                return
            token = occ.try_add(cand, require_completable)
            if token is None:
                continue
            added.append(cand)
            rec(level + 1, added)
            added.pop()
            occ.rollback(token)

    rec(0, [])
    patches = []
    for cls in sorted(found.keys()):
        patches.append(Patch(patch.tiles + found[cls]))
    return SearchResult(patches, truncated, nodes)


def _symmetry_isometries(patch: Patch) -> list[PlacedPentagon]:
    """All lattice isometries mapping the patch onto itself."""
    tiles = patch.tiles
    n = len(tiles)
    keys = patch.keyset
    from .symmetry import _anchor_sum, _div_exact

    total = _anchor_sum(tiles)
    out = []
    for mirror in (False, True):
        for k in range(16):
            ref = total.conj() if mirror else total
            tau = _div_exact(total - ref.mul_zeta(k), n)
            if tau is None:
                continue
            g = PlacedPentagon(k, mirror, tau)
            if all(compose(g, t).key() in keys for t in tiles):
                out.append(g)
    return out


def _extension_class(added, sym_group) -> tuple:
    best = None
    for g in sym_group:
        cand = tuple(sorted(compose(g, t).key() for t in added))
        if best is None or cand < best:
            best = cand
    return best
