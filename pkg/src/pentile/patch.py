"""Patches of placed pentagons and their exact verification.

A Patch is an immutable collection of placements with derived vertex and
edge incidence indices.  verify() decides pairwise interior-disjointness,
the edge-to-edge property, vertex-figure classification against the
relation catalog, hole extraction and exact area -- all exactly.  Floating
point appears only as a conservative prefilter; a failed filter falls back
to exact arithmetic, so it can cost time but never correctness.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .exact import CycInt, RealQuad, orient, dot_sign, sign_quad_int, direction_index
from .pentagon import (
    ANGLE_UNITS,
    FLAT_RELATION_SET,
    FULL_RELATION_SET,
    PENTAGON_AREA,
    VertexRelation,
    FLAT_UNITS,
    FULL_TURN_UNITS,
)
from .placement import PlacedPentagon, compose

PointKey = tuple
EdgeKey = tuple


@dataclass
class FlatNode:
    point: CycInt
    host_tiles: tuple[int, ...]
    side_counts: tuple[tuple[int, ...], ...]  # label-count tuples per side
    ok: bool
    complete: bool = True


@dataclass
class VerifyReport:
    mode: str
    disjoint: bool
    edge_to_edge: bool
    interior_vertex_relations: dict[tuple[int, ...], int]
    unknown_relations: list[tuple[CycInt, tuple[int, ...]]]
    flat_nodes: list[FlatNode]
    holes: list[list[CycInt]]
    exact_area: RealQuad
    overlap_witness: tuple[int, int] | None = None
    problems: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        if not self.disjoint or self.unknown_relations:
            return False
        if any(not fn.ok for fn in self.flat_nodes):
            return False
        if self.mode == "edge-to-edge":
            return self.edge_to_edge
        return True


class Patch:
    """An ordered, duplicate-free collection of placed pentagons."""

    def __init__(self, tiles):
        tiles = tuple(tiles)
        keys = [t.key() for t in tiles]
        keyset = set(keys)
        if len(keyset) != len(keys):
            raise ValueError("duplicate placement in patch")
        self.tiles: tuple[PlacedPentagon, ...] = tiles
        self.keyset = keyset
        self.meta: dict = {}
        self._verts = None
        self._vertsf = None
        self._csum = None
        self._vertex_map = None
        self._edge_map = None

    def __len__(self) -> int:
        return len(self.tiles)

    # ----- derived caches -------------------------------------------------

    @property
    def verts(self) -> list[tuple[CycInt, ...]]:
        if self._verts is None:
            self._verts = [t.ccw_vertices() for t in self.tiles]
        return self._verts

    @property
    def vertsf(self) -> list[tuple[complex, ...]]:
        if self._vertsf is None:
            self._vertsf = [tuple(complex(v) for v in vs) for vs in self.verts]
        return self._vertsf

    @property
    def csum(self) -> list[int]:
        """Per-tile max coefficient magnitude sum, for float error bounds."""
        if self._csum is None:
            self._csum = [
                max(sum(abs(x) for x in v.c) for v in vs) for vs in self.verts
            ]
        return self._csum

    @property
    def vertex_map(self) -> dict[PointKey, list[tuple[int, int]]]:
        """Exact point -> list of (tile index, ccw corner position)."""
        if self._vertex_map is None:
            vm: dict[PointKey, list[tuple[int, int]]] = {}
            for i, vs in enumerate(self.verts):
                for j, v in enumerate(vs):
                    vm.setdefault(v.c, []).append((i, j))
            self._vertex_map = vm
        return self._vertex_map

    @property
    def edge_map(self) -> dict[EdgeKey, list[tuple[int, int, int]]]:
        """Unordered vertex-key pair -> list of (tile, ccw position, sense)."""
        if self._edge_map is None:
            em: dict[EdgeKey, list[tuple[int, int, int]]] = {}
            for i, vs in enumerate(self.verts):
                for j in range(5):
                    a = vs[j].c
                    b = vs[(j + 1) % 5].c
                    if a < b:
                        em.setdefault((a, b), []).append((i, j, 1))
                    else:
                        em.setdefault((b, a), []).append((i, j, -1))
            self._edge_map = em
        return self._edge_map

    def corner_angle_units(self, tile_idx: int, ccw_pos: int) -> int:
        order = self.tiles[tile_idx].ccw_order()
        return ANGLE_UNITS[order[ccw_pos]]

    def corner_label_index(self, tile_idx: int, ccw_pos: int) -> int:
        return self.tiles[tile_idx].ccw_order()[ccw_pos]

    # ----- geometry helpers ------------------------------------------------

    def _orient(self, o: CycInt, a: CycInt, b: CycInt, of, af, bf, smax: int) -> int:
        det = (af.real - of.real) * (bf.imag - of.imag) - (af.imag - of.imag) * (
            bf.real - of.real
        )
        d1 = abs(af - of)
        d2 = abs(bf - of)
        tol = 2e-13 * (smax * (d1 + d2 + 1.0) + d1 * d2 + 1.0)
        if det > tol:
            return 1
        if det < -tol:
            return -1
        return orient(o, a, b)

    def _grid(self, cell: float) -> dict[tuple[int, int], list[int]]:
        grid: dict[tuple[int, int], list[int]] = {}
        for i, vf in enumerate(self.vertsf):
            xs = [z.real for z in vf]
            ys = [z.imag for z in vf]
            x0, x1 = int(min(xs) // cell), int(max(xs) // cell)
            y0, y1 = int(min(ys) // cell), int(max(ys) // cell)
            for gx in range(x0, x1 + 1):
                for gy in range(y0, y1 + 1):
                    grid.setdefault((gx, gy), []).append(i)
        return grid

    def _sat_interiors_disjoint(self, i: int, j: int) -> bool:
        vi, vj = self.verts[i], self.verts[j]
        fi, fj = self.vertsf[i], self.vertsf[j]
        smax = self.csum[i] + self.csum[j]
        for (va, fa, vb, fb) in ((vi, fi, vj, fj), (vj, fj, vi, fi)):
            for k in range(5):
                u, v = va[k], va[(k + 1) % 5]
                uf, vf = fa[k], fa[(k + 1) % 5]
                if all(
                    self._orient(u, v, w, uf, vf, wf, smax) <= 0
                    for w, wf in zip(vb, fb)
                ):
                    return True
        return False

    def point_on_edge_interior(self, p: CycInt, u: CycInt, v: CycInt) -> bool:
        if orient(u, v, p) != 0:
            return False
        return dot_sign(u, v, p) > 0 and dot_sign(v, u, p) > 0

    # ----- verification ----------------------------------------------------

    def verify(self, mode: str = "edge-to-edge") -> VerifyReport:
        if mode not in ("edge-to-edge", "general"):
            raise ValueError(f"unknown mode {mode!r}")
        n = len(self.tiles)
        report = VerifyReport(
            mode=mode,
            disjoint=True,
            edge_to_edge=True,
            interior_vertex_relations={},
            unknown_relations=[],
            flat_nodes=[],
            holes=[],
            exact_area=PENTAGON_AREA * n,
        )
        if n == 0:
            return report

        em = self.edge_map
        vm = self.vertex_map

        # 1. shared-edge screening: two coincident edges must face each other
        shared_edge_pairs: set[tuple[int, int]] = set()
        for ek, entries in em.items():
            if len(entries) > 2:
                report.disjoint = False
                report.overlap_witness = (entries[0][0], entries[1][0])
                report.problems.append(f"edge shared by {len(entries)} tiles")
                return report
            if len(entries) == 2:
                (i, _, s1), (j, _, s2) = entries
                if s1 == s2:
                    report.disjoint = False
                    report.overlap_witness = (i, j)
                    report.problems.append("two tiles cover the same edge from one side")
                    return report
                shared_edge_pairs.add((min(i, j), max(i, j)))

        # 2. remaining close pairs: exact separation with contact allowed
        grid = self._grid(2.75)
        candidate_pairs: set[tuple[int, int]] = set()
        for bucket in grid.values():
            if len(bucket) > 1:
                for a in range(len(bucket)):
                    for b in range(a + 1, len(bucket)):
                        i, j = bucket[a], bucket[b]
                        if i > j:
                            i, j = j, i
                        candidate_pairs.add((i, j))
        contact_pairs: list[tuple[int, int]] = []
        for (i, j) in sorted(candidate_pairs):
            if (i, j) in shared_edge_pairs:
                continue
            if not self._bbox_touch(i, j):
                continue
            if not self._sat_interiors_disjoint(i, j):
                report.disjoint = False
                report.overlap_witness = (i, j)
                report.problems.append(f"tiles {i} and {j} overlap")
                return report
            contact_pairs.append((i, j))

        # 3. vertex-on-edge-interior incidences (T-contacts / flat node sites)
        incidences = self._edge_interior_incidences()
        if incidences and mode == "edge-to-edge":
            report.edge_to_edge = False
            for (ek, pk) in sorted(incidences):
                report.problems.append("corner meets the interior of an edge")
                break

        # 4. edge-to-edge pair legality for contact pairs
        if mode == "edge-to-edge":
            for (i, j) in contact_pairs:
                shared = self._shared_vertex_count(i, j)
                if shared > 1:
                    report.edge_to_edge = False
                    report.problems.append(
                        f"tiles {i} and {j} touch at {shared} vertices without a shared edge"
                    )
            # partial collinear overlap from a shared vertex
            for pk, incident in vm.items():
                if len(incident) < 2:
                    continue
                dirs: dict[int, int] = {}
                for (ti, pos) in incident:
                    vs = self.verts[ti]
                    p = vs[pos]
                    for q in (vs[(pos + 1) % 5], vs[(pos - 1) % 5]):
                        d = direction_index(q - p)
                        prev = dirs.get(d)
                        if prev is not None and prev != ti:
                            # same direction from the same point: either the
                            # identical shared edge or a partial overlap
                            if not self._coincident_edge(p, q, prev, ti):
                                report.edge_to_edge = False
                                report.problems.append(
                                    "collinear partial edge overlap at a shared vertex"
                                )
                        dirs[d] = ti

        # 5. vertex classification
        host_points: dict[PointKey, list[tuple[int, int]]] = {}
        for (edge_ref, pk) in incidences:
            host_points.setdefault(pk, []).append(edge_ref)
        for pk in sorted(vm.keys()):
            incident = vm[pk]
            units = sum(self.corner_angle_units(ti, pos) for ti, pos in incident)
            counts = [0, 0, 0, 0, 0]
            for ti, pos in incident:
                counts[self.corner_label_index(ti, pos)] += 1
            counts_t = tuple(counts)
            if pk in host_points:
                self._classify_flat_node(pk, incident, host_points[pk], report)
                continue
            if units == FULL_TURN_UNITS:
                key = counts_t
                if key in FULL_RELATION_SET:
                    report.interior_vertex_relations[key] = (
                        report.interior_vertex_relations.get(key, 0) + 1
                    )
                else:
                    report.unknown_relations.append((CycInt(pk), counts_t))
            elif units > FULL_TURN_UNITS:
                report.disjoint = False
                report.overlap_witness = (incident[0][0], incident[-1][0])
                report.problems.append("corner angles exceed 360 degrees at a vertex")
                return report
            # units < 16 with no host edge: ordinary boundary vertex

        # 6. holes
        report.holes = self._holes(incidences)
        return report

    def _bbox_touch(self, i: int, j: int) -> bool:
        fi, fj = self.vertsf[i], self.vertsf[j]
        eps = 1e-9
        if max(z.real for z in fi) < min(z.real for z in fj) - eps:
            return False
        if max(z.real for z in fj) < min(z.real for z in fi) - eps:
            return False
        if max(z.imag for z in fi) < min(z.imag for z in fj) - eps:
            return False
        if max(z.imag for z in fj) < min(z.imag for z in fi) - eps:
            return False
        return True

    def _shared_vertex_count(self, i: int, j: int) -> int:
        vi = {v.c for v in self.verts[i]}
        vj = {v.c for v in self.verts[j]}
        return len(vi & vj)

    def _coincident_edge(self, p: CycInt, q: CycInt, t1: int, t2: int) -> bool:
        a, b = p.c, q.c
        ek = (a, b) if a < b else (b, a)
        entries = self.edge_map.get(ek, ())
        tiles = {e[0] for e in entries}
        return t1 in tiles and t2 in tiles

    def _edge_interior_incidences(self) -> list[tuple[tuple[int, int], PointKey]]:
        """((tile, ccw position), point key) for corners inside edge interiors."""
        out: list[tuple[tuple[int, int], PointKey]] = []
        cell = 1.25
        pgrid: dict[tuple[int, int], list[PointKey]] = {}
        pfloat: dict[PointKey, complex] = {}
        for pk in self.vertex_map:
            zf = complex(CycInt(pk))
            pfloat[pk] = zf
            pgrid.setdefault((int(zf.real // cell), int(zf.imag // cell)), []).append(pk)
        for i, vs in enumerate(self.verts):
            fi = self.vertsf[i]
            for j in range(5):
                u, v = vs[j], vs[(j + 1) % 5]
                uf, vf = fi[j], fi[(j + 1) % 5]
                x0 = min(uf.real, vf.real) - 0.01
                x1 = max(uf.real, vf.real) + 0.01
                y0 = min(uf.imag, vf.imag) - 0.01
                y1 = max(uf.imag, vf.imag) + 0.01
                seen: set[PointKey] = set()
                for gx in range(int(x0 // cell), int(x1 // cell) + 1):
                    for gy in range(int(y0 // cell), int(y1 // cell) + 1):
                        for pk in pgrid.get((gx, gy), ()):
                            if pk in seen:
                                continue
                            seen.add(pk)
                            if pk == u.c or pk == v.c:
                                continue
                            zf = pfloat[pk]
                            if not (x0 <= zf.real <= x1 and y0 <= zf.imag <= y1):
                                continue
                            # distance-from-line float prefilter; the bound
                            # covers input rounding so a true incidence is
                            # never skipped
                            ev = vf - uf
                            cr = ev.real * (zf.imag - uf.imag) - ev.imag * (
                                zf.real - uf.real
                            )
                            smax = self.csum[i] + sum(abs(x) for x in pk)
                            if abs(cr) > 1e-6 + 4e-13 * smax:
                                continue
                            if self.point_on_edge_interior(CycInt(pk), u, v):
                                out.append(((i, j), pk))
        return out

    def _classify_flat_node(self, pk, incident, host_edges, report: VerifyReport) -> None:
        p = CycInt(pk)
        host_tiles = tuple(sorted({ti for ti, _ in host_edges}))
        ti0, j0 = host_edges[0]
        u = self.verts[ti0][j0]
        v = self.verts[ti0][(j0 + 1) % 5]
        sides: dict[int, list[int]] = {}
        side_units: dict[int, int] = {}
        for ti, pos in incident:
            vs = self.verts[ti]
            nbr1 = vs[(pos + 1) % 5]
            nbr2 = vs[(pos - 1) % 5]
            s1 = orient(u, v, nbr1)
            s2 = orient(u, v, nbr2)
            s = s1 if s1 != 0 else s2
            if s == 0:
                report.problems.append("degenerate corner at a flat node")
                report.flat_nodes.append(FlatNode(p, host_tiles, (), False))
                return
            counts = sides.setdefault(s, [0, 0, 0, 0, 0])
            counts[self.corner_label_index(ti, pos)] += 1
            side_units[s] = side_units.get(s, 0) + self.corner_angle_units(ti, pos)
        ok = True
        complete = True
        side_counts = []
        for s, counts in sorted(sides.items()):
            counts_t = tuple(counts)
            side_counts.append(counts_t)
            if side_units[s] > FLAT_UNITS:
                ok = False
            elif side_units[s] == FLAT_UNITS:
                if counts_t not in FLAT_RELATION_SET:
                    ok = False
            else:
                # fewer than 180 degrees: the node sits on the patch boundary
                complete = False
        if not sides:
            ok = False
        report.flat_nodes.append(FlatNode(p, host_tiles, tuple(side_counts), ok, complete))
        if not ok:
            report.problems.append("flat node does not match the 180-degree catalog")

    # ----- boundary and holes ----------------------------------------------

    def boundary_segments(
        self, incidences=None
    ) -> list[tuple[PointKey, PointKey, int]]:
        """Directed boundary segments (tile on the left) with direction index.

        Edges are split at any vertex points lying in their interiors so the
        chain is well defined for non-edge-to-edge patches too.
        """
        if incidences is None:
            incidences = self._edge_interior_incidences()
        splits: dict[tuple[int, int], list[PointKey]] = {}
        for (edge_ref, pk) in incidences:
            splits.setdefault(edge_ref, []).append(pk)
        seg_count: dict[tuple[PointKey, PointKey], list[int]] = {}
        seg_dir: dict[tuple[PointKey, PointKey], int] = {}
        for i, vs in enumerate(self.verts):
            for j in range(5):
                u, v = vs[j], vs[(j + 1) % 5]
                d = direction_index(v - u)
                pts = [u]
                extra = splits.get((i, j))
                if extra:
                    uf = complex(u)
                    extra = sorted(set(extra), key=lambda pk: abs(complex(CycInt(pk)) - uf))
                    pts.extend(CycInt(pk) for pk in extra)
                pts.append(v)
                for a, b in zip(pts, pts[1:]):
                    ka, kb = a.c, b.c
                    if ka < kb:
                        seg_count.setdefault((ka, kb), []).append(1)
                        seg_dir[(ka, kb)] = d
                    else:
                        seg_count.setdefault((kb, ka), []).append(-1)
                        seg_dir[(kb, ka)] = (d + 8) % 16
        out = []
        for (ka, kb), senses in seg_count.items():
            if len(senses) == 1:
                d = seg_dir[(ka, kb)]
                if senses[0] == 1:
                    out.append((ka, kb, d))
                else:
                    out.append((kb, ka, (d + 8) % 16))
        return out

    def _holes(self, incidences=None) -> list[list[CycInt]]:
        loops = self.boundary_loops(incidences)
        holes = []
        for loop in loops:
            if self._loop_signed_area2_sign(loop) < 0:
                # hole loops are traced clockwise; report them as CCW polygons
                holes.append(list(reversed(self._merge_straight(loop))))
        holes.sort(key=lambda poly: sorted(v.c for v in poly))
        return holes

    def boundary_loops(self, incidences=None) -> list[list[CycInt]]:
        segs = self.boundary_segments(incidences)
        outgoing: dict[PointKey, list[tuple[PointKey, int]]] = {}
        for (a, b, d) in segs:
            outgoing.setdefault(a, []).append((b, d))
        unused: set[tuple[PointKey, PointKey]] = {(a, b) for (a, b, _) in segs}
        dir_of = {(a, b): d for (a, b, d) in segs}
        loops = []
        for start in sorted(unused):
            if start not in unused:
                continue
            loop_pts = []
            a, b = start
            while (a, b) in unused:
                unused.discard((a, b))
                loop_pts.append(CycInt(a))
                d_in = dir_of[(a, b)]
                rev = (d_in + 8) % 16
                best = None
                best_rank = 99
                for (c, d_out) in outgoing.get(b, ()):
                    if (b, c) not in unused:
                        continue
                    rank = (rev - d_out - 1) % 16
                    if rank < best_rank:
                        best_rank = rank
                        best = (b, c)
                if best is None:
                    break
                a, b = best
            loops.append(loop_pts)
        return loops

    def _loop_signed_area2_sign(self, loop: list[CycInt]) -> int:
        acc = (0, 0, 0, 0)
        for i, u in enumerate(loop):
            v = loop[(i + 1) % len(loop)]
            w = u.conj() * v
            _, im2 = w.double_re_im()
            acc = tuple(a + b for a, b in zip(acc, im2))
        return sign_quad_int(*acc)

    def _merge_straight(self, loop: list[CycInt]) -> list[CycInt]:
        n = len(loop)
        out = []
        for i in range(n):
            prev, cur, nxt = loop[i - 1], loop[i], loop[(i + 1) % n]
            if orient(prev, cur, nxt) != 0:
                out.append(cur)
        return out

    def exact_area(self) -> RealQuad:
        return PENTAGON_AREA * len(self.tiles)

    def boundary_shoelace_area(self) -> RealQuad:
        """Signed area enclosed by all boundary loops (holes subtract)."""
        acc = (0, 0, 0, 0)
        for loop in self.boundary_loops():
            for i, u in enumerate(loop):
                v = loop[(i + 1) % len(loop)]
                w = u.conj() * v
                _, im2 = w.double_re_im()
                acc = tuple(a + b for a, b in zip(acc, im2))
        return RealQuad(*(Fraction(x, 4) for x in acc))

    # ----- transforms --------------------------------------------------------

    def transform(self, iso: PlacedPentagon) -> "Patch":
        return Patch(tuple(compose(iso, t) for t in self.tiles))

    def equal_as_sets(self, other: "Patch") -> bool:
        return self.keyset == other.keyset


def relation_of_counts(counts: tuple[int, ...], target: int) -> VertexRelation:
    return VertexRelation(tuple(counts), target)
