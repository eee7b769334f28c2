"""Extension-search tests, including the independent brute-force oracle."""

from pentile.exact import CYC_ZERO, CycInt, ZETA, direction_index
from pentile.patch import Patch
from pentile.pentagon import CANONICAL_VERTICES
from pentile.placement import IDENTITY, PlacedPentagon, compose
from pentile.search import (
    Occupancy,
    attachments_for_edge,
    canonical_form,
    congruent,
    extend_search,
)
from pentile.units import hexa_partner, octa_partner


def brute_force_single_edge(patch: Patch, u, v):
    """Independent enumeration: all (rot, mirror, vertex-pairing) placements
    sharing the full edge (u, v), filtered by plain patch verification."""
    host_len2 = (u - v).norm2()
    legal = []
    seen = set()
    for rot in range(16):
        for mirror in (False, True):
            probe = PlacedPentagon(rot, mirror, CYC_ZERO)
            vs = probe.ccw_vertices()
            for j in range(5):
                a, b = vs[j], vs[(j + 1) % 5]
                if (b - a).norm2() != host_len2:
                    continue
                # translate so that the probe edge (a, b) lands on (v, u)
                t = v - a
                cand = PlacedPentagon(rot, mirror, t)
                cvs = cand.ccw_vertices()
                if cvs[j] != v or cvs[(j + 1) % 5] != u:
                    continue
                if cand.key() in seen or cand.key() in patch.keyset:
                    continue
                seen.add(cand.key())
                trial = Patch(list(patch.tiles) + [cand])
                rep = trial.verify("edge-to-edge")
                if rep.disjoint and rep.edge_to_edge and not rep.unknown_relations:
                    legal.append(cand)
    return legal


def test_e_edge_attachments_are_octa_and_hexa():
    single = Patch([IDENTITY])
    vs = IDENTITY.ccw_vertices()
    u, v = vs[3], vs[4]  # the long edge, tile on the left
    cands = attachments_for_edge(u, v)
    assert len(cands) == 2
    legal = brute_force_single_edge(single, u, v)
    assert {c.key() for c in cands} == {c.key() for c in legal}
    expected = {octa_partner(IDENTITY).key(), hexa_partner(IDENTITY).key()}
    assert {c.key() for c in legal} == expected


def test_unit_edges_have_eight_candidates():
    vs = IDENTITY.ccw_vertices()
    u, v = vs[0], vs[1]
    assert len(attachments_for_edge(u, v)) == 8


def test_depth1_matches_brute_force():
    single = Patch([IDENTITY])
    result = extend_search(single, 1)
    assert not result.truncated
    # oracle: loop over every boundary edge with the independent enumerator
    expected_keys = set()
    occ = Occupancy([IDENTITY])
    for (u, v) in occ.boundary_edges():
        for cand in brute_force_single_edge(single, u, v):
            expected_keys.add(cand.key())
    got_keys = set()
    for p in result.patches:
        (added,) = [t for t in p.tiles if t.key() != IDENTITY.key()]
        got_keys.add(added.key())
    assert got_keys == expected_keys
    assert len(result.patches) == len(expected_keys)


def test_extensions_contain_base_and_verify():
    single = Patch([IDENTITY])
    result = extend_search(single, 2, budget=20000)
    assert result.patches
    for p in result.patches[:10]:
        assert IDENTITY.key() in p.keyset
        rep = p.verify("edge-to-edge")
        assert rep.disjoint and rep.edge_to_edge and not rep.unknown_relations


def test_search_determinism():
    single = Patch([IDENTITY])
    r1 = extend_search(single, 1)
    r2 = extend_search(single, 1)
    assert [p.keyset for p in r1.patches] == [p.keyset for p in r2.patches]


def test_budget_truncation_flag():
    single = Patch([IDENTITY])
    result = extend_search(single, 3, budget=30)
    assert result.truncated


def test_dedup_modulo_patch_symmetry():
    # an octa unit has a mirror symmetry; symmetric attachments collapse
    pair = Patch(list(octa_partner(IDENTITY).vertices() and [IDENTITY, octa_partner(IDENTITY)]))
    naive = 0
    occ = Occupancy(pair.tiles)
    seen = set()
    for (u, v) in occ.boundary_edges():
        for cand in attachments_for_edge(u, v):
            if cand.key() in seen:
                continue
            seen.add(cand.key())
            token = occ.try_add(cand)
            if token is not None:
                naive += 1
                occ.rollback(token)
    result = extend_search(pair, 1)
    # with a nontrivial symmetry group the deduplicated count is smaller
    assert len(result.patches) < naive


def test_canonical_form_invariance():
    import random

    rnd = random.Random(31)
    tiles = [IDENTITY, octa_partner(IDENTITY)]
    base = canonical_form(tiles)
    for _ in range(5):
        iso = PlacedPentagon(
            rnd.randrange(16),
            rnd.random() < 0.5,
            CycInt(tuple(rnd.randint(-3, 3) for _ in range(8))),
        )
        moved = [compose(iso, t) for t in tiles]
        assert canonical_form(moved) == base
        assert congruent(tiles, moved)
