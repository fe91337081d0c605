import itertools
import random

import pytest

from icehive.errors import (
    FlipUndefined,
    InvalidChoice,
    InvalidTriangulation,
    NotADiagonal,
    SizeTooSmall,
)
from icehive.hive import build_hive, relabel_cyclic
from icehive.quiver import b_equivalent
from icehive.surface import (
    DiskTriangulation,
    all_triangulations,
    alternating_triangulation,
    flip,
    flip_layers,
    flip_transport,
    flip_verify,
    glue,
    glued_twist_sequence,
    twist,
    twist_hive_map,
    twist_layers,
    twist_sequence,
    twist_transport,
    twist_verify,
)


def square():
    return DiskTriangulation(4, [(1, 2, 3), (1, 3, 4)])


def arrow_set(quiver):
    out = set()
    for u in range(quiver.q):
        for v in range(quiver.q):
            if quiver.adj[u][v] > 0:
                out.add((quiver.labels[u], quiver.labels[v], quiver.adj[u][v]))
    return out


def vertex_count(m, l):
    return ((l - 1) * (l + 1) * (m - 2) + (l - 1) * m) // 2


def test_triples_are_canonicalized_cyclically():
    tri = DiskTriangulation(4, [(2, 3, 1), (3, 4, 1)])
    assert tri.triangles == ((1, 2, 3), (1, 3, 4))
    assert tri == square()


def test_orientation_signs():
    tri = DiskTriangulation(4, [(1, 2, 3), (1, 4, 3)])
    assert tri.orientation(0) == 1
    assert tri.orientation(1) == -1


def test_validation_rejects_bad_input():
    with pytest.raises(InvalidTriangulation):
        DiskTriangulation(2, [])
    with pytest.raises(InvalidTriangulation):
        DiskTriangulation(4, [(1, 2, 3)])
    with pytest.raises(InvalidTriangulation):
        DiskTriangulation(4, [(1, 2, 2), (1, 3, 4)])
    with pytest.raises(InvalidTriangulation):
        DiskTriangulation(4, [(1, 2, 5), (1, 3, 4)])
    with pytest.raises(InvalidTriangulation):
        DiskTriangulation(4, [(1, 2, 3), (1, 3, 2)])
    with pytest.raises(InvalidTriangulation):
        DiskTriangulation(4, [(1, 2, 3), (2, 3, 4)])


def test_diagonals_and_boundary():
    tri = square()
    assert tri.diagonals() == [(1, 3)]
    assert tri.triangles_at((3, 1)) == (0, 1)
    assert frozenset((1, 2)) in tri.boundary_pairs
    with pytest.raises(NotADiagonal):
        tri.triangles_at((1, 2))
    with pytest.raises(NotADiagonal):
        tri.triangles_at((2, 4))


def test_seam_consistency():
    tri = square()
    assert tri.seam_consistent((1, 3))
    assert tri.is_consistent()
    rev = DiskTriangulation(4, [(1, 2, 3), (1, 4, 3)])
    assert not rev.seam_consistent((1, 3))
    assert not rev.is_consistent()


def test_json_roundtrip_checks_orientations():
    tri = DiskTriangulation(5, [(1, 2, 5), (2, 5, 3), (3, 4, 5)])
    obj = tri.to_json_obj()
    assert DiskTriangulation.from_json_obj(obj) == tri
    obj["orientations"] = [1, 1, 1]
    with pytest.raises(InvalidTriangulation):
        DiskTriangulation.from_json_obj(obj)


def test_alternating_triangulation_zigzags():
    assert alternating_triangulation(3).triangles == ((1, 2, 3),)
    assert alternating_triangulation(4).triangles == ((1, 2, 4), (2, 4, 3))
    assert alternating_triangulation(5).triangles == (
        (1, 2, 5),
        (2, 5, 3),
        (3, 4, 5),
    )
    nine = alternating_triangulation(9)
    assert len(nine.triangles) == 7
    signs = [nine.orientation(i) for i in range(7)]
    assert signs == [1, -1, 1, -1, 1, -1, 1]


def test_twisting_every_clockwise_triangle_restores_consistency():
    for m in range(3, 8):
        tri = alternating_triangulation(m)
        for idx in range(len(tri.triangles)):
            if tri.orientation(idx) == -1:
                t = tri.triangles[idx]
                tri = twist(tri, idx, (t[0], t[1]))
        assert tri.is_consistent()


def test_all_triangulations_catalan_counts():
    for m, catalan in ((3, 1), (4, 2), (5, 5), (6, 14)):
        tris = all_triangulations(m)
        assert len(tris) == catalan
        assert len(set(tris)) == catalan
        assert all(t.is_consistent() for t in tris)


def test_glue_vertex_counts_match_closed_form():
    for m in (3, 4, 5):
        for tri in all_triangulations(m):
            for l in (2, 3, 4):
                glued = glue(tri, l)
                assert glued.quiver.q == vertex_count(m, l)
                assert len(glued.quiver.frozen_ids()) == m * (l - 1)
    glued = glue(all_triangulations(6)[0], 3)
    assert glued.quiver.q == vertex_count(6, 3)


def test_glue_rejects_tiny_hives():
    with pytest.raises(SizeTooSmall):
        glue(square(), 1)


def test_gluing_one_triangle_matches_cyclic_relabeling():
    tri = DiskTriangulation(3, [(1, 2, 3)])
    for l in (2, 3, 4):
        assert glue(tri, l).quiver == relabel_cyclic(build_hive(l), (1, 2, 3))


def test_glued_square_at_size_two_is_the_adjacency_quiver():
    quiver = glue(square(), 2).quiver
    assert sorted(quiver.labels[u] for u in quiver.frozen_ids()) == [
        (1, 1, 2, 1),
        (1, 1, 4, 1),
        (2, 1, 3, 1),
        (3, 1, 4, 1),
    ]
    assert arrow_set(quiver) == {
        ((1, 1, 2, 1), (1, 1, 3, 1), 1),
        ((1, 1, 3, 1), (2, 1, 3, 1), 1),
        ((2, 1, 3, 1), (1, 1, 2, 1), 1),
        ((1, 1, 3, 1), (1, 1, 4, 1), 1),
        ((1, 1, 4, 1), (3, 1, 4, 1), 1),
        ((3, 1, 4, 1), (1, 1, 3, 1), 1),
    }


def test_seam_vertices_carry_both_provenances():
    glued = glue(square(), 3)
    owners = {lab: [t for t, _ in prov] for lab, prov in glued.provenance.items()}
    assert owners[(1, 1, 3, 2)] == [0, 1]
    assert owners[(1, 1, 2, 2)] == [0]
    assert owners[(1, 1, 3, 1, 4, 1)] == [1]


def test_inconsistent_seam_arrows_are_identified_not_doubled():
    quiver = glue(DiskTriangulation(4, [(1, 2, 3), (1, 4, 3)]), 3).quiver
    u = quiver.id_of((1, 1, 3, 2))
    v = quiver.id_of((1, 2, 3, 1))
    assert quiver.adj[u][v] == 1
    assert quiver.adj[v][u] == -1


def test_glued_quivers_have_full_rank():
    for m in (3, 4, 5):
        for tri in all_triangulations(m):
            for l in (2, 3):
                quiver = glue(tri, l).quiver
                assert quiver.b_rank() == len(quiver.mutable_ids())
    for tri in (
        DiskTriangulation(4, [(1, 2, 3), (1, 4, 3)]),
        DiskTriangulation(4, [(1, 3, 2), (1, 3, 4)]),
    ):
        quiver = glue(tri, 4).quiver
        assert quiver.b_rank() == len(quiver.mutable_ids())


def test_glued_json_carries_geometry():
    glued = glue(square(), 2)
    obj = glued.to_json_obj()
    assert obj["m"] == 4 and obj["l"] == 2
    assert obj["triangulation"]["triangles"] == [[1, 2, 3], [1, 3, 4]]
    seam = next(v for v in obj["vertices"] if v["weights"] == [1, 1, 3, 1])
    assert len(seam["provenance"]) == 2
    assert seam["xy"] == pytest.approx([0.0, 0.0])


def test_flip_replaces_the_diagonal():
    flipped = flip(square(), (1, 3))
    assert flipped == DiskTriangulation(4, [(2, 3, 4), (1, 2, 4)])
    assert flip(flipped, (2, 4)) == square()


def test_flip_rejects_bad_edges():
    with pytest.raises(NotADiagonal):
        flip(square(), (1, 2))
    with pytest.raises(FlipUndefined):
        flip(DiskTriangulation(4, [(1, 2, 3), (1, 4, 3)]), (1, 3))


def test_flip_orbit_of_the_pentagon():
    start = all_triangulations(5)[0]
    seen = {start}
    frontier = [start]
    while frontier:
        tri = frontier.pop()
        for d in tri.diagonals():
            new = flip(tri, d)
            if new not in seen:
                seen.add(new)
                frontier.append(new)
    assert len(seen) == 5
    assert seen == set(all_triangulations(5))
    assert all(t.is_consistent() for t in seen)


def test_flip_layers_grow_outward_from_the_seam():
    layers = flip_layers(square(), (1, 3), 3)
    assert [sorted(layer) for layer in layers] == [
        [(1, 1, 3, 2), (1, 2, 3, 1)],
        [(1, 1, 2, 1, 3, 1), (1, 1, 3, 1, 4, 1)],
    ]


def test_flip_verification_on_the_square():
    for l in (2, 3, 4):
        assert flip_verify(square(), (1, 3), l)


def test_flip_verification_in_a_larger_disk():
    tri = DiskTriangulation(5, [(1, 2, 3), (1, 3, 4), (1, 4, 5)])
    for d in tri.diagonals():
        assert flip_verify(tri, d, 3)


def test_flip_commutes_within_rectangle_layers():
    tri = square()
    layers = flip_layers(tri, (1, 3), 3)
    transport = flip_transport(tri, (1, 3), 3)
    target = glue(flip(tri, (1, 3)), 3).quiver
    glued = glue(tri, 3).quiver
    for perm in itertools.product(
        *[itertools.permutations(layer) for layer in layers]
    ):
        seq = [lab for layer in perm for lab in layer]
        image = glued.mutate_labels(seq).relabeled(
            lambda lab: transport.get(lab, lab)
        )
        assert b_equivalent(image, target)


def test_twist_reverses_one_triple():
    tri = square()
    twisted = twist(tri, 1, (1, 3))
    assert twisted.triangles == ((1, 2, 3), (1, 4, 3))
    assert not twisted.is_consistent()
    assert twist(twisted, 1, (1, 4)) == tri


def test_twist_rejects_bad_choices():
    with pytest.raises(InvalidChoice):
        twist(square(), 2, (1, 3))
    with pytest.raises(InvalidChoice):
        twist(square(), 0, (1, 4))


def test_twist_layer_fixture():
    assert twist_layers(5, edge=1) == [
        [(3, 1, 1), (2, 2, 1), (2, 1, 2), (1, 3, 1), (1, 2, 2), (1, 1, 3)],
        [(3, 1, 1), (2, 2, 1), (2, 1, 2)],
        [(3, 1, 1)],
    ]
    assert twist_sequence(2) == []
    with pytest.raises(SizeTooSmall):
        twist_layers(1)
    with pytest.raises(InvalidChoice):
        twist_layers(3, edge=4)


def test_hive_twist_lands_on_the_plain_hive():
    for l in (3, 4, 5):
        hive = build_hive(l).quiver
        for edge in (1, 2, 3):
            image = hive.mutate_labels(twist_sequence(l, edge)).relabeled(
                twist_hive_map(edge)
            )
            assert b_equivalent(image, hive)


def test_hive_twist_ties_commute():
    rng = random.Random(7)
    hive = build_hive(4).quiver
    for edge in (1, 2, 3):
        reference = hive.mutate_labels(twist_sequence(4, edge))
        for _ in range(5):
            seq = []
            for layer in twist_layers(4, edge):
                for _, group in itertools.groupby(
                    layer, key=lambda v: v[edge - 1]
                ):
                    tied = list(group)
                    rng.shuffle(tied)
                    seq.extend(tied)
            assert b_equivalent(hive.mutate_labels(seq), reference)


def test_twist_verification_on_a_single_triangle():
    tri = DiskTriangulation(3, [(1, 2, 3)])
    for l in (2, 3, 4):
        for e in ((1, 2), (2, 3), (1, 3)):
            assert twist_verify(tri, 0, e, l)


def test_twist_verification_across_a_seam():
    tri = square()
    for l in (2, 3, 4):
        for t_index in (0, 1):
            assert twist_verify(tri, t_index, (1, 3), l)
    pent = DiskTriangulation(5, [(1, 2, 3), (1, 3, 4), (1, 4, 5)])
    assert twist_verify(pent, 0, (1, 3), 3)
    assert twist_verify(pent, 2, (1, 4), 3)


def test_twist_verification_needs_boundary_cut_edges():
    pent = DiskTriangulation(5, [(1, 2, 3), (1, 3, 4), (1, 4, 5)])
    with pytest.raises(InvalidChoice):
        twist_verify(pent, 1, (1, 3), 3)


def test_glued_twist_sequence_only_visits_the_chosen_triangle():
    tri = square()
    seq = glued_twist_sequence(tri, 1, (1, 3), 4)
    glued = glue(tri, 4)
    for lab in seq:
        owners = [t for t, _ in glued.provenance[lab]]
        assert owners == [1]
    transport = twist_transport(tri, 1, (1, 3), 4)
    for src, dst in transport.items():
        assert src[::2] in ((1, 4), (3, 4))
        assert dst[::2] in ((1, 4), (3, 4))
        assert src[::2] != dst[::2]
