import random
from collections import Counter

import pytest

from icehive import (
    ClassTooLarge,
    FrozenVertexMutation,
    IceQuiver,
    UnknownVertex,
    b_equivalent,
    iso_classes,
    mutation_class,
)


def make_quiver(arrows, q=None, frozen=()):
    """Small helper: integer-labeled quiver from arrow pairs/triples."""
    if q is None:
        q = 1 + max(max(a[0], a[1]) for a in arrows) if arrows else 1
    return IceQuiver.from_arrows(range(q), frozen, arrows)


def random_ice_quiver(rng, q, max_mult=2):
    adj = [[0] * q for _ in range(q)]
    for u in range(q):
        for v in range(u + 1, q):
            m = rng.randint(-max_mult, max_mult)
            adj[u][v] = m
            adj[v][u] = -m
    frozen = [rng.random() < 0.3 for _ in range(q)]
    if all(frozen):
        frozen[rng.randrange(q)] = False
    return IceQuiver(range(q), frozen, adj)


# --- reference implementation: the 3-step arrow procedure -------------------
# Used as an independent oracle against the net-matrix formula.

def mutate_arrow_procedure(quiver, u):
    arrows = Counter()
    for a in range(quiver.q):
        for b in range(quiver.q):
            if quiver.adj[a][b] > 0:
                arrows[(a, b)] = quiver.adj[a][b]
    added = Counter()
    for (v, a), m1 in arrows.items():
        if a != u:
            continue
        for (b, w), m2 in arrows.items():
            if b != u:
                continue
            if quiver.frozen[v] and quiver.frozen[w]:
                continue
            added[(v, w)] += m1 * m2
    out = Counter()
    for (a, b), m in arrows.items():
        out[(b, a) if u in (a, b) else (a, b)] += m
    out.update(added)
    adj = [[0] * quiver.q for _ in range(quiver.q)]
    for (a, b), m in out.items():
        adj[a][b] += m
        adj[b][a] -= m
    return IceQuiver(quiver.labels, quiver.frozen, adj)


def test_mutate_path_at_middle():
    # 1->2->3 all mutable, mutate the middle: arrows reverse and 1->3 appears
    quiver = make_quiver([(0, 1), (1, 2)])
    image = quiver.mutate(1)
    assert image == make_quiver([(1, 0), (2, 1), (0, 2)])


def test_mutate_kronecker_source():
    quiver = make_quiver([(0, 1, 2)])
    assert quiver.mutate(0) == make_quiver([(1, 0, 2)])


def test_mutate_b_sign_flip():
    quiver = make_quiver([(0, 1)])
    assert quiver.mutate(0).b_matrix() == [[0, -1], [1, 0]]


def test_mutate_frozen_raises():
    quiver = make_quiver([(0, 1)], frozen=[1])
    with pytest.raises(FrozenVertexMutation):
        quiver.mutate(1)


def test_frozen_frozen_pair_gets_no_composite_arrow():
    # v -> u -> w with v, w frozen: only the reversal happens
    quiver = make_quiver([(0, 1), (1, 2)], frozen=[0, 2])
    image = quiver.mutate(1)
    assert image == IceQuiver(range(3), [True, False, True],
                              [[0, -1, 0], [1, 0, -1], [0, 1, 0]])
    # and with w mutable the composite does appear
    quiver2 = make_quiver([(0, 1), (1, 2)], frozen=[0])
    assert quiver2.mutate(1).arrow(0, 2) == 1


def test_mutation_matches_arrow_procedure():
    rng = random.Random(7)
    for _ in range(150):
        quiver = random_ice_quiver(rng, rng.randint(2, 7))
        mutable = quiver.mutable_ids()
        u = rng.choice(mutable)
        assert quiver.mutate(u) == mutate_arrow_procedure(quiver, u)


def test_involution_and_rank_preserved():
    rng = random.Random(11)
    for _ in range(60):
        quiver = random_ice_quiver(rng, rng.randint(2, 8))
        rank = quiver.b_rank()
        for u in quiver.mutable_ids():
            assert quiver.mutate(u).mutate(u) == quiver
        current = quiver
        for _ in range(12):
            u = rng.choice(current.mutable_ids())
            current = current.mutate(u)
            assert current.b_rank() == rank


def test_mutate_seq_and_identity():
    quiver = make_quiver([(0, 1), (1, 2)])
    assert quiver.mutate_seq([]) == quiver
    assert quiver.mutate_seq([0, 0]) == quiver
    assert quiver.mutate_seq([0, 1]) == quiver.mutate(0).mutate(1)


def test_a2_pentagon_on_quivers():
    quiver = make_quiver([(0, 1)])
    image = quiver.mutate_seq([0, 1, 0, 1, 0])
    # vertices swapped: 1->0
    assert image == make_quiver([(1, 0)])


def test_b_rank_simple():
    assert make_quiver([(0, 1)], frozen=[1]).b_rank() == 1
    # 4-cycle has rank 2
    cyc = make_quiver([(0, 1), (1, 2), (2, 3), (3, 0)])
    assert cyc.b_rank() == 2


def test_b_rank_matches_fraction_gauss():
    from fractions import Fraction

    def gauss_rank(rows):
        m = [[Fraction(x) for x in r] for r in rows]
        rank = 0
        for col in range(len(m[0]) if m else 0):
            piv = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
            if piv is None:
                continue
            m[rank], m[piv] = m[piv], m[rank]
            for r in range(len(m)):
                if r != rank and m[r][col] != 0:
                    f = m[r][col] / m[rank][col]
                    m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
            rank += 1
        return rank

    rng = random.Random(3)
    for _ in range(40):
        quiver = random_ice_quiver(rng, rng.randint(2, 7), max_mult=3)
        assert quiver.b_rank() == gauss_rank(quiver.b_matrix())


def test_submatrix_rank():
    quiver = make_quiver([(0, 1), (1, 2)])
    assert quiver.submatrix_rank([], [0, 1]) == 0
    assert quiver.submatrix_rank([0, 1, 2], [0, 1, 2]) == quiver.b_rank()
    with pytest.raises(UnknownVertex):
        quiver.submatrix_rank([5], [0])


def test_freeze_delete_sink_source():
    quiver = make_quiver([(0, 1)])
    frozen = quiver.freeze([1])
    assert frozen.adj == quiver.adj and frozen.frozen == (False, True)
    assert frozen.b_matrix() == [[0, 1]]

    path = make_quiver([(0, 1), (1, 2)])
    cut = path.delete_vertices([1])
    assert cut.q == 2 and all(all(x == 0 for x in row) for row in cut.adj)

    assert path.is_sink(2) and not path.is_sink(1)
    assert path.is_source(0) and not path.is_source(1)
    # frozen-frozen arrows are invisible to sink/source
    pair = make_quiver([(0, 1), (2, 0)], frozen=[0, 1])
    assert pair.is_sink(0)  # 0->1 is frozen-frozen; only 2->0 counts
    assert not pair.is_source(0)


def test_iso_classes_a2_a3():
    a2 = make_quiver([(0, 1)])
    _, reps = iso_classes([a2, make_quiver([(1, 0)])])
    assert len(reps) == 1
    assert len(mutation_class(a2)) == 1

    a3 = make_quiver([(0, 1), (1, 2)])
    classes = mutation_class(a3)
    assert len(classes) == 4
    arrow_counts = sorted(sum(1 for u in range(3) for v in range(3)
                              if c.adj[u][v] > 0) for c in classes)
    # linear, middle-sink, middle-source (2 arrows each) and the 3-cycle
    assert arrow_counts == [2, 2, 2, 3]


def test_iso_respects_frozen_flags():
    plain = make_quiver([(0, 1)])
    iced = make_quiver([(0, 1)], frozen=[1])
    assert not plain.is_isomorphic(iced)
    relabeled = IceQuiver(["a", "b"], [False, False], [[0, 1], [-1, 0]])
    assert plain.is_isomorphic(relabeled)


def test_mutation_class_size_guard():
    # rank-2 wild quiver 1=>2<=3 style grows without bound
    wild = make_quiver([(0, 1, 2), (1, 2, 2)])
    with pytest.raises(ClassTooLarge):
        mutation_class(wild, max_size=10)


def test_json_round_trip_bit_exact():
    rng = random.Random(23)
    for _ in range(25):
        quiver = random_ice_quiver(rng, rng.randint(1, 7))
        text = quiver.to_json()
        again = IceQuiver.from_json(text)
        assert again == quiver
        assert again.to_json() == text
    hive_like = IceQuiver([(1, 1, 3), (3, 1, 1)], [False, True], [[0, 2], [-2, 0]])
    assert IceQuiver.from_json(hive_like.to_json()) == hive_like


def test_b_equivalent_ignores_frozen_frozen():
    q1 = make_quiver([(0, 1), (1, 2), (0, 2)], frozen=[0, 2])
    q2 = make_quiver([(0, 1), (1, 2), (2, 0)], frozen=[0, 2])
    assert b_equivalent(q1, q2)      # differ only on the frozen pair (0,2)
    q3 = make_quiver([(1, 0), (1, 2), (0, 2)], frozen=[0, 2])
    assert not b_equivalent(q1, q3)  # differ on a mutable-incident arrow


def test_dot_export_mentions_all_vertices():
    quiver = make_quiver([(0, 1, 2)], frozen=[1])
    dot = quiver.to_dot()
    assert "box" in dot and "ellipse" in dot and '[label="2"]' in dot
