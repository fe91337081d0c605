"""Vertex optimization by mutation search, and the deletion pipeline.

A vertex is *optimized* by a sequence of mutations away from it that turns
it into a sink or a source.  The search is breadth-first over mutation
sequences, so returned sequences have minimal length among the witnesses
the search can see; ties break toward the lexicographically smallest label
sequence.  Results are deterministic.

The deletion pipeline starts from the glued quiver of the alternating
triangulation with every frozen vertex removed except the ones on the
edge {1, 2}, then repeatedly optimizes a vertex, deletes it, and applies
the reverse sequence.  Each accepted step keeps the B-matrix at full rank
and restores every remaining arrow, so the terminal quiver is forced to
be the hive with two boundary edges stripped.
"""

import logging
from collections import deque

from .errors import (
    ClassTooLarge,
    FrozenVertexMutation,
    StepFailed,
    UnknownVertex,
)
from .hive import build_hive, drop_edges
from .quiver import IceQuiver, b_equivalent
from .surface import _weight_label, alternating_triangulation, glue

logger = logging.getLogger(__name__)

_PIN_WEIGHT = 7


def _mutate_rows(rows, frozen, k):
    """Net-matrix mutation at k on a tuple-of-tuples adjacency."""
    n = len(rows)
    rk = rows[k]
    out = []
    for v in range(n):
        rv = rows[v]
        if v == k:
            out.append(tuple(-x for x in rv))
            continue
        bvk = rv[k]
        row = list(rv)
        row[k] = -bvk
        if bvk:
            fv = frozen[v]
            for w in range(n):
                if w == k or (fv and frozen[w]):
                    continue
                prod = bvk * rk[w]
                if prod > 0:
                    row[w] += prod if bvk > 0 else -prod
        out.append(tuple(row))
    return tuple(out)


def _optimized(rows, eid, others):
    row = rows[eid]
    return all(row[w] <= 0 for w in others) or all(row[w] >= 0 for w in others)


def _pinned_key(rows, frozen, eid):
    """Visited-set key: canonical form with eid marked by a pinned arrow.

    Falls back to the exact adjacency tuple when the canonical search hits
    its permutation budget; that only loses merging, never correctness.
    """
    n = len(rows)
    adj = [list(r) + [0] for r in rows]
    pin = [0] * (n + 1)
    pin[eid] = -_PIN_WEIGHT
    adj[eid][n] = _PIN_WEIGHT
    adj.append(pin)
    marked = IceQuiver(tuple(range(n + 1)), tuple(frozen) + (True,), adj)
    try:
        return ("iso",) + marked.canonical_key()
    except ClassTooLarge:
        return ("exact", rows)


def _search_sequences(quiver, eid, max_depth, prune):
    """Yield id sequences (shortest first, then lex) optimizing eid.

    Mutations never happen at eid.  ``prune`` selects the visited-set key:
    "iso" merges states isomorphic as quivers-with-eid-marked, "exact"
    merges only identical adjacency data.
    """
    rows = tuple(tuple(r) for r in quiver.adj)
    frozen = tuple(quiver.frozen)
    others = (
        range(quiver.q) if not frozen[eid] else tuple(quiver.mutable_ids())
    )
    if _optimized(rows, eid, others):
        yield []
        return
    order = sorted(
        (u for u in quiver.mutable_ids() if u != eid),
        key=lambda u: quiver.labels[u],
    )

    def key(state):
        if prune == "iso":
            return _pinned_key(state, frozen, eid)
        return state

    seen = {key(rows)}
    frontier = deque([(rows, [])])
    while frontier:
        state, seq = frontier.popleft()
        if len(seq) >= max_depth:
            continue
        for u in order:
            child = _mutate_rows(state, frozen, u)
            marker = key(child)
            if marker in seen:
                continue
            seen.add(marker)
            cseq = seq + [u]
            if _optimized(child, eid, others):
                yield cseq
            frontier.append((child, cseq))


def optimize_vertex(quiver, e, max_depth=6, witnesses=()):
    """Shortest mutation sequence away from ``e`` making it a sink or source.

    ``e`` and the returned sequence are vertex labels.  Sequences supplied
    in ``witnesses`` are tried first, in order, and the first one that
    works is returned as-is; breadth-first search is the fallback.  Returns
    None when no sequence within ``max_depth`` is found (the failure is
    logged, since absence of a witness is evidence, not proof).
    """
    eid = quiver.id_of(e)
    if quiver.is_sink(eid) or quiver.is_source(eid):
        return []
    for witness in witnesses:
        seq = list(witness)
        if e in seq:
            continue
        try:
            image = quiver.mutate_labels(seq)
        except (UnknownVertex, FrozenVertexMutation):
            continue
        wid = image.id_of(e)
        if image.is_sink(wid) or image.is_source(wid):
            return seq
    for ids in _search_sequences(quiver, eid, max_depth, prune="iso"):
        return [quiver.labels[u] for u in ids]
    logger.info(
        "no optimizing sequence for %r within depth %d", e, max_depth
    )
    return None


class PipelineStep:
    """One accepted deletion: the vertex, its sequence, and rank status."""

    def __init__(self, vertex, sequence, mode, full_rank):
        self.vertex = vertex
        self.sequence = tuple(sequence)
        self.mode = mode
        self.full_rank = full_rank

    def to_json_obj(self):
        return {
            "vertex": list(self.vertex),
            "sequence": [list(lab) for lab in self.sequence],
            "mode": self.mode,
            "full_rank": self.full_rank,
        }

    def __repr__(self):
        return "PipelineStep(%r, %r, %r, %r)" % (
            self.vertex, self.sequence, self.mode, self.full_rank,
        )


class PipelineReport:
    """Full record of a deletion pipeline run."""

    def __init__(self, m, l, start_full_rank, steps, terminal,
                 terminal_matches):
        self.m = m
        self.l = l
        self.start_full_rank = start_full_rank
        self.steps = tuple(steps)
        self.terminal = terminal
        self.terminal_matches = terminal_matches

    def to_json_obj(self):
        return {
            "m": self.m,
            "l": self.l,
            "start_full_rank": self.start_full_rank,
            "steps": [step.to_json_obj() for step in self.steps],
            "terminal": self.terminal.to_json_obj(),
            "terminal_matches": self.terminal_matches,
        }


def _full_rank(quiver):
    return quiver.b_rank() == len(quiver.mutable_ids())


def _restoring_step(quiver, v, max_depth):
    """First sequence optimizing v whose delete-and-reverse restores the rest.

    Returns (sequence of labels, "sink" or "source") or None.  All
    restoring sequences lead to the same next state, the current quiver
    minus v, so which one is found only affects the report.
    """
    vid = quiver.id_of(v)
    target = quiver.delete_vertices([vid])
    for ids in _search_sequences(quiver, vid, max_depth, prune="exact"):
        seq = [quiver.labels[u] for u in ids]
        image = quiver.mutate_labels(seq)
        iid = image.id_of(v)
        mode = "sink" if image.is_sink(iid) else "source"
        back = image.delete_vertices([iid]).mutate_labels(seq[::-1])
        if back == target:
            return seq, mode
    return None


def disk_pipeline(m, l, max_depth=6):
    """Delete the glued quiver down to the stripped hive, step by step.

    Starts from the alternating triangulation of the m-gon glued at level
    l, with all frozen vertices removed except those on the edge {1, 2}.
    Each step optimizes one vertex, checks that deleting it keeps the
    B-matrix at full rank and restores all remaining arrows, then commits.
    The order is found by search and recorded in the report; it is
    deterministic.  Raises StepFailed when no order completes.

    Intended scale is m <= 6, l <= 4; larger inputs work but the search
    grows quickly.
    """
    tri = alternating_triangulation(m)
    glued = glue(tri, l)
    quiver = glued.quiver
    keep = frozenset((1, 2))
    quiver = quiver.delete_vertices(
        [u for u in quiver.frozen_ids()
         if frozenset(quiver.labels[u][::2]) != keep]
    )
    window = next(t for t in tri.triangles if keep <= set(t))
    survivors = {
        lab for lab in quiver.labels
        if set(lab[::2]) <= set(window)
        and (len(lab) == 6 or set(lab[::2]) == keep)
    }
    expected = drop_edges(build_hive(l), (1, 2))
    expected = expected.relabeled(
        {lab: _weight_label(window, lab) for lab in expected.labels}
    )
    start_full_rank = _full_rank(quiver)

    steps = []
    dead = set()
    step_cache = {}
    deepest = [0, frozenset(quiver.labels) - survivors]

    def attempt(current, v):
        marker = (frozenset(current.labels), v)
        if marker not in step_cache:
            step_cache[marker] = _restoring_step(current, v, max_depth)
        return step_cache[marker]

    def search(current):
        remaining = frozenset(current.labels) - survivors
        if not remaining:
            return True
        if remaining in dead:
            return False
        if len(steps) > deepest[0]:
            deepest[0], deepest[1] = len(steps), remaining
        for v in sorted(remaining):
            target = current.delete_vertices([current.id_of(v)])
            full_rank = _full_rank(target)
            if not full_rank:
                continue
            hit = attempt(current, v)
            if hit is None:
                continue
            sequence, mode = hit
            steps.append(PipelineStep(v, sequence, mode, full_rank))
            if search(target):
                return True
            steps.pop()
        dead.add(remaining)
        return False

    if not search(quiver):
        raise StepFailed(
            "no full-rank deletion continues past step %d of m=%d, l=%d; "
            "stuck on %s" % (deepest[0], m, l, sorted(deepest[1]))
        )
    terminal = quiver.delete_vertices(
        [quiver.id_of(step.vertex) for step in steps]
    )
    matches = b_equivalent(terminal, expected)
    return PipelineReport(m, l, start_full_rank, steps, terminal, matches)
