"""Ice quivers: net arrow matrices, mutation, ranks, isomorphism, serialization.

An ice quiver is stored as a skew-symmetric integer matrix of net arrow
multiplicities together with per-vertex frozen flags and labels.  Arrows
between two frozen vertices are kept in the matrix (gluing and twisting
need them) but are never part of the B-matrix, never affect sink/source
tests, and are never touched by mutation.
"""

from __future__ import annotations

import json
import re
from itertools import permutations

from .errors import ClassTooLarge, FrozenVertexMutation, UnknownVertex
from .linalg import bareiss_rank

_TUPLE_LABEL = re.compile(r"^\((-?\d+)(,(-?\d+))*\)$")

# cap on the number of permutations canonical_key may enumerate
_PERM_BUDGET = 500_000


def _label_to_json(label):
    if isinstance(label, tuple):
        return "(" + ",".join(str(int(x)) for x in label) + ")"
    if isinstance(label, (int, str)):
        return label
    return str(label)


def _label_from_json(raw):
    if isinstance(raw, str) and _TUPLE_LABEL.match(raw):
        return tuple(int(x) for x in raw[1:-1].split(","))
    return raw


class IceQuiver:
    """Immutable ice quiver on dense vertex ids 0..q-1."""

    __slots__ = ("labels", "frozen", "adj", "_id_of")

    def __init__(self, labels, frozen, adj):
        labels = tuple(labels)
        frozen = tuple(bool(f) for f in frozen)
        adj = tuple(tuple(int(x) for x in row) for row in adj)
        q = len(labels)
        if len(frozen) != q or len(adj) != q or any(len(r) != q for r in adj):
            raise ValueError("inconsistent quiver data sizes")
        if len(set(labels)) != q:
            raise ValueError("labels must be unique")
        for u in range(q):
            if adj[u][u] != 0:
                raise ValueError("loop at vertex %d" % u)
            for v in range(u):
                if adj[u][v] != -adj[v][u]:
                    raise ValueError("adjacency not skew-symmetric at (%d,%d)" % (u, v))
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "frozen", frozen)
        object.__setattr__(self, "adj", adj)
        object.__setattr__(self, "_id_of", {lab: i for i, lab in enumerate(labels)})

    def __setattr__(self, name, value):
        raise AttributeError("IceQuiver is immutable")

    # -- construction ------------------------------------------------------

    @classmethod
    def from_arrows(cls, labels, frozen_labels, arrows):
        """Build from labels, a collection of frozen labels, and (src, dst[, mult]) arrows."""
        labels = list(labels)
        index = {lab: i for i, lab in enumerate(labels)}
        frozen = [False] * len(labels)
        for lab in frozen_labels:
            if lab not in index:
                raise UnknownVertex(repr(lab))
            frozen[index[lab]] = True
        adj = [[0] * len(labels) for _ in labels]
        for arrow in arrows:
            if len(arrow) == 2:
                src, dst, mult = arrow[0], arrow[1], 1
            else:
                src, dst, mult = arrow
            if src not in index or dst not in index:
                raise UnknownVertex(repr((src, dst)))
            i, j = index[src], index[dst]
            adj[i][j] += int(mult)
            adj[j][i] -= int(mult)
        return cls(labels, frozen, adj)

    # -- basic queries -----------------------------------------------------

    @property
    def q(self):
        return len(self.labels)

    def id_of(self, label):
        try:
            return self._id_of[label]
        except KeyError:
            raise UnknownVertex(repr(label)) from None

    def mutable_ids(self):
        return [v for v in range(self.q) if not self.frozen[v]]

    def frozen_ids(self):
        return [v for v in range(self.q) if self.frozen[v]]

    def check_vertex(self, v):
        if not (0 <= v < self.q):
            raise UnknownVertex(str(v))

    def arrow(self, u, v):
        """Net multiplicity of arrows u -> v (negative means v -> u)."""
        self.check_vertex(u)
        self.check_vertex(v)
        return self.adj[u][v]

    def b_matrix(self):
        """Rows of the B-matrix (one per mutable vertex, all q columns)."""
        return [list(self.adj[u]) for u in self.mutable_ids()]

    def b_rank(self):
        return bareiss_rank(self.b_matrix())

    def submatrix_rank(self, rows, cols):
        """Rank of the adjacency submatrix with the given row/column vertices."""
        rows = list(rows)
        cols = list(cols)
        for v in rows + cols:
            self.check_vertex(v)
        if not rows or not cols:
            return 0
        return bareiss_rank([[self.adj[r][c] for c in cols] for r in rows])

    def is_sink(self, v):
        """No outgoing arrows at B-matrix level (frozen-frozen arrows ignored)."""
        self.check_vertex(v)
        others = range(self.q) if not self.frozen[v] else self.mutable_ids()
        return all(self.adj[v][w] <= 0 for w in others)

    def is_source(self, v):
        self.check_vertex(v)
        others = range(self.q) if not self.frozen[v] else self.mutable_ids()
        return all(self.adj[v][w] >= 0 for w in others)

    # -- mutation ----------------------------------------------------------

    def mutate(self, u):
        """Quiver mutation at the mutable vertex u.

        Net-matrix form: a'[v][w] = a[v][w] + sign(a[v][u]) * max(a[v][u]*a[u][w], 0)
        for v, w != u unless v and w are both frozen; then the row and column
        of u change sign.
        """
        self.check_vertex(u)
        if self.frozen[u]:
            raise FrozenVertexMutation("vertex %d (%r) is frozen" % (u, self.labels[u]))
        a = self.adj
        q = self.q
        new = [[0] * q for _ in range(q)]
        for v in range(q):
            for w in range(q):
                if v == u or w == u:
                    new[v][w] = -a[v][w]
                elif self.frozen[v] and self.frozen[w]:
                    new[v][w] = a[v][w]
                else:
                    prod = a[v][u] * a[u][w]
                    if prod > 0:
                        sign = 1 if a[v][u] > 0 else -1
                        new[v][w] = a[v][w] + sign * prod
                    else:
                        new[v][w] = a[v][w]
        return IceQuiver(self.labels, self.frozen, new)

    def mutate_seq(self, us):
        """Left-to-right composition: mutate_seq(Q, [a, b]) mutates at a, then b."""
        quiver = self
        for u in us:
            quiver = quiver.mutate(u)
        return quiver

    def mutate_labels(self, labels):
        return self.mutate_seq([self.id_of(lab) for lab in labels])

    # -- structural edits ----------------------------------------------------

    def freeze(self, vertices):
        frozen = list(self.frozen)
        for v in vertices:
            self.check_vertex(v)
            frozen[v] = True
        return IceQuiver(self.labels, frozen, self.adj)

    def unfreeze(self, vertices):
        frozen = list(self.frozen)
        for v in vertices:
            self.check_vertex(v)
            frozen[v] = False
        return IceQuiver(self.labels, frozen, self.adj)

    def delete_vertices(self, vertices):
        doomed = set(vertices)
        for v in doomed:
            self.check_vertex(v)
        keep = [v for v in range(self.q) if v not in doomed]
        labels = [self.labels[v] for v in keep]
        frozen = [self.frozen[v] for v in keep]
        adj = [[self.adj[r][c] for c in keep] for r in keep]
        return IceQuiver(labels, frozen, adj)

    def relabeled(self, mapping):
        """Apply a label -> label map (callable or dict); ids unchanged."""
        if callable(mapping):
            labels = [mapping(lab) for lab in self.labels]
        else:
            labels = [mapping.get(lab, lab) for lab in self.labels]
        return IceQuiver(labels, self.frozen, self.adj)

    # -- comparison ----------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, IceQuiver):
            return NotImplemented
        return (self.labels == other.labels and self.frozen == other.frozen
                and self.adj == other.adj)

    def __hash__(self):
        return hash((self.labels, self.frozen, self.adj))

    def __repr__(self):
        return "IceQuiver(q=%d, mutable=%d)" % (self.q, len(self.mutable_ids()))

    # -- isomorphism -----------------------------------------------------------

    def _refined_colors(self):
        """Iterated degree refinement; returns per-vertex invariant color ids."""
        a = self.adj
        q = self.q
        colors = []
        for v in range(q):
            outs = tuple(sorted(m for m in a[v] if m > 0))
            ins = tuple(sorted(-m for m in a[v] if m < 0))
            colors.append((self.frozen[v], outs, ins))
        palette = {c: i for i, c in enumerate(sorted(set(colors)))}
        colors = [palette[c] for c in colors]
        while True:
            new = []
            for v in range(q):
                nbrs = tuple(sorted((a[v][w], colors[w]) for w in range(q) if a[v][w] != 0))
                new.append((colors[v], nbrs))
            palette = {c: i for i, c in enumerate(sorted(set(new)))}
            new = [palette[c] for c in new]
            if new == colors:
                return colors
            colors = new

    def canonical_key(self):
        """Label-forgetting canonical form preserving frozen flags.

        Minimizes the adjacency tuple over all vertex orderings compatible
        with the refined color classes; a budget guard raises ClassTooLarge
        for pathologically symmetric inputs.
        """
        q = self.q
        colors = self._refined_colors()
        # order color classes by (frozen, color); within a class try all orders
        blocks = {}
        for v in range(q):
            blocks.setdefault((self.frozen[v], colors[v]), []).append(v)
        keys = sorted(blocks)
        total = 1
        for key in keys:
            size = len(blocks[key])
            for i in range(2, size + 1):
                total *= i
            if total > _PERM_BUDGET:
                raise ClassTooLarge("canonical form over %d permutations" % total)
        frozen_profile = tuple(k[0] for k in keys for _ in blocks[k])
        best = None
        stack = [[]]
        for key in keys:
            stack = [pre + list(p) for pre in stack for p in permutations(blocks[key])]
        for order in stack:
            flat = tuple(self.adj[u][v] for u in order for v in order)
            if best is None or flat < best:
                best = flat
        return (frozen_profile, best)

    def is_isomorphic(self, other):
        return self.canonical_key() == other.canonical_key()

    # -- serialization -----------------------------------------------------------

    def to_json_obj(self):
        vertices = [{"id": v, "label": _label_to_json(self.labels[v]),
                     "frozen": self.frozen[v]} for v in range(self.q)]
        arrows = []
        for u in range(self.q):
            for v in range(self.q):
                if self.adj[u][v] > 0:
                    arrows.append([u, v, self.adj[u][v]])
        arrows.sort()
        return {"vertices": vertices, "arrows": arrows}

    def to_json(self):
        return json.dumps(self.to_json_obj(), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_json_obj(cls, obj):
        vertices = sorted(obj["vertices"], key=lambda v: v["id"])
        if [v["id"] for v in vertices] != list(range(len(vertices))):
            raise ValueError("vertex ids must be dense 0..q-1")
        labels = [_label_from_json(v["label"]) for v in vertices]
        frozen = [bool(v["frozen"]) for v in vertices]
        adj = [[0] * len(labels) for _ in labels]
        for src, dst, mult in obj["arrows"]:
            adj[src][dst] += mult
            adj[dst][src] -= mult
        return cls(labels, frozen, adj)

    @classmethod
    def from_json(cls, text):
        return cls.from_json_obj(json.loads(text))

    def to_dot(self):
        lines = ["digraph quiver {"]
        for v in range(self.q):
            shape = "box" if self.frozen[v] else "ellipse"
            lines.append('  v%d [label="%s" shape=%s];'
                         % (v, _label_to_json(self.labels[v]), shape))
        for u in range(self.q):
            for v in range(self.q):
                if self.adj[u][v] > 0:
                    attr = ' [label="%d"]' % self.adj[u][v] if self.adj[u][v] > 1 else ""
                    lines.append("  v%d -> v%d%s;" % (u, v, attr))
        lines.append("}")
        return "\n".join(lines)


def b_equivalent(q1, q2):
    """Equality of two quivers at B-matrix level, matched by label.

    Same label set, same frozen flags, and identical net arrows on every
    pair that is not frozen-frozen.  Frozen-frozen arrows are immutable
    under mutation, so mutation-image comparisons must ignore them.
    """
    if set(q1.labels) != set(q2.labels):
        return False
    for lab in q1.labels:
        if q1.frozen[q1.id_of(lab)] != q2.frozen[q2.id_of(lab)]:
            return False
    for lu in q1.labels:
        u1, u2 = q1.id_of(lu), q2.id_of(lu)
        for lv in q1.labels:
            v1, v2 = q1.id_of(lv), q2.id_of(lv)
            if q1.frozen[u1] and q1.frozen[v1]:
                continue
            if q1.adj[u1][v1] != q2.adj[u2][v2]:
                return False
    return True


def iso_classes(quivers):
    """Group quivers by label-forgetting isomorphism; returns (mapping, reps)."""
    classes = []
    reps = []
    keys = []
    for i, quiver in enumerate(quivers):
        key = quiver.canonical_key()
        try:
            j = keys.index(key)
        except ValueError:
            keys.append(key)
            reps.append(quiver)
            classes.append([i])
        else:
            classes[j].append(i)
    return {cid: members for cid, members in enumerate(classes)}, reps


def mutation_class(quiver, max_size=1000):
    """BFS closure under mutation, deduplicated up to isomorphism.

    Returns one representative per class; raises ClassTooLarge when the
    class count would exceed max_size.
    """
    seen = {quiver.canonical_key(): quiver}
    frontier = [quiver]
    while frontier:
        next_frontier = []
        for current in frontier:
            for u in current.mutable_ids():
                image = current.mutate(u)
                key = image.canonical_key()
                if key not in seen:
                    if len(seen) >= max_size:
                        raise ClassTooLarge("mutation class exceeds %d" % max_size)
                    seen[key] = image
                    next_frontier.append(image)
        frontier = next_frontier
    return list(seen.values())
