"""Disk triangulations and the quivers glued from hives along them.

A triangulation of the marked disk is stored as oriented cyclic triples
over the boundary points 1..m.  Gluing builds one hive per triangle,
names every vertex by its nonzero weights at the marked points (so seam
vertices coincide automatically), takes the net union of all arrows and
unfreezes the seams.  Flips and twists act on the triangulation; each
comes with the mutation sequence realizing it on the glued quiver and a
verification routine comparing against an independent rebuild.
"""

import math
from collections import Counter

from .errors import (
    FlipUndefined,
    InvalidChoice,
    InvalidTriangulation,
    NotADiagonal,
    SizeTooSmall,
)
from .hive import build_hive
from .quiver import IceQuiver, b_equivalent


def _canonical_triple(triple):
    """Rotate a cyclic triple so the smallest point comes first."""
    shift = triple.index(min(triple))
    return tuple(triple[shift:] + triple[:shift])


def _orientation(triple):
    """+1 for counterclockwise triples of circle points, -1 otherwise."""
    _, second, third = _canonical_triple(triple)
    return 1 if second < third else -1


def _crossing(c1, c2):
    (a, b), (c, d) = sorted(c1), sorted(c2)
    inside1 = a < c < b
    inside2 = a < d < b
    if {a, b} & {c, d}:
        return False
    return inside1 != inside2


class DiskTriangulation:
    """An ideal triangulation of the disk with m marked boundary points."""

    def __init__(self, m, triangles):
        if m < 3:
            raise InvalidTriangulation("need at least 3 marked points")
        triples = []
        for raw in triangles:
            triple = tuple(raw)
            if len(triple) != 3 or len(set(triple)) != 3:
                raise InvalidTriangulation("bad triple %r" % (raw,))
            if any(p < 1 or p > m for p in triple):
                raise InvalidTriangulation("point out of range in %r" % (raw,))
            triples.append(_canonical_triple(triple))
        if len(triples) != m - 2:
            raise InvalidTriangulation(
                "expected %d triangles, got %d" % (m - 2, len(triples))
            )
        if len(set(frozenset(t) for t in triples)) != len(triples):
            raise InvalidTriangulation("repeated triangle")
        self.m = m
        self.triangles = tuple(triples)
        self._classify_edges()

    def _classify_edges(self):
        boundary = set(
            frozenset((p, p % self.m + 1)) for p in range(1, self.m + 1)
        )
        sides = {}
        for idx, triple in enumerate(self.triangles):
            for pos in range(3):
                pair = frozenset((triple[pos], triple[(pos + 1) % 3]))
                sides.setdefault(pair, []).append(idx)
        diagonals = {}
        for pair, owners in sides.items():
            if pair in boundary:
                if len(owners) != 1:
                    raise InvalidTriangulation(
                        "boundary edge %s used %d times"
                        % (sorted(pair), len(owners))
                    )
            else:
                if len(owners) != 2:
                    raise InvalidTriangulation(
                        "diagonal %s must bound exactly two triangles"
                        % (sorted(pair),)
                    )
                diagonals[tuple(sorted(pair))] = tuple(owners)
        if self.m == 3:
            expected = 0
        else:
            expected = self.m - 3
        if len(diagonals) != expected:
            raise InvalidTriangulation(
                "expected %d diagonals, got %d" % (expected, len(diagonals))
            )
        chords = list(diagonals)
        for i in range(len(chords)):
            for j in range(i + 1, len(chords)):
                if _crossing(chords[i], chords[j]):
                    raise InvalidTriangulation(
                        "diagonals %s and %s cross" % (chords[i], chords[j])
                    )
        self.boundary_pairs = boundary
        self._diagonals = diagonals

    def diagonals(self):
        return sorted(self._diagonals)

    def triangles_at(self, d):
        d = tuple(sorted(d))
        if d not in self._diagonals:
            raise NotADiagonal("%r is not a diagonal" % (d,))
        return self._diagonals[d]

    def orientation(self, index):
        return _orientation(self.triangles[index])

    def traverses(self, index, x, y):
        """Whether triangle `index` walks the edge x -> y in cyclic order."""
        t = self.triangles[index]
        return any(t[p] == x and t[(p + 1) % 3] == y for p in range(3))

    def seam_consistent(self, d):
        """A seam is consistent when its two sides traverse it oppositely."""
        x, y = tuple(sorted(d))
        one, two = self.triangles_at(d)
        return self.traverses(one, x, y) != self.traverses(two, x, y)

    def is_consistent(self):
        return all(self.seam_consistent(d) for d in self.diagonals())

    def __eq__(self, other):
        if not isinstance(other, DiskTriangulation):
            return NotImplemented
        return self.m == other.m and sorted(self.triangles) == sorted(
            other.triangles
        )

    def __hash__(self):
        return hash((self.m, tuple(sorted(self.triangles))))

    def __repr__(self):
        return "DiskTriangulation(m=%d, %r)" % (self.m, list(self.triangles))

    def to_json_obj(self):
        return {
            "m": self.m,
            "triangles": [list(t) for t in self.triangles],
            "orientations": [self.orientation(i) for i in range(len(self.triangles))],
        }

    @classmethod
    def from_json_obj(cls, obj):
        tri = cls(obj["m"], obj["triangles"])
        given = obj.get("orientations")
        if given is not None:
            derived = [tri.orientation(i) for i in range(len(tri.triangles))]
            if list(given) != derived:
                raise InvalidTriangulation(
                    "orientations %r do not match the triples" % (given,)
                )
        return tri


def alternating_triangulation(m):
    """The zigzag triangulation whose triangle orientations alternate."""
    if m < 3:
        raise InvalidTriangulation("need at least 3 marked points")
    order = [1]
    lo, hi = 2, m
    for turn in range(m - 1):
        if turn % 2 == 0:
            order.append(lo)
            lo += 1
        else:
            order.append(hi)
            hi -= 1
    triples = [tuple(order[i : i + 3]) for i in range(m - 2)]
    return DiskTriangulation(m, triples)


def _weight_label(triple, coords):
    """Name a hive vertex by its nonzero weights at the marked points."""
    pairs = sorted((p, w) for p, w in zip(triple, coords) if w > 0)
    return tuple(x for pair in pairs for x in pair)


def _label_weights(label):
    return {label[i]: label[i + 1] for i in range(0, len(label), 2)}


class GluedQuiver:
    """A quiver glued from hives, with provenance back to the triangles."""

    def __init__(self, quiver, triangulation, l, provenance):
        self.quiver = quiver
        self.triangulation = triangulation
        self.l = l
        self.provenance = provenance

    @property
    def m(self):
        return self.triangulation.m

    def xy(self, label):
        """Planar position: weight-barycenter of the marked points."""
        pts = {}
        for p in range(1, self.m + 1):
            angle = 2.0 * math.pi * (p - 1) / self.m
            pts[p] = (math.cos(angle), math.sin(angle))
        x = y = 0.0
        for p, w in _label_weights(label).items():
            x += w * pts[p][0]
            y += w * pts[p][1]
        return (x / self.l, y / self.l)

    def to_json_obj(self):
        obj = self.quiver.to_json_obj()
        obj["m"] = self.m
        obj["l"] = self.l
        obj["triangulation"] = self.triangulation.to_json_obj()
        for vertex in obj["vertices"]:
            lab = self.quiver.labels[vertex["id"]]
            vertex["weights"] = list(lab)
            vertex["xy"] = list(self.xy(lab))
            vertex["provenance"] = [
                [t_idx, list(coords)] for t_idx, coords in self.provenance[lab]
            ]
        return obj


def glue(tri, l):
    """Glue one hive of size l per triangle of tri along its seams.

    Each triangle contributes the hive built in its own cyclic
    coordinates; vertices are named by their weights at the marked
    points, so the two copies of a seam vertex collapse into one, which
    is then mutable.  Arrows are combined additively and opposite
    contributions cancel, which removes the seam-parallel arrows of
    consistently glued pairs.  When a seam is traversed the same way by
    both sides the two copies of each seam-parallel arrow are the same
    arrow and are identified rather than added.
    """
    if l < 2:
        raise SizeTooSmall("gluing needs hive size at least 2")
    base = build_hive(l).quiver
    diagonal_pairs = {frozenset(d) for d in tri.diagonals()}
    net = Counter()
    provenance = {}
    for t_idx, triple in enumerate(tri.triangles):
        names = {lab: _weight_label(triple, lab) for lab in base.labels}
        for lab in base.labels:
            provenance.setdefault(names[lab], []).append((t_idx, lab))
        for u in range(base.q):
            row = base.adj[u]
            for v in range(base.q):
                if row[v] <= 0:
                    continue
                pair = (names[base.labels[u]], names[base.labels[v]])
                if (
                    len(pair[0]) == 4
                    and pair[0][::2] == pair[1][::2]
                    and frozenset(pair[0][::2]) in diagonal_pairs
                ):
                    net[pair] = max(net[pair], row[v])
                else:
                    net[pair] += row[v]
    labels = sorted(provenance)
    frozen = [
        lab
        for lab in labels
        if len(lab) == 4 and frozenset((lab[0], lab[2])) in tri.boundary_pairs
    ]
    arrows = []
    seen = set()
    for u, v in net:
        key = (u, v) if u <= v else (v, u)
        if key in seen:
            continue
        seen.add(key)
        mult = net.get(key, 0) - net.get((key[1], key[0]), 0)
        if mult > 0:
            arrows.append((key[0], key[1], mult))
        elif mult < 0:
            arrows.append((key[1], key[0], -mult))
    quiver = IceQuiver.from_arrows(labels, frozen, arrows)
    return GluedQuiver(quiver, tri, l, provenance)


def _seam_frame(tri, d):
    """Corners (a, b, dd, c) of the quadrilateral around diagonal d.

    The seam runs b -> c as traversed by the first incident triangle;
    a is that triangle's third corner and dd the other triangle's.
    """
    x, y = tuple(sorted(d))
    one, two = tri.triangles_at(d)
    if not tri.seam_consistent(d):
        raise FlipUndefined(
            "seam %r is traversed twice in the same direction" % (d,)
        )
    if tri.traverses(one, x, y):
        b, c = x, y
    else:
        b, c = y, x
    a = next(p for p in tri.triangles[one] if p not in (b, c))
    dd = next(p for p in tri.triangles[two] if p not in (b, c))
    return a, b, dd, c, one, two


def flip(tri, d):
    """Replace diagonal d by the other diagonal of its quadrilateral."""
    a, b, dd, c, one, two = _seam_frame(tri, d)
    triangles = list(tri.triangles)
    triangles[one] = (a, b, dd)
    triangles[two] = (a, dd, c)
    return DiskTriangulation(tri.m, triangles)


def _flip_positions(tri, d, l):
    """Initial quadrilateral coordinates of the two glued hives.

    Positions are the weights at (a, b, dd, c); the two old triangles
    are the faces dd = 0 and a = 0, the two new ones c = 0 and b = 0.
    """
    a, b, dd, c, one, two = _seam_frame(tri, d)
    glued = glue(tri, l)
    pos = {}
    for lab in glued.quiver.labels:
        owners = [t for t, _ in glued.provenance[lab]]
        if one in owners or two in owners:
            w = _label_weights(lab)
            pos[lab] = (w.get(a, 0), w.get(b, 0), w.get(dd, 0), w.get(c, 0))
    return (a, b, dd, c), pos


def _flip_walk(tri, d, l):
    """Simulate the rectangle layers; return them with final positions."""
    corners, pos = _flip_positions(tri, d, l)
    pos = dict(pos)
    layers = []
    for k in range(1, l):
        members = [
            lab
            for lab, p in pos.items()
            if p[0] + p[2] == k - 1 and p[1] >= 1 and p[3] >= 1
        ]
        members.sort(key=lambda lab: pos[lab])
        layers.append(members)
        for lab in members:
            p = pos[lab]
            pos[lab] = (p[0] + 1, p[1] - 1, p[2] + 1, p[3] - 1)
    return corners, layers, pos


def flip_layers(tri, d, l):
    """The l-1 central-rectangle mutation layers realizing the flip."""
    _, layers, _ = _flip_walk(tri, d, l)
    return layers


def flip_sequence(tri, d, l):
    """Concatenation of the rectangle layers, innermost first."""
    return [lab for layer in flip_layers(tri, d, l) for lab in layer]


def flip_transport(tri, d, l):
    """Vertex renaming carrying the mutated quiver onto the flipped one.

    Every mutated vertex drifts by (+1, -1, +1, -1) in quadrilateral
    coordinates per mutation; its final position, read as weights, is
    its name in the flipped triangulation.  Vertices outside the two
    triangles keep their names.
    """
    (a, b, dd, c), _, pos = _flip_walk(tri, d, l)
    transport = {}
    for lab, p in pos.items():
        weights = {a: p[0], b: p[1], dd: p[2], c: p[3]}
        pairs = sorted((pt, w) for pt, w in weights.items() if w > 0)
        transport[lab] = tuple(x for pair in pairs for x in pair)
    return transport


def flip_verify(tri, d, l):
    """Check that the flip sequence plus transport rebuilds glue(flip)."""
    glued = glue(tri, l)
    cur = glued.quiver.mutate_labels(flip_sequence(tri, d, l))
    transport = flip_transport(tri, d, l)
    image = cur.relabeled(lambda lab: transport.get(lab, lab))
    target = glue(flip(tri, d), l).quiver
    return b_equivalent(image, target)


def twist(tri, t_index, e):
    """Reverse the orientation of one triangle of the triangulation."""
    if t_index < 0 or t_index >= len(tri.triangles):
        raise InvalidChoice("no triangle %r" % (t_index,))
    triple = tri.triangles[t_index]
    pair = frozenset(e)
    edges = [frozenset((triple[p], triple[(p + 1) % 3])) for p in range(3)]
    if pair not in edges:
        raise InvalidChoice("%r is not an edge of triangle %r" % (e, triple))
    triangles = list(tri.triangles)
    triangles[t_index] = (triple[0], triple[2], triple[1])
    return DiskTriangulation(tri.m, triangles)


def twist_layers(l, edge=1):
    """Mutation layers of the hive twist at one of its boundary edges.

    Layer k collects the mutable vertices of the corner sub-triangle of
    side k opposite the chosen edge; layers are applied largest first
    and each runs in reverse lexicographic order.  Mutations within a
    layer commute, so the order inside a layer is a convention.
    """
    if l < 2:
        raise SizeTooSmall("hives need size at least 2")
    if edge not in (1, 2, 3):
        raise InvalidChoice("edges are numbered 1, 2, 3")
    mutables = [
        lab
        for lab in build_hive(l).quiver.labels
        if all(c > 0 for c in lab)
    ]
    layers = []
    for k in range(l - 1, 1, -1):
        layer = [v for v in mutables if v[edge - 1] >= l - k]
        layer.sort(key=lambda v: (-v[edge - 1], -v[0], -v[1], -v[2]))
        layers.append(layer)
    return layers


def twist_sequence(l, edge=1):
    """The hive twist sequence; empty for l = 2."""
    return [v for layer in twist_layers(l, edge) for v in layer]


def twist_hive_map(edge):
    """The hive twist's vertex correspondence back onto the plain hive.

    Every frozen vertex reverses within its own boundary edge; mutable
    vertices reflect across the axis through the corner opposite the
    chosen edge.  Both amount to swapping the two coordinates other
    than the distinguished one.
    """
    if edge not in (1, 2, 3):
        raise InvalidChoice("edges are numbered 1, 2, 3")

    def rename(lab):
        zeros = [p for p in range(3) if lab[p] == 0]
        pivot = zeros[0] if zeros else edge - 1
        one, two = [p for p in range(3) if p != pivot]
        out = list(lab)
        out[one], out[two] = out[two], out[one]
        return tuple(out)

    return rename


def _twist_frame(tri, t_index, e):
    """The twisted triangle rotated so the corner opposite e comes first."""
    triple = tri.triangles[t_index]
    pair = frozenset(e)
    edges = [frozenset((triple[p], triple[(p + 1) % 3])) for p in range(3)]
    if pair not in edges:
        raise InvalidChoice("%r is not an edge of triangle %r" % (e, triple))
    apex = next(p for p in triple if p not in pair)
    shift = triple.index(apex)
    return tuple(triple[shift:] + triple[:shift])


def glued_twist_sequence(tri, t_index, e, l):
    """The twist sequence written in glued weight labels."""
    p, q, r = _twist_frame(tri, t_index, e)
    return [
        _weight_label((p, q, r), lab) for lab in twist_sequence(l, edge=1)
    ]


def twist_transport(tri, t_index, e, l):
    """Vertex renaming carrying the mutated quiver onto the twisted one.

    Interior and chosen-edge vertices keep their weight names.  A
    vertex on a cut edge moves to the other cut edge with the weights
    reversed: the weight it had at the apex moves to the far corner,
    which is exactly the re-identification the twist prescribes.
    """
    p, q, r = _twist_frame(tri, t_index, e)
    transport = {}
    for i in range(1, l):
        j = l - i
        transport[_weight_label((p, q, r), (i, j, 0))] = _weight_label(
            (p, q, r), (j, 0, i)
        )
        transport[_weight_label((p, q, r), (i, 0, j))] = _weight_label(
            (p, q, r), (j, i, 0)
        )
    return transport


def twist_verify(tri, t_index, e, l):
    """Check that the twist sequence plus transport rebuilds glue(twist).

    Only supported when both cut edges lie on the boundary of the disk,
    where the re-identification stays inside the chosen triangle.
    """
    p, q, r = _twist_frame(tri, t_index, e)
    for cut in (frozenset((p, q)), frozenset((p, r))):
        if cut not in tri.boundary_pairs:
            raise InvalidChoice(
                "cut edge %r is a seam; verification needs boundary cuts"
                % (sorted(cut),)
            )
    glued = glue(tri, l)
    cur = glued.quiver.mutate_labels(glued_twist_sequence(tri, t_index, e, l))
    transport = twist_transport(tri, t_index, e, l)
    image = cur.relabeled(lambda lab: transport.get(lab, lab))
    target = glue(twist(tri, t_index, e), l).quiver
    return b_equivalent(image, target)


def all_triangulations(m):
    """Every triangulation of the m-gon, all triangles counterclockwise."""

    def rec(points):
        if len(points) == 2:
            return [[]]
        first, last = points[0], points[-1]
        out = []
        for cut in range(1, len(points) - 1):
            apex = points[cut]
            for left in rec(points[: cut + 1]):
                for right in rec(points[cut:]):
                    out.append(left + [(first, apex, last)] + right)
        return out

    return [
        DiskTriangulation(m, triples)
        for triples in rec(tuple(range(1, m + 1)))
    ]
