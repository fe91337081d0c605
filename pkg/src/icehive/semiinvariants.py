"""Exact Schofield semi-invariants of tuple flag representations.

Everything here runs over exact rationals.  A flag representation assigns
an (i+1) x i matrix to the i-th arrow of each flag; path matrices compose
them up to the central vertex, and the semi-invariant of a presentation
is the determinant of its stacked path blocks.  Identity checks evaluate
at random exact points instead of manipulating polynomials; points where
a needed value vanishes raise DegeneratePoint and are resampled.
"""

import random
from fractions import Fraction

from .errors import DegeneratePoint, DimensionMismatch, SingularBlock
from .linalg import det, invert, mat_mul
from .surface import flip, flip_sequence, flip_transport, glue
from .weights import check_config

CENTER = "center"


def _identity(n):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


class FlagQuiver:
    """The m-tuple flag quiver of length l with its standard dimensions.

    Vertices are pairs (a, i) for flag a and depth 1 <= i <= l-1 plus the
    shared central vertex; the dimension at (a, i) is i and at the center
    is l.
    """

    def __init__(self, l, m):
        if l < 1 or m < 1:
            raise DimensionMismatch("flag quivers need l >= 1 and m >= 1")
        self.l = l
        self.m = m

    def vertices(self):
        out = [(a, i) for a in range(1, self.m + 1)
               for i in range(1, self.l)]
        out.append(CENTER)
        return out

    def beta(self, v):
        if v == CENTER:
            return self.l
        a, i = v
        if not (1 <= a <= self.m and 1 <= i < self.l):
            raise DimensionMismatch("no flag vertex %r" % (v,))
        return i

    def arrows(self):
        """Pairs (tail, head): up each flag, then into the center."""
        out = []
        for a in range(1, self.m + 1):
            for i in range(1, self.l - 1):
                out.append(((a, i), (a, i + 1)))
            if self.l > 1:
                out.append(((a, self.l - 1), CENTER))
        return out

    def weight(self, flags, indices):
        """The presentation weight: center minus one basis vector per block.

        Index 0 contributes nothing and index l lands on the center, so
        the corner presentations have weight zero.
        """
        verts = self.vertices()
        pos = {v: n for n, v in enumerate(verts)}
        vec = [0] * len(verts)
        vec[pos[CENTER]] = 1
        for a, i in zip(flags, indices):
            if i == 0:
                continue
            if i == self.l:
                vec[pos[CENTER]] -= 1
            else:
                vec[pos[(a, i)]] -= 1
        return tuple(vec)


def minus_flag(l):
    """Arrow matrices of F^-: the identity stacked over a zero row."""
    out = {}
    for i in range(1, l):
        rows = [[Fraction(int(r == c)) for c in range(i)] for r in range(i + 1)]
        out[i] = rows
    return out


def plus_flag(l):
    """Arrow matrices of F^+: a zero row stacked over the identity."""
    out = {}
    for i in range(1, l):
        rows = [[Fraction(int(r == c + 1)) for c in range(i)]
                for r in range(i + 1)]
        out[i] = rows
    return out


class FlagRep:
    """Rational matrices for every flag arrow, dimensions locked to beta."""

    def __init__(self, l, m, matrices):
        self.l = l
        self.m = m
        store = {}
        for a in range(1, m + 1):
            for i in range(1, l):
                if (a, i) not in matrices:
                    raise DimensionMismatch("missing matrix for arrow %r"
                                            % ((a, i),))
                rows = [[Fraction(x) for x in row] for row in matrices[(a, i)]]
                if len(rows) != i + 1 or any(len(r) != i for r in rows):
                    raise DimensionMismatch(
                        "arrow %r needs a %dx%d matrix" % ((a, i), i + 1, i))
                store[(a, i)] = tuple(tuple(row) for row in rows)
        if len(store) != len(matrices):
            raise DimensionMismatch("matrices for unknown arrows supplied")
        self.matrices = store

    def matrix(self, a, i):
        return [list(row) for row in self.matrices[(a, i)]]

    @classmethod
    def assemble(cls, l, flags):
        """Build from per-flag dicts {i: matrix}, one dict per flag."""
        matrices = {}
        for a, per_flag in enumerate(flags, start=1):
            for i, rows in per_flag.items():
                matrices[(a, i)] = rows
        return cls(l, len(flags), matrices)

    @classmethod
    def random(cls, l, m, rng, span=9):
        matrices = {}
        for a in range(1, m + 1):
            for i in range(1, l):
                matrices[(a, i)] = [
                    [Fraction(rng.randint(-span, span)) for _ in range(i)]
                    for _ in range(i + 1)
                ]
        return cls(l, m, matrices)

    def to_json_obj(self):
        flags = []
        for a in range(1, self.m + 1):
            per_flag = []
            for i in range(1, self.l):
                rows = [[str(x) for x in row] for row in self.matrices[(a, i)]]
                per_flag.append(rows)
            flags.append(per_flag)
        return {"l": self.l, "m": self.m, "flags": flags}

    @classmethod
    def from_json_obj(cls, obj):
        l, m = obj["l"], obj["m"]
        matrices = {}
        for a, per_flag in enumerate(obj["flags"], start=1):
            for i, rows in enumerate(per_flag, start=1):
                matrices[(a, i)] = [[Fraction(x) for x in row] for row in rows]
        return cls(l, m, matrices)


def path_matrix(rep, a, i):
    """Product of arrow matrices along the unique path from depth i.

    The result is l x i; depth l is the empty path at the center and
    gives the identity.
    """
    if not 1 <= a <= rep.m:
        raise DimensionMismatch("no flag %r" % (a,))
    if i == rep.l:
        return _identity(rep.l)
    if not 1 <= i < rep.l:
        raise DimensionMismatch("path depth %r out of range" % (i,))
    prod = rep.matrix(a, i)
    for step in range(i + 1, rep.l):
        prod = mat_mul(rep.matrix(a, step), prod)
    return prod


def schofield(rep, flags, indices):
    """Semi-invariant of the presentation with the given path blocks.

    Stacks path matrices as column blocks in the order given (indices of
    zero are skipped) and takes the determinant; the block widths must
    add up to l.
    """
    if len(flags) != len(indices):
        raise DimensionMismatch("one index per flag required")
    if sum(indices) != rep.l:
        raise DimensionMismatch(
            "block widths %r do not add up to %d" % (tuple(indices), rep.l))
    blocks = [path_matrix(rep, a, i)
              for a, i in zip(flags, indices) if i > 0]
    stacked = [
        [block[r][c] for block in blocks for c in range(len(block[0]))]
        for r in range(rep.l)
    ]
    return det(stacked)


def schofield_weight(fq, flags, indices):
    """Weight vector of the presentation on the flag quiver."""
    return fq.weight(flags, indices)


def act(rep, g):
    """Base change: each arrow matrix becomes g_head * M * g_tail^{-1}."""
    fq = FlagQuiver(rep.l, rep.m)
    blocks = {}
    inverses = {}
    for v in fq.vertices():
        rows = g.get(v)
        if rows is None:
            rows = _identity(fq.beta(v))
        rows = [[Fraction(x) for x in row] for row in rows]
        n = fq.beta(v)
        if len(rows) != n or any(len(r) != n for r in rows):
            raise DimensionMismatch("block at %r must be %dx%d" % (v, n, n))
        inv = invert(rows)
        if inv is None:
            raise SingularBlock("block at %r is not invertible" % (v,))
        blocks[v] = rows
        inverses[v] = inv
    matrices = {}
    for tail, head in fq.arrows():
        a, i = tail
        moved = mat_mul(blocks[head], rep.matrix(a, i))
        matrices[(a, i)] = mat_mul(moved, inverses[tail])
    return FlagRep(rep.l, rep.m, matrices)


def semiinvariance_check(rep, g, flags, indices):
    """Exact equivariance: s(g.N) equals the character value times s(N)."""
    fq = FlagQuiver(rep.l, rep.m)
    sigma = fq.weight(flags, indices)
    moved = act(rep, g)
    factor = Fraction(1)
    for v, coeff in zip(fq.vertices(), sigma):
        if coeff == 0:
            continue
        rows = g.get(v)
        d = det(rows) if rows is not None else Fraction(1)
        factor *= d ** coeff
    return schofield(moved, flags, indices) == factor * schofield(
        rep, flags, indices)


def _rep_with_first_paths(j, k, u, v):
    """Quadruple flags (a, b, d, c) = (u-flag, F^-, v-flag, F^+).

    The u-flag is F^- in all arrows but the last, whose first column is
    set to u, so its depth-1 path matrix is exactly the column u; same
    for v.
    """
    l = j + k
    u = [Fraction(x) for x in u]
    v = [Fraction(x) for x in v]
    if len(u) != l or len(v) != l:
        raise DimensionMismatch("u and v must have length %d" % l)

    def column_flag(col):
        out = minus_flag(l)
        last = [[Fraction(0)] * (l - 1) for _ in range(l)]
        for r in range(l):
            last[r][0] = col[r]
        for c in range(1, l - 1):
            last[c][c] = Fraction(1)
        out[l - 1] = last
        return out

    return FlagRep.assemble(
        l, [column_flag(u), minus_flag(l), column_flag(v), plus_flag(l)])


def exchange_identity_check(j, k, u, v):
    """Verify the diagonal exchange relation at one dense-set point.

    Flags are fixed to (a, b, d, c) = (u-flag, F^-, v-flag, F^+); all six
    semi-invariants are computed twice, from determinants and from the
    closed forms they must equal, and the relation
    s_{0,j,k} * s' = s_{1,j-1,k} s_{j,1,k-1} + s_{1,j,k-1} s_{j-1,1,k}
    must hold exactly.
    """
    if j < 1 or k < 1:
        raise DimensionMismatch("need j, k >= 1")
    l = j + k
    rep = _rep_with_first_paths(j, k, u, v)
    u = [Fraction(x) for x in u]
    v = [Fraction(x) for x in v]
    a, b, d, c = 1, 2, 3, 4

    plain = schofield(rep, (a, b, c), (0, j, k))
    primed = schofield(rep, (a, b, d, c), (1, j - 1, 1, k - 1))
    r1 = schofield(rep, (a, b, c), (1, j - 1, k))
    r2 = schofield(rep, (b, d, c), (j, 1, k - 1))
    r3 = schofield(rep, (a, b, c), (1, j, k - 1))
    r4 = schofield(rep, (b, d, c), (j - 1, 1, k))

    sign = Fraction((-1) ** (j - 1))
    table = (
        plain == 1
        and primed == sign * (u[j - 1] * v[j] - u[j] * v[j - 1])
        and r1 == sign * u[j - 1]
        and r2 == v[j]
        and r3 == -sign * u[j]
        and r4 == v[j - 1]
    )
    return table and plain * primed == r1 * r2 + r3 * r4


def cluster_values(rep, tri, l):
    """Evaluate every glued-vertex semi-invariant at one representation.

    Vertex labels already name their presentation: the marked points are
    the flags and the weights are the block widths.
    """
    if rep.l != l or rep.m != tri.m:
        raise DimensionMismatch("representation shape does not match")
    values = {}
    for lab in glue(tri, l).quiver.labels:
        values[lab] = schofield(rep, lab[::2], lab[1::2])
    return values


def _exchange(quiver, values, lab):
    uid = quiver.id_of(lab)
    if values[lab] == 0:
        raise DegeneratePoint("exchange division by zero at %r" % (lab,))
    inc = Fraction(1)
    out = Fraction(1)
    for w in range(quiver.q):
        m_in = quiver.adj[w][uid]
        if m_in > 0:
            inc *= values[quiver.labels[w]] ** m_in
        m_out = quiver.adj[uid][w]
        if m_out > 0:
            out *= values[quiver.labels[w]] ** m_out
    return (inc + out) / values[lab]


def flip_compatibility(tri, d, l, trials=20, seed=0):
    """Track cluster values through a flip at random points; report signs.

    For each trial a random representation is drawn, the flip's mutation
    sequence is applied to the values by exchange relations, and the
    results are compared with the flipped triangulation's semi-invariants
    under the flip transport.  Points where any needed value vanishes
    are resampled.  The report records per-trial outcomes and the global
    sign pattern, which must be constant across trials.
    """
    rng = random.Random(seed)
    sequence = flip_sequence(tri, d, l)
    transport = flip_transport(tri, d, l)
    flipped = flip(tri, d)
    start = glue(tri, l).quiver
    report = {
        "m": tri.m,
        "l": l,
        "diagonal": sorted(d),
        "trials": [],
        "signs": None,
        "ok": False,
    }
    pattern = None
    for trial in range(trials):
        outcome = None
        for _ in range(60):
            rep = FlagRep.random(l, tri.m, rng)
            try:
                values = cluster_values(rep, tri, l)
                if any(x == 0 for x in values.values()):
                    raise DegeneratePoint("vanishing start value")
                target = cluster_values(rep, flipped, l)
                if any(x == 0 for x in target.values()):
                    raise DegeneratePoint("vanishing target value")
                current = start
                tracked = dict(values)
                for lab in sequence:
                    tracked[lab] = _exchange(current, tracked, lab)
                    current = current.mutate(current.id_of(lab))
                signs = {}
                for lab, value in tracked.items():
                    goal = target[transport.get(lab, lab)]
                    if value == goal:
                        signs[lab] = 1
                    elif value == -goal:
                        signs[lab] = -1
                    else:
                        signs = None
                        break
                outcome = signs
                break
            except DegeneratePoint:
                continue
        else:
            raise DegeneratePoint(
                "no nondegenerate sample found in 60 draws")
        matched = outcome is not None and (pattern is None
                                           or outcome == pattern)
        if outcome is not None and pattern is None:
            pattern = outcome
        report["trials"].append({"trial": trial, "matched": bool(matched)})
        if not matched:
            report["ok"] = False
            report["signs"] = None
            return report
    report["ok"] = pattern is not None
    if pattern is not None:
        report["signs"] = [
            {"vertex": list(lab), "sign": pattern[lab]}
            for lab in sorted(pattern)
        ]
    return report


def flip_compatibility_check(tri, d, l, trials=20, seed=0):
    """Boolean form of flip_compatibility."""
    return flip_compatibility(tri, d, l, trials=trials, seed=seed)["ok"]


def schofield_config(tri, l):
    """Schofield weights of all glued vertices, keyed by vertex id.

    Bridged to the weight-configuration machinery: the returned map is a
    valid input for check_config and mutate_config.  On consistently
    glued triangulations B*sigma vanishes; on twisted seams it does not,
    which is one way to see that the twisted gluing carries a different
    cluster structure.
    """
    fq = FlagQuiver(l, tri.m)
    quiver = glue(tri, l).quiver
    return {
        uid: fq.weight(lab[::2], lab[1::2])
        for uid, lab in enumerate(quiver.labels)
    }


def schofield_config_check(tri, l):
    """True iff the Schofield weights balance on the glued quiver."""
    return check_config(glue(tri, l).quiver, schofield_config(tri, l))


def cardinality_check(tri, l):
    """Glued vertex count against the closed form, two independent routes."""
    m = tri.m
    expected = ((l - 1) * (l + 1) * (m - 2) + (l - 1) * m) // 2
    return len(glue(tri, l).quiver.labels) == expected
