"""Weight configurations on ice quivers and balanced frozen extensions.

A weight configuration assigns an integer vector to every vertex so that
at each mutable vertex the weights carried by incoming arrows balance the
weights carried by outgoing ones.  Balanced extensions enlarge a quiver by
extra frozen vertices whose exchange effect can be undone by a monomial
rescaling; the exponent table of that rescaling is solved here as an
integer linear system.
"""

from .errors import (
    DimensionMismatch,
    ExactDivisionFailure,
    InvalidConfig,
    UnknownVertex,
)
from .laurent import LaurentPoly
from .linalg import solve_integer
from .seeds import Seed


def _width(sigma):
    widths = {len(vec) for vec in sigma.values()}
    if len(widths) != 1:
        raise DimensionMismatch("weight vectors have mixed lengths")
    return widths.pop()


def check_config(quiver, sigma):
    """True iff B·sigma vanishes.

    ``sigma`` maps every vertex id to an integer tuple; the condition says
    that at each mutable vertex the weighted sum over outgoing arrows
    equals the weighted sum over incoming ones.
    """
    if set(sigma) != set(range(quiver.q)):
        raise DimensionMismatch("sigma must assign a vector to every vertex")
    n = _width(sigma)
    for u in quiver.mutable_ids():
        total = [0] * n
        for v in range(quiver.q):
            m = quiver.adj[u][v]
            if m:
                for i in range(n):
                    total[i] += m * sigma[v][i]
        if any(total):
            return False
    return True


def mutate_config(quiver, sigma, u):
    """Mutate a weight configuration at the mutable vertex u.

    Returns ``(mutated_quiver, new_sigma)`` where the weight at u becomes
    the outgoing sum minus the old weight and every other vertex keeps its
    weight.  The balance condition is required on input and holds again on
    output; mutating twice at u restores the original pair.
    """
    if quiver.frozen[u]:
        raise InvalidConfig("weight mutation needs a mutable vertex")
    if not check_config(quiver, sigma):
        raise InvalidConfig("sigma is not balanced on this quiver")
    n = _width(sigma)
    new_u = [-c for c in sigma[u]]
    for w in range(quiver.q):
        m = quiver.adj[u][w]
        if m > 0:
            for i in range(n):
                new_u[i] += m * sigma[w][i]
    new_sigma = dict(sigma)
    new_sigma[u] = tuple(new_u)
    return quiver.mutate(u), new_sigma


def solve_balanced_extension(ext, e_ids):
    """Solve B·Theta = -B_e for the frozen extension vertices e_ids.

    ``ext`` is the extended quiver and ``e_ids`` the frozen vertices that
    were added to the core.  The returned dict assigns each core vertex an
    integer exponent vector (one entry per extension vertex, in increasing
    id order) and each extension vertex its unit vector.  The system is
    solved column by column in Hermite normal form with the free
    coordinates pinned to zero, so the answer is deterministic.  Raises
    NoRationalSolution when the system is inconsistent and
    NoIntegerSolution when it admits rational but no integral solutions.
    """
    e_ids = sorted(set(e_ids))
    e_set = set(e_ids)
    for e in e_ids:
        if not ext.frozen[e]:
            raise InvalidConfig("extension vertices must be frozen")
    core_ids = [v for v in range(ext.q) if v not in e_set]
    mut = ext.mutable_ids()
    a = [[ext.adj[u][v] for v in core_ids] for u in mut]
    columns = []
    for e in e_ids:
        b = [-ext.adj[u][e] for u in mut]
        columns.append(solve_integer(a, b))
    theta = {}
    for i, v in enumerate(core_ids):
        theta[v] = tuple(col[i] for col in columns)
    for j, e in enumerate(e_ids):
        theta[e] = tuple(1 if i == j else 0 for i in range(len(e_ids)))
    return theta


def _core_positions(core, ext):
    """Map each core vertex id to the ext vertex id with the same label."""
    try:
        return [ext.id_of(lab) for lab in core.labels]
    except UnknownVertex:
        raise InvalidConfig("every core label must appear in the extension")


def extension_rewrite(z, core, ext, theta):
    """Rewrite an extended-ring Laurent polynomial through the extension.

    Substitutes x̄(v) = x(v) · x̄(e)^{Theta(v)} for every core vertex and
    leaves the extension variables alone.  Both input and output live in
    the polynomial ring indexed by the vertices of ``ext``.
    """
    positions = _core_positions(core, ext)
    core_set = set(positions)
    e_ids = _ext_ids(ext, core_set)
    matrix = []
    for v in range(ext.q):
        row = [0] * ext.q
        row[v] = 1
        if v in core_set:
            for e, t in zip(e_ids, theta[v]):
                row[e] += t
        matrix.append(row)
    return z.exponent_map(matrix, ext.q)


def _ext_ids(ext, core_set):
    return [v for v in range(ext.q) if v not in core_set]


def _lift(z, core, ext):
    """Embed a core-ring Laurent polynomial into the extended ring."""
    positions = _core_positions(core, ext)
    matrix = []
    for i in range(core.q):
        row = [0] * ext.q
        row[positions[i]] = 1
        matrix.append(row)
    return z.exponent_map(matrix, ext.q)


def _ext_monomial(ext, e_ids, vec):
    exps = [0] * ext.q
    for e, t in zip(e_ids, vec):
        exps[e] = t
    return LaurentPoly.monomial(ext.q, tuple(exps))


def balanced_identity(core, ext, theta, u):
    """Check the exchange identity of a balanced extension at vertex u.

    The exchange binomial of the extended quiver at u, rewritten through
    the extension, must equal a monic monomial in the extension variables
    times the exchange binomial of the core.
    """
    positions = _core_positions(core, ext)
    e_ids = _ext_ids(ext, set(positions))
    ext_bin = Seed.initial(ext).exchange_binomial(positions[u])
    core_bin = _lift(Seed.initial(core).exchange_binomial(u), core, ext)
    rewritten = extension_rewrite(ext_bin, core, ext, theta)
    try:
        ratio = rewritten.divide_exact(core_bin)
    except ExactDivisionFailure:
        return False
    if not ratio.is_monomial():
        return False
    ((exps, coeff),) = ratio.terms.items()
    if coeff != 1:
        return False
    allowed = set(e_ids)
    return all(e == 0 or i in allowed for i, e in enumerate(exps))


def verify_extension_commutation(core, ext, theta, seq):
    """Check that extension and mutation commute along a sequence.

    ``seq`` lists core vertex ids.  Both seeds are mutated symbolically
    and theta is mutated as a weight configuration on the extended
    quiver; the claim verified is that rewriting each mutated extended
    variable through the original theta yields the matching mutated core
    variable times x̄(e) raised to the mutated theta exponent.
    """
    positions = _core_positions(core, ext)
    e_ids = _ext_ids(ext, set(positions))
    core_seed = Seed.initial(core).mutate_seq(seq)
    ext_seed = Seed.initial(ext)
    quiver, th = ext, dict(theta)
    for u in seq:
        ext_seed = ext_seed.mutate(positions[u])
        quiver, th = mutate_config(quiver, th, positions[u])
    for v in range(core.q):
        lhs = extension_rewrite(ext_seed.vars[positions[v]], core, ext, theta)
        rhs = _lift(core_seed.vars[v], core, ext) * _ext_monomial(
            ext, e_ids, th[positions[v]]
        )
        if lhs != rhs:
            return False
    return True
