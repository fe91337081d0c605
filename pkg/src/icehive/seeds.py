"""Seeds: cluster variables as exact Laurent polynomials in the initial cluster.

A seed pairs an ice quiver with one Laurent polynomial per vertex, always
expressed in the fixed initial variables.  Mutation performs the exchange
relation with one exact Laurent division; by the Laurent phenomenon that
division never fails along genuine mutation sequences, so a failure is
surfaced as a bug, not smoothed over.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ExactDivisionFailure, InvalidConfig, NoGVector, RankDeficient
from .laurent import LaurentPoly
from .linalg import bareiss_rank, solve_rational
from .quiver import IceQuiver


class Seed:
    __slots__ = ("quiver", "vars")

    def __init__(self, quiver, variables):
        variables = tuple(variables)
        if len(variables) != quiver.q:
            raise ValueError("need one variable per vertex")
        if any(v.nvars != quiver.q for v in variables):
            raise ValueError("variables must live in q initial coordinates")
        object.__setattr__(self, "quiver", quiver)
        object.__setattr__(self, "vars", variables)

    def __setattr__(self, name, value):
        raise AttributeError("Seed is immutable")

    @classmethod
    def initial(cls, quiver):
        q = quiver.q
        return cls(quiver, [LaurentPoly.variable(q, v) for v in range(q)])

    def is_initial(self):
        q = self.quiver.q
        return all(self.vars[v] == LaurentPoly.variable(q, v) for v in range(q))

    def __eq__(self, other):
        if not isinstance(other, Seed):
            return NotImplemented
        return self.quiver == other.quiver and self.vars == other.vars

    def __hash__(self):
        return hash((self.quiver, self.vars))

    def exchange_binomial(self, u):
        """In-monomial + out-monomial at u, in the current cluster variables."""
        quiver = self.quiver
        q = quiver.q
        in_mon = LaurentPoly.constant(q, 1)
        out_mon = LaurentPoly.constant(q, 1)
        for v in range(q):
            m = quiver.adj[v][u]
            if m > 0:
                in_mon = in_mon * self.vars[v] ** m
            elif m < 0:
                out_mon = out_mon * self.vars[v] ** (-m)
        return in_mon + out_mon

    def mutate(self, u):
        """Seed mutation at u: quiver and variables move in lockstep."""
        quiver = self.quiver
        quiver.check_vertex(u)
        binomial = self.exchange_binomial(u)
        new_var = binomial.divide_exact(self.vars[u])
        new_vars = list(self.vars)
        new_vars[u] = new_var
        return Seed(quiver.mutate(u), new_vars)

    def mutate_seq(self, us):
        seed = self
        for u in us:
            seed = seed.mutate(u)
        return seed

    def y_vars(self):
        """y_u = x^{-b_u} as Laurent monomials in the current cluster coordinates."""
        quiver = self.quiver
        q = quiver.q
        return {u: LaurentPoly.monomial(q, tuple(-m for m in quiver.adj[u]))
                for u in quiver.mutable_ids()}

    def to_json_obj(self):
        return {"quiver": self.quiver.to_json_obj(),
                "vars": [v.to_json_obj() for v in self.vars]}

    @classmethod
    def from_json_obj(cls, obj):
        quiver = IceQuiver.from_json_obj(obj["quiver"])
        variables = [LaurentPoly.from_json_obj(v, quiver.q) for v in obj["vars"]]
        return cls(quiver, variables)


def g_vector(z, quiver):
    """The exponent vector g with z = x^g F(y), F carrying a constant term.

    Every exponent of z must be expressible as g - e B with e a nonnegative
    integer row; g itself corresponds to e = 0.  Unique when B has full rank.
    """
    if z.is_zero():
        raise NoGVector("zero polynomial")
    b = quiver.b_matrix()
    p = len(b)
    q = quiver.q
    if bareiss_rank(b) != p:
        raise RankDeficient("g-vectors require a full-rank B-matrix")
    bt = [[b[r][c] for r in range(p)] for c in range(q)]  # B transposed, q x p
    support = z.support()
    winners = []
    for m0 in support:
        good = True
        for m in support:
            rhs = [m0[c] - m[c] for c in range(q)]
            e = solve_rational(bt, rhs)
            if e is None or any(x.denominator != 1 or x < 0 for x in e):
                good = False
                break
        if good:
            winners.append(m0)
    if len(winners) != 1:
        raise NoGVector("found %d qualifying exponents" % len(winners))
    return list(winners[0])


def upper_bound_member(z, seed):
    """Membership of z in the upper bound algebra of the initial seed.

    Checks z against the initial cluster (polynomial in frozen variables)
    and against each once-mutated cluster: writing z as a sum of slices
    S_d x_u^d, the substitution x_u -> rho_u / x_u' is Laurent exactly when
    every negative slice is exactly divisible by rho_u^{-d}; frozen
    exponents must stay nonnegative in every slice.
    """
    quiver = seed.quiver
    if not seed.is_initial():
        raise InvalidConfig("membership is tested against an initial seed")
    q = quiver.q
    frozen = quiver.frozen_ids()
    if z.is_zero():
        return True
    for exps in z.support():
        if any(exps[f] < 0 for f in frozen):
            return False
    for u in quiver.mutable_ids():
        rho = seed.exchange_binomial(u)
        slices = {}
        for exps, coeff in z.terms.items():
            d = exps[u]
            rest = list(exps)
            rest[u] = 0
            slices.setdefault(d, {})[tuple(rest)] = coeff
        for d, terms in slices.items():
            part = LaurentPoly(q, terms)
            if d >= 0:
                image = part * rho ** d
            else:
                try:
                    image = part.divide_exact(rho ** (-d))
                except ExactDivisionFailure:
                    return False
            for exps in image.support():
                if any(exps[f] < 0 for f in frozen):
                    return False
    return True
