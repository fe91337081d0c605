"""Exact multivariate Laurent polynomials over the rationals.

Terms live in a dict from integer exponent tuples to nonzero Fraction
coefficients.  Exact division goes through a componentwise shift to genuine
polynomials followed by lex leading-term long division; a nonzero remainder
raises ExactDivisionFailure.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ExactDivisionFailure


def _add_exp(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _sub_exp(a, b):
    return tuple(x - y for x, y in zip(a, b))


class LaurentPoly:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        object.__setattr__(self, "nvars", int(nvars))
        clean = {}
        for exps, coeff in (terms or {}).items():
            coeff = Fraction(coeff)
            if coeff == 0:
                continue
            exps = tuple(int(x) for x in exps)
            if len(exps) != nvars:
                raise ValueError("exponent tuple of wrong length")
            clean[exps] = coeff
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, nvars):
        return cls(nvars)

    @classmethod
    def constant(cls, nvars, value):
        return cls(nvars, {(0,) * nvars: Fraction(value)})

    @classmethod
    def monomial(cls, nvars, exps, coeff=1):
        return cls(nvars, {tuple(exps): Fraction(coeff)})

    @classmethod
    def variable(cls, nvars, index, power=1):
        exps = [0] * nvars
        exps[index] = power
        return cls(nvars, {tuple(exps): Fraction(1)})

    # -- queries ---------------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_monomial(self):
        return len(self.terms) == 1

    def support(self):
        return sorted(self.terms)

    def coeff(self, exps):
        return self.terms.get(tuple(exps), Fraction(0))

    def min_exponents(self):
        """Componentwise minimum exponent vector over the support."""
        if self.is_zero():
            raise ValueError("zero polynomial has no support")
        cols = zip(*self.terms)
        return tuple(min(c) for c in cols)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, tuple(sorted(self.terms.items()))))

    def __repr__(self):
        if self.is_zero():
            return "LaurentPoly(0)"
        bits = []
        for exps in sorted(self.terms, reverse=True):
            coeff = self.terms[exps]
            mono = "*".join("x%d^%d" % (i, e) for i, e in enumerate(exps) if e != 0)
            bits.append(("%s" % coeff) + ("*" + mono if mono else ""))
        return "LaurentPoly(%s)" % " + ".join(bits)

    # -- arithmetic --------------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        terms = dict(self.terms)
        for exps, coeff in other.terms.items():
            val = terms.get(exps, Fraction(0)) + coeff
            if val:
                terms[exps] = val
            else:
                terms.pop(exps, None)
        return LaurentPoly(self.nvars, terms)

    def __neg__(self):
        return LaurentPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __mul__(self, other):
        other = self._coerce(other)
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = _add_exp(e1, e2)
                val = terms.get(key, Fraction(0)) + c1 * c2
                if val:
                    terms[key] = val
                else:
                    terms.pop(key, None)
        return LaurentPoly(self.nvars, terms)

    __radd__ = __add__
    __rmul__ = __mul__

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            if other.nvars != self.nvars:
                raise ValueError("mixed variable counts")
            return other
        return LaurentPoly.constant(self.nvars, other)

    def __pow__(self, n):
        n = int(n)
        if n < 0:
            if not self.is_monomial():
                raise ExactDivisionFailure("negative power of a non-monomial")
            ((exps, coeff),) = self.terms.items()
            return LaurentPoly(self.nvars,
                               {tuple(n * e for e in exps): Fraction(1) / coeff ** (-n)})
        result = LaurentPoly.constant(self.nvars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divide_exact(self, divisor):
        """Exact Laurent division; raises ExactDivisionFailure on remainder."""
        divisor = self._coerce(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return self
        shift_f = self.min_exponents()
        shift_g = divisor.min_exponents()
        f = {_sub_exp(e, shift_f): c for e, c in self.terms.items()}
        g = {_sub_exp(e, shift_g): c for e, c in divisor.terms.items()}
        g_lead = max(g)
        g_lc = g[g_lead]
        quotient = {}
        remainder = dict(f)
        while remainder:
            r_lead = max(remainder)
            t = _sub_exp(r_lead, g_lead)
            if any(x < 0 for x in t):
                raise ExactDivisionFailure("leading term not divisible")
            coeff = remainder[r_lead] / g_lc
            quotient[t] = coeff
            for g_exp, g_coeff in g.items():
                key = _add_exp(t, g_exp)
                val = remainder.get(key, Fraction(0)) - coeff * g_coeff
                if val:
                    remainder[key] = val
                else:
                    remainder.pop(key, None)
        offset = _sub_exp(shift_f, shift_g)
        return LaurentPoly(self.nvars,
                           {_add_exp(e, offset): c for e, c in quotient.items()})

    def exponent_map(self, matrix, new_nvars):
        """Monomial substitution x_i -> prod_j y_j^matrix[i][j]."""
        if len(matrix) != self.nvars:
            raise ValueError("substitution matrix has wrong row count")
        terms = {}
        for exps, coeff in self.terms.items():
            img = [0] * new_nvars
            for i, e in enumerate(exps):
                if e:
                    row = matrix[i]
                    for j in range(new_nvars):
                        img[j] += e * row[j]
            key = tuple(img)
            val = terms.get(key, Fraction(0)) + coeff
            if val:
                terms[key] = val
            else:
                terms.pop(key, None)
        return LaurentPoly(new_nvars, terms)

    def evaluate(self, point):
        """Exact evaluation at a tuple of nonzero Fractions."""
        values = [Fraction(x) for x in point]
        if len(values) != self.nvars:
            raise ValueError("point has wrong length")
        total = Fraction(0)
        for exps, coeff in self.terms.items():
            term = coeff
            for val, e in zip(values, exps):
                if e:
                    term *= val ** e
            total += term
        return total

    # -- serialization -------------------------------------------------------------

    def to_json_obj(self):
        return [[list(exps), str(self.terms[exps])] for exps in sorted(self.terms)]

    @classmethod
    def from_json_obj(cls, obj, nvars):
        return cls(nvars, {tuple(exps): Fraction(text) for exps, text in obj})
