"""Sparse multivariate polynomials with exact rational coefficients.

Exponent vectors are dense fixed-arity integer tuples over a declared
variable universe of ``nvars`` variables. Zero coefficients are never
stored. Coefficients are ``fractions.Fraction`` (integers are accepted
and wrapped), so differentiation normalization and echelon reduction
stay exact.
"""

from __future__ import annotations

from fractions import Fraction


class MultiPoly:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        clean = {}
        if terms:
            for exps, coeff in terms.items():
                coeff = Fraction(coeff)
                if coeff:
                    if len(exps) != nvars:
                        raise ValueError(
                            f"exponent arity {len(exps)} != nvars {nvars}"
                        )
                    clean[tuple(exps)] = coeff
        self.terms = clean

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, nvars):
        return cls(nvars)

    @classmethod
    def constant(cls, nvars, c):
        p = cls(nvars)
        c = Fraction(c)
        if c:
            p.terms[(0,) * nvars] = c
        return p

    @classmethod
    def variable(cls, nvars, i):
        exps = [0] * nvars
        exps[i] = 1
        return cls(nvars, {tuple(exps): 1})

    @classmethod
    def monomial(cls, nvars, exps, coeff=1):
        return cls(nvars, {tuple(exps): coeff})

    # -- predicates ----------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(self.nvars, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self):
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    # -- arithmetic ----------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, (int, Fraction)):
            return MultiPoly.constant(self.nvars, other)
        if isinstance(other, MultiPoly):
            if other.nvars != self.nvars:
                raise ValueError("variable universes differ")
            return other
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        p = MultiPoly(self.nvars)
        p.terms = out
        return p

    __radd__ = __add__

    def __neg__(self):
        p = MultiPoly(self.nvars)
        p.terms = {e: -c for e, c in self.terms.items()}
        return p

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            p = MultiPoly(self.nvars)
            if other:
                p.terms = {e: c * other for e, c in self.terms.items()}
            return p
        if not isinstance(other, MultiPoly):
            return NotImplemented
        if other.nvars != self.nvars:
            raise ValueError("variable universes differ")
        out = {}
        small, big = self.terms, other.terms
        if len(small) > len(big):
            small, big = big, small
        for e1, c1 in small.items():
            for e2, c2 in big.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    del out[e]
        p = MultiPoly(self.nvars)
        p.terms = out
        return p

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        result = MultiPoly.constant(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- calculus and substitution --------------------------------------

    def differentiate(self, i):
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                e2 = e[:i] + (e[i] - 1,) + e[i + 1:]
                out[e2] = out.get(e2, 0) + c * e[i]
        p = MultiPoly(self.nvars)
        p.terms = {e: c for e, c in out.items() if c}
        return p

    def substitute(self, i, value):
        """Set variable i to a rational constant, keeping the arity."""
        value = Fraction(value)
        out = {}
        for e, c in self.terms.items():
            c2 = c * value ** e[i] if e[i] else c
            if not c2:
                continue
            e2 = e[:i] + (0,) + e[i + 1:]
            s = out.get(e2, 0) + c2
            if s:
                out[e2] = s
            else:
                out.pop(e2, None)
        p = MultiPoly(self.nvars)
        p.terms = out
        return p

    def drop_last_variable(self):
        """Set the last variable to 0 and shrink the universe by one."""
        out = {}
        for e, c in self.terms.items():
            if e[-1] == 0:
                out[e[:-1]] = c
        p = MultiPoly(self.nvars - 1)
        p.terms = out
        return p

    def widen(self, nvars):
        """Embed into a larger variable universe (new variables unused)."""
        if nvars < self.nvars:
            raise ValueError("cannot shrink universe")
        pad = (0,) * (nvars - self.nvars)
        p = MultiPoly(nvars)
        p.terms = {e + pad: c for e, c in self.terms.items()}
        return p

    def permute_variables(self, perm):
        """Apply x_i -> x_{perm[i]} (perm is a 0-based image list)."""
        out = {}
        for e, c in self.terms.items():
            e2 = [0] * self.nvars
            for i, exp in enumerate(e):
                e2[perm[i]] = exp
            out[tuple(e2)] = c
        p = MultiPoly(self.nvars)
        p.terms = out
        return p

    def evaluate(self, values):
        acc = Fraction(0)
        for e, c in self.terms.items():
            term = c
            for v, exp in zip(values, e):
                if exp:
                    term *= Fraction(v) ** exp
            acc += term
        return acc

    def coefficient(self, exps):
        return self.terms.get(tuple(exps), Fraction(0))

    def __repr__(self):
        if not self.terms:
            return "MultiPoly(0)"
        bits = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "*".join(
                f"x{i}^{k}" if k > 1 else f"x{i}"
                for i, k in enumerate(e) if k
            )
            bits.append(f"{c}" + (f"*{mono}" if mono else ""))
        return "MultiPoly(" + " + ".join(bits) + ")"
