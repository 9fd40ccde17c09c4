"""Derivative spans and the determinants behind the n! theorem.

The span of a polynomial and all its partial derivatives is built as an
integer echelon basis, closed top-down by bidegree. Graded traces of the
symmetric group action on a span are computed exactly and decomposed
into irreducible multiplicities with the border-strip characters.

Variable convention for two-set polynomials: 2n variables, x_1..x_n
first, then y_1..y_n; the bidegree of a monomial is (x-degree, y-degree).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import factorial

from .characters import (
    class_representative,
    class_size,
    conjugacy_classes,
    mn_character,
)
from .linalg import IntEchelon, make_primitive
from .multipoly import MultiPoly
from .tableaux import Partition, diagram_coords


def vandermonde(n, nvars=None, offset=0):
    """V_n = prod_{i<j} (x_i - x_j) over variables offset..offset+n-1."""
    if n < 1:
        raise ValueError("n must be positive")
    nvars = nvars or n
    p = MultiPoly.constant(nvars, 1)
    for i in range(n):
        for j in range(i + 1, n):
            p = p * (
                MultiPoly.variable(nvars, offset + i)
                - MultiPoly.variable(nvars, offset + j)
            )
    return p


def gh_determinant(cells, n):
    """The n x n determinant |x_r^{i_s} y_r^{j_s}| over x_1..x_n,y_1..y_n.

    ``cells`` is a list of n distinct (i, j) pairs; for the diagram of a
    partition in row-major order this is the generalized Vandermonde
    determinant of the n! theorem. The sign depends on the cell order;
    the derivative span does not.
    """
    cells = list(cells)
    if len(cells) != n:
        raise ValueError(f"need exactly {n} cells, got {len(cells)}")
    if len(set(cells)) != n:
        raise ValueError("repeated cells give a zero determinant")
    nvars = 2 * n
    det = MultiPoly.zero(nvars)
    for perm in permutations(range(n)):
        sign = _perm_sign(perm)
        exps = [0] * nvars
        for r in range(n):
            i, j = cells[perm[r]]
            exps[r] = i
            exps[n + r] = j
        key = tuple(exps)
        det.terms[key] = det.terms.get(key, Fraction(0)) + sign
    det.terms = {e: c for e, c in det.terms.items() if c}
    return det


def _perm_sign(perm):
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j = i
        clen = 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            clen += 1
        if clen % 2 == 0:
            sign = -sign
    return sign


def _poly_to_introw(p):
    """Clear denominators: MultiPoly -> primitive integer row dict."""
    denom = 1
    for c in p.terms.values():
        denom = denom * c.denominator // __import__("math").gcd(
            denom, c.denominator
        )
    row = {e: int(c * denom) for e, c in p.terms.items()}
    return make_primitive(row)


def _monomial_order(exps):
    return (sum(exps), exps)


class GradedSpan:
    """Echelon basis of a derivative-closed space, bucketed by bidegree.

    nx is the size of the x block; the remaining variables are y's.
    For one-set spans nx equals nvars and every bidegree has j = 0.
    """

    def __init__(self, nvars, nx, echelon, bidegree_of_pivot):
        self.nvars = nvars
        self.nx = nx
        self.echelon = echelon
        self._bidegree = bidegree_of_pivot

    @property
    def dimension(self):
        return len(self.echelon.rows)

    def bigraded_dimensions(self):
        dims = {}
        for piv in self.echelon.rows:
            bd = self._bidegree[piv]
            dims[bd] = dims.get(bd, 0) + 1
        return dims

    def graded_dimensions(self):
        dims = {}
        for (i, j), d in self.bigraded_dimensions().items():
            dims[i + j] = dims.get(i + j, 0) + d
        return dims

    def rows_by_bidegree(self):
        buckets = {}
        for piv, row in self.echelon.rows.items():
            buckets.setdefault(self._bidegree[piv], []).append(row)
        return buckets


def _bidegree(exps, nx):
    return (sum(exps[:nx]), sum(exps[nx:]))


def derivative_span(p, nx=None):
    """Closure of p under all partial derivatives, as a GradedSpan.

    Rows are stored in one global echelon so the total dimension is
    correct for any input; per-bidegree dimensions are meaningful when p
    is bihomogeneous (every derivative then is too).
    """
    if p.is_zero():
        raise ValueError("zero polynomial has no derivative span")
    nvars = p.nvars
    nx = nvars if nx is None else nx
    echelon = IntEchelon(key_order=_monomial_order)
    bidegree_of_pivot = {}

    def bidegree_of_row(row):
        bds = {_bidegree(e, nx) for e in row}
        if len(bds) == 1:
            return next(iter(bds))
        # Mixed row (inhomogeneous input): tag by the pivot monomial.
        piv = max(row, key=_monomial_order)
        return _bidegree(piv, nx)

    queue = [_poly_to_introw(p)]
    while queue:
        row = queue.pop()
        stored = echelon.add(row)
        if stored is None:
            continue
        piv = max(stored, key=_monomial_order)
        bidegree_of_pivot[piv] = bidegree_of_row(stored)
        for i in range(nvars):
            deriv = {}
            for e, c in stored.items():
                if e[i]:
                    e2 = e[:i] + (e[i] - 1,) + e[i + 1:]
                    deriv[e2] = deriv.get(e2, 0) + c * e[i]
            deriv = {e: c for e, c in deriv.items() if c}
            if deriv:
                queue.append(deriv)
    return GradedSpan(nvars, nx, echelon, bidegree_of_pivot)


class CharacterTable:
    """Exact traces of the diagonal S_n action, per bidegree and class."""

    def __init__(self, n, traces):
        self.n = n
        self.traces = traces  # dict bidegree -> dict cycle-type -> int

    def bidegrees(self):
        return sorted(self.traces)

    def total_trace(self, rho):
        return sum(t[Partition(rho)] for t in self.traces.values())

    def dimension(self, bidegree):
        return self.traces[bidegree][Partition((1,) * self.n)]


def _permute_row(row, perm, nvars, nx):
    """Diagonal action: x_i -> x_{perm(i)}, y_i -> y_{perm(i)}."""
    out = {}
    for e, c in row.items():
        e2 = [0] * nvars
        for i in range(nx):
            e2[perm[i]] = e[i]
        ny = nvars - nx
        for i in range(ny):
            e2[nx + perm[i]] = e[nx + i]
        out[tuple(e2)] = c
    return out


def graded_character(span, n):
    """Trace of one representative per cycle type on every bidegree.

    Requires the span to be invariant under the diagonal action (the
    permuted basis rows must reduce to zero against the echelon); raises
    ValueError otherwise.
    """
    nvars, nx = span.nvars, span.nx
    if nx != n or (nvars != n and nvars != 2 * n):
        raise ValueError("span variable layout does not match S_n action")
    buckets = span.rows_by_bidegree()
    traces = {bd: {} for bd in buckets}
    for rho in conjugacy_classes(n):
        perm = class_representative(rho, n)
        for bd, rows in buckets.items():
            tr = Fraction(0)
            for row in rows:
                moved = _permute_row(row, perm, nvars, nx)
                try:
                    coords = span.echelon.coordinates(moved)
                except ValueError:
                    raise ValueError(
                        "span is not invariant under the diagonal action"
                    )
                piv = max(row, key=_monomial_order)
                tr += coords.get(piv, Fraction(0))
            assert tr.denominator == 1
            traces[bd][rho] = int(tr)
    return CharacterTable(n, traces)


def irreducible_multiplicities(table):
    """Decompose each bidegree character: dict (bidegree, lam) -> mult."""
    n = table.n
    order = factorial(n)
    out = {}
    classes = [(rho, class_size(rho)) for rho in conjugacy_classes(n)]
    for bd, tr in table.traces.items():
        for lam in conjugacy_classes(n):
            total = sum(size * mn_character(lam, rho) * tr[rho]
                        for rho, size in classes)
            if total % order != 0 or total < 0:
                raise ArithmeticError(
                    f"non-integral multiplicity at {bd}, {lam}"
                )
            mult = total // order
            if mult:
                out[(bd, lam)] = mult
    return out


@lru_cache(maxsize=32)
def coinvariant_span(n):
    """The one-set model: derivative span of V_n."""
    return derivative_span(vandermonde(n))


@lru_cache(maxsize=32)
def gh_span(mu):
    """Derivative span of D_mu (cells in row-major diagram order)."""
    mu = Partition(mu)
    n = mu.size
    return derivative_span(gh_determinant(diagram_coords(mu), n), nx=n)
