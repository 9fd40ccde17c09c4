"""Diagonal coinvariants via the exact Groebner engine.

The ideal of invariants with zero constant term is generated (by Weyl
polarization) by the polarized power sums p_{h,k} = sum_r x_r^h y_r^k
with 1 <= h+k <= n. The quotient's standard-monomial basis gives the
bigraded dimensions, the antiinvariant (Catalan) dimensions, and the
bigraded character decomposition.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from . import groebner
from .characters import (
    class_representative,
    class_size,
    conjugacy_classes,
    mn_character,
    sign_of_class,
)
from .groebner import ResourceCapExceeded, grevlex_key
from .multipoly import MultiPoly
from .symfunc import elementary_symmetric
from .tableaux import Partition

DEFAULT_N_CAP = 4


def diagonal_invariant_generators(n):
    """Polarized power sums p_{h,k} with 1 <= h+k <= n, as MultiPoly.

    Variables: x_1..x_n then y_1..y_n. There are n(n+3)/2 generators;
    all are invariant under the diagonal action.
    """
    if n < 1:
        raise ValueError("n must be positive")
    nvars = 2 * n
    gens = []
    for d in range(1, n + 1):
        for h in range(d, -1, -1):
            k = d - h
            p = MultiPoly.zero(nvars)
            for r in range(n):
                exps = [0] * nvars
                exps[r] = h
                exps[n + r] = k
                key = tuple(exps)
                p.terms[key] = p.terms.get(key, Fraction(0)) + 1
            gens.append(p)
    return gens


def groebner_basis(generators, spair_budget=groebner.DEFAULT_SPAIR_BUDGET):
    """Reduced monic Groebner basis (grevlex, x block before y block)."""
    if not generators:
        raise ValueError("empty generator list")
    nvars = generators[0].nvars
    raw = [groebner.from_multipoly(g) for g in generators]
    gb = groebner.buchberger(raw, spair_budget)
    return [groebner.to_multipoly(g, nvars) for g in gb]


@lru_cache(maxsize=8)
def _diagonal_quotient(n, spair_budget=groebner.DEFAULT_SPAIR_BUDGET):
    """(integer GB, standard monomials) for the diagonal ideal of S_n."""
    if n > DEFAULT_N_CAP:
        raise ResourceCapExceeded(
            f"diagonal coinvariants capped at n={DEFAULT_N_CAP}"
        )
    gens = [groebner.from_multipoly(g) for g in diagonal_invariant_generators(n)]
    gb = groebner.buchberger(gens, spair_budget)
    std = groebner.standard_monomials(gb, 2 * n)
    return gb, std


def bigraded_dimensions(n):
    """dim of each bidegree (x-degree, y-degree) of the diagonal quotient."""
    _, std = _diagonal_quotient(n)
    dims = {}
    for m in std:
        bd = (sum(m[:n]), sum(m[n:]))
        dims[bd] = dims.get(bd, 0) + 1
    return dims


def total_dimension(n):
    _, std = _diagonal_quotient(n)
    return len(std)


def _quotient_traces(n):
    """Exact trace of one representative per cycle type on each bidegree."""
    gb, std = _diagonal_quotient(n)
    std_index = {m: i for i, m in enumerate(std)}
    buckets = {}
    for m in std:
        bd = (sum(m[:n]), sum(m[n:]))
        buckets.setdefault(bd, []).append(m)
    traces = {bd: {} for bd in buckets}
    for rho in conjugacy_classes(n):
        perm = class_representative(rho, n)
        for bd, monos in buckets.items():
            tr = Fraction(0)
            for m in monos:
                e2 = [0] * (2 * n)
                for i in range(n):
                    e2[perm[i]] = m[i]
                    e2[n + perm[i]] = m[n + i]
                moved = tuple(e2)
                if moved in std_index:
                    if moved == m:
                        tr += 1
                    continue
                nf = groebner.normal_form({moved: 1}, gb)
                tr += nf.get(m, Fraction(0))
            assert tr.denominator == 1
            traces[bd][rho] = int(tr)
    return traces


def character_multiplicities(n):
    """dict (bidegree, lam) -> multiplicity of M_lam in that bidegree."""
    traces = _quotient_traces(n)
    order = factorial(n)
    classes = [(rho, class_size(rho)) for rho in conjugacy_classes(n)]
    out = {}
    for bd, tr in traces.items():
        for lam in conjugacy_classes(n):
            total = sum(
                size * mn_character(lam, rho) * tr[rho]
                for rho, size in classes
            )
            if total % order != 0 or total < 0:
                raise ArithmeticError(
                    f"non-integral multiplicity at {bd}, {lam}"
                )
            if total:
                out[(bd, Partition(lam))] = total // order
    return out


def antiinvariant_dimensions(n):
    """Sign-isotypic dimension per bidegree, plus the Catalan total."""
    traces = _quotient_traces(n)
    order = factorial(n)
    classes = [(rho, class_size(rho)) for rho in conjugacy_classes(n)]
    dims = {}
    for bd, tr in traces.items():
        total = sum(
            size * sign_of_class(rho) * tr[rho] for rho, size in classes
        )
        assert total % order == 0 and total >= 0
        d = total // order
        if d:
            dims[bd] = d
    return dims, sum(dims.values())


def catalan(n):
    return comb(2 * n, n) // (n + 1)


def count_parking_functions(n):
    """Number of parking functions of length n, by exact multiset counting.

    Sums n!/prod(c_v!) over value-count vectors (c_1..c_n) whose partial
    sums satisfy c_1+...+c_i >= i; independent of the (n+1)^{n-1}
    formula it is checked against.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > 9:
        raise ValueError("parking function count capped at n=9")
    if n == 0:
        return 1
    total = Fraction(0)

    def rec(v, placed, weight):
        nonlocal total
        if v == n:
            if placed == n:
                total += weight
            return
        # Choose c_{v+1}; the prefix sum must reach at least v+1.
        for c in range(n - placed + 1):
            if placed + c >= v + 1:
                rec(v + 1, placed + c, weight / factorial(c))

    rec(0, 0, Fraction(1))
    result = total * factorial(n)
    assert result.denominator == 1
    return int(result)


def single_set_quotient(n):
    """The one-variable-set degeneration: C[x]/(e_1..e_n).

    Returns (groebner basis, standard monomials); dim must be n! and the
    graded dimensions must match the q-analogue of n!.
    """
    gens = [
        groebner.from_multipoly(elementary_symmetric(k, n))
        for k in range(1, n + 1)
    ]
    gb = groebner.buchberger(gens)
    std = groebner.standard_monomials(gb, n)
    return gb, std
