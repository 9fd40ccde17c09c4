"""Schur polynomials, Kostka numbers, and Littlewood-Richardson coefficients.

Two fully independent routes to the LR numbers live here: direct
enumeration of LR skew tableaux (lattice-word counting) and expansion of
Schur products by triangular elimination against tableau-generated Schur
polynomials. Their agreement is one of the project's acceptance gates.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .multipoly import MultiPoly
from .tableaux import Partition

DEFAULT_DEGREE_CAP = 12


def elementary_symmetric(k, n_vars):
    """e_k(x_1..x_n). Zero polynomial when k > n_vars."""
    from itertools import combinations

    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return MultiPoly.constant(n_vars, 1)
    p = MultiPoly.zero(n_vars)
    for combo in combinations(range(n_vars), k):
        exps = [0] * n_vars
        for i in combo:
            exps[i] = 1
        p.terms[tuple(exps)] = Fraction(1)
    return p


def _ssyt_contents(lam, n_vars, content=None):
    """Yield content vectors of semistandard tableaux of shape lam.

    Entries are 1..n_vars; rows weakly increase, columns strictly
    increase. If ``content`` is given, only fillings with exactly that
    content are produced.
    """
    lam = Partition(lam)
    rows = [list() for _ in lam]
    counts = [0] * (n_vars + 1)
    target = None
    if content is not None:
        target = list(content) + [0] * (n_vars - len(content))

    cells = [(i, j) for i in range(len(lam)) for j in range(lam[i])]

    def rec(idx):
        if idx == len(cells):
            yield tuple(counts[1:])
            return
        i, j = cells[idx]
        lo = 1
        if j > 0:
            lo = max(lo, rows[i][j - 1])
        if i > 0:
            lo = max(lo, rows[i - 1][j] + 1)
        for v in range(lo, n_vars + 1):
            if target is not None and counts[v] >= target[v - 1]:
                continue
            rows[i].append(v)
            counts[v] += 1
            yield from rec(idx + 1)
            counts[v] -= 1
            rows[i].pop()

    yield from rec(0)


@lru_cache(maxsize=None)
def schur_poly(lam, n_vars, degree_cap=DEFAULT_DEGREE_CAP):
    """Schur polynomial s_lam(x_1..x_n) as the semistandard content sum.

    Returns the zero polynomial when the shape has more rows than
    variables (stability convention).
    """
    lam = Partition(lam)
    if degree_cap is not None and lam.size > degree_cap:
        raise ValueError(
            f"|lambda|={lam.size} exceeds degree cap {degree_cap}; "
            "pass degree_cap explicitly to override"
        )
    if len(lam) > n_vars:
        return MultiPoly.zero(n_vars)
    p = MultiPoly.zero(n_vars)
    for content in _ssyt_contents(lam, n_vars):
        p.terms[content] = p.terms.get(content, Fraction(0)) + 1
    return p


def schur_poly_bialternant(lam, n_vars):
    """s_lam via the ratio of alternants det(x_i^{lam_j+n-j}) / det(x_i^{n-j}).

    Independent of the tableau route; intended for cross-checks at small
    sizes (the alternants have n_vars! terms).
    """
    from itertools import permutations

    lam = Partition(lam)
    if len(lam) > n_vars:
        return MultiPoly.zero(n_vars)
    padded = list(lam) + [0] * (n_vars - len(lam))
    exps_num = [padded[j] + n_vars - 1 - j for j in range(n_vars)]
    exps_den = [n_vars - 1 - j for j in range(n_vars)]

    def alternant(powers):
        p = MultiPoly.zero(n_vars)
        for perm in permutations(range(n_vars)):
            sign = _perm_sign(perm)
            e = tuple(powers[perm[i]] for i in range(n_vars))
            p.terms[e] = p.terms.get(e, Fraction(0)) + sign
        p.terms = {e: c for e, c in p.terms.items() if c}
        return p

    return _exact_divide(alternant(exps_num), alternant(exps_den))


def _perm_sign(perm):
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, clen = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            clen += 1
        if clen % 2 == 0:
            sign = -sign
    return sign


def _exact_divide(num, den):
    """Divide polynomials known to divide exactly (leading-term descent)."""
    if den.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    quotient = MultiPoly.zero(num.nvars)
    den_lead = max(den.terms)
    den_coeff = den.terms[den_lead]
    rem = num
    while rem.terms:
        lead = max(rem.terms)
        q_exp = tuple(a - b for a, b in zip(lead, den_lead))
        if any(e < 0 for e in q_exp):
            raise ArithmeticError("polynomials do not divide exactly")
        q_coeff = rem.terms[lead] / den_coeff
        quotient.terms[q_exp] = q_coeff
        rem = rem - MultiPoly.monomial(num.nvars, q_exp, q_coeff) * den
    return quotient


def kostka(lam, mu):
    """Kostka number K_{lam,mu}: SSYT of shape lam and content mu."""
    lam, mu = Partition(lam), Partition(mu)
    if lam.size != mu.size:
        return 0
    n_vars = max(len(mu), 1)
    return sum(1 for _ in _ssyt_contents(lam, n_vars, content=mu))


@lru_cache(maxsize=None)
def lr_coefficient(mu, nu, lam):
    """c_{mu,nu}^{lam}: LR skew tableaux of shape lam/mu and content nu.

    Cells are filled in reverse reading order (right-to-left within each
    row, rows top-to-bottom) so the lattice-word condition can be checked
    incrementally: after each placement of v >= 2 the running count of v
    must not exceed that of v-1.
    """
    mu, nu, lam = Partition(mu), Partition(nu), Partition(lam)
    if lam.size != mu.size + nu.size:
        return 0
    if not lam.contains(mu):
        return 0
    if nu.size == 0:
        return 1 if lam == mu else 0
    nrows = len(lam)
    mu_pad = list(mu) + [0] * (nrows - len(mu))
    maxval = len(nu)
    counts = [0] * (maxval + 1)
    fill = [dict() for _ in range(nrows)]

    cells = []
    for i in range(nrows):
        for j in range(lam[i] - 1, mu_pad[i] - 1, -1):
            cells.append((i, j))

    total = 0

    def rec(idx):
        nonlocal total
        if idx == len(cells):
            total += 1
            return
        i, j = cells[idx]
        lo, hi = 1, maxval
        if j + 1 < lam[i] and j + 1 >= mu_pad[i]:
            hi = min(hi, fill[i][j + 1])  # row weakly increasing
        if i > 0 and j < lam[i - 1] and j >= mu_pad[i - 1]:
            lo = max(lo, fill[i - 1][j] + 1)  # column strict
        elif i > 0 and j < mu_pad[i - 1]:
            pass  # cell above is in mu: no constraint from above
        for v in range(lo, hi + 1):
            if counts[v] >= nu[v - 1]:
                continue
            if v > 1 and counts[v] >= counts[v - 1]:
                continue  # lattice condition would fail
            counts[v] += 1
            fill[i][j] = v
            rec(idx + 1)
            del fill[i][j]
            counts[v] -= 1

    rec(0)
    return total


def is_symmetric(p, rounds=None):
    """Check symmetry under all adjacent transpositions (exact)."""
    n = p.nvars
    for i in range(n - 1):
        perm = list(range(n))
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
        if p.permute_variables(perm) != p:
            return False
    return True


def schur_expand(p, degree_cap=DEFAULT_DEGREE_CAP):
    """Expand a symmetric polynomial in the Schur basis.

    Returns a dict Partition -> Fraction in the Schur basis of the
    polynomial's own variable count: partitions with more rows than
    variables have vanishing Schur polynomial and cannot appear, so
    expanding a product of n-variable Schur polynomials captures only
    shapes of length at most n. Raises ValueError on non-symmetric
    input; reconstruction is verified.
    """
    if not is_symmetric(p):
        raise ValueError("polynomial is not symmetric in its variables")
    n_vars = p.nvars
    work = p
    original = work
    expansion = {}
    while work.terms:
        lead = max(
            (tuple(sorted(e, reverse=True)) for e in work.terms),
        )
        lam = Partition(lead)
        coeff = work.terms.get(lead + (0,) * (n_vars - len(lead)), None)
        if coeff is None:
            raise ArithmeticError("triangular elimination lost its pivot")
        expansion[lam] = coeff
        work = work - coeff * schur_poly(lam, n_vars, degree_cap)
    # Reconstruction must reproduce the input exactly.
    check = MultiPoly.zero(n_vars)
    for lam, c in expansion.items():
        check = check + c * schur_poly(lam, n_vars, degree_cap)
    if check != original:
        raise ArithmeticError("Schur expansion failed to reconstruct input")
    return expansion
