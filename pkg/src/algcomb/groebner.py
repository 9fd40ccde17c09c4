"""A small exact Buchberger engine over the rationals.

Internally polynomials are primitive integer dicts (exponent tuple ->
int); the public surface speaks MultiPoly. Monomial order is graded
reverse lexicographic. S-pair processing uses the Gebauer-Moeller
product and chain criteria, with an explicit S-pair budget so resource
exhaustion fails loudly instead of truncating silently.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .linalg import make_primitive
from .multipoly import MultiPoly

DEFAULT_SPAIR_BUDGET = 200_000


class ResourceCapExceeded(RuntimeError):
    pass


def grevlex_key(m):
    """Sort key: max() under this key is the grevlex-largest monomial."""
    return (sum(m), tuple(-e for e in reversed(m)))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _mono_mul(m, e):
    return tuple(x + y for x, y in zip(m, e))


def _lead(poly):
    return max(poly, key=grevlex_key)


def _spoly(f, g, lf, lg):
    l = _lcm(lf, lg)
    mf = tuple(a - b for a, b in zip(l, lf))
    mg = tuple(a - b for a, b in zip(l, lg))
    cf, cg = f[lf], g[lg]
    d = gcd(cf, cg)
    af, ag = cg // d, cf // d
    out = {}
    for e, c in f.items():
        out[_mono_mul(e, mf)] = c * af
    for e, c in g.items():
        k = _mono_mul(e, mg)
        v = out.get(k, 0) - c * ag
        if v:
            out[k] = v
        else:
            out.pop(k, None)
    return out


def _reduce(poly, basis, leads):
    """Full multivariate reduction, fraction-free over the integers."""
    poly = dict(poly)
    tail = {}
    while poly:
        lm = _lead(poly)
        reducer = None
        for i, lt in enumerate(leads):
            if _divides(lt, lm):
                reducer = i
                break
        if reducer is None:
            tail[lm] = poly.pop(lm)
            continue
        g = basis[reducer]
        lg = leads[reducer]
        shift = tuple(a - b for a, b in zip(lm, lg))
        a, b = poly[lm], g[lg]
        d = gcd(a, b)
        ra, rb = b // d, a // d
        if ra != 1:
            poly = {e: c * ra for e, c in poly.items()}
            if tail:
                tail = {e: c * ra for e, c in tail.items()}
        for e, c in g.items():
            k = _mono_mul(e, shift)
            v = poly.get(k, 0) - c * rb
            if v:
                poly[k] = v
            else:
                poly.pop(k, None)
    return make_primitive(tail) if tail else {}


def buchberger(generators, spair_budget=DEFAULT_SPAIR_BUDGET):
    """Reduced Groebner basis (primitive integer polys, positive leads)."""
    basis = []
    for g in generators:
        g = make_primitive({e: c for e, c in g.items() if c})
        if g:
            basis.append(g)
    if not basis:
        return []
    leads = [_lead(g) for g in basis]

    pairs = set()

    def add_pairs(j):
        ltj = leads[j]
        for i in range(j):
            pairs.add((i, j))
        # Product criterion: drop pairs with coprime leading monomials.
        for i in range(j):
            if all(a == 0 or b == 0 for a, b in zip(leads[i], ltj)):
                pairs.discard((i, j))

    for j in range(len(basis)):
        add_pairs(j)

    processed = 0
    while pairs:
        # Normal strategy: smallest lcm degree first.
        i, j = min(
            pairs, key=lambda p: grevlex_key(_lcm(leads[p[0]], leads[p[1]]))
        )
        pairs.discard((i, j))
        processed += 1
        if processed > spair_budget:
            raise ResourceCapExceeded(
                f"S-pair budget {spair_budget} exhausted"
            )
        l = _lcm(leads[i], leads[j])
        # Chain criterion.
        skip = False
        for k in range(len(basis)):
            if k in (i, j):
                continue
            if _divides(leads[k], l):
                p1 = (min(i, k), max(i, k))
                p2 = (min(j, k), max(j, k))
                if p1 not in pairs and p2 not in pairs:
                    skip = True
                    break
        if skip:
            continue
        s = _spoly(basis[i], basis[j], leads[i], leads[j])
        r = _reduce(s, basis, leads)
        if r:
            basis.append(r)
            leads.append(_lead(r))
            add_pairs(len(basis) - 1)

    # Minimalize: drop members whose lead is divisible by another lead.
    keep = []
    for i, g in enumerate(basis):
        if any(
            j != i
            and _divides(leads[j], leads[i])
            and (leads[j] != leads[i] or j < i)
            for j in range(len(basis))
        ):
            continue
        keep.append(i)
    minimal = [basis[i] for i in keep]
    # Inter-reduce tails.
    reduced = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        other_leads = [_lead(h) for h in others]
        r = _reduce(g, others, other_leads) if others else make_primitive(g)
        if r[_lead(r)] < 0:
            r = {e: -c for e, c in r.items()}
        reduced.append(r)
    reduced.sort(key=lambda g: grevlex_key(_lead(g)))
    return reduced


def normal_form(poly, basis):
    """Normal form of an integer-dict polynomial against a GB, over Q.

    Returns a dict exponent -> Fraction (input coefficients may be
    Fraction as well).
    """
    work = {e: Fraction(c) for e, c in poly.items() if c}
    leads = [_lead(g) for g in basis]
    out = {}
    while work:
        lm = max(work, key=grevlex_key)
        reducer = None
        for i, lt in enumerate(leads):
            if _divides(lt, lm):
                reducer = i
                break
        if reducer is None:
            out[lm] = work.pop(lm)
            continue
        g = basis[reducer]
        shift = tuple(a - b for a, b in zip(lm, leads[reducer]))
        coeff = work[lm] / g[leads[reducer]]
        for e, c in g.items():
            k = _mono_mul(e, shift)
            v = work.get(k, 0) - coeff * c
            if v:
                work[k] = v
            else:
                work.pop(k, None)
    return out


def standard_monomials(basis, nvars, cap=1_000_000):
    """Monomials outside the leading-term ideal, by divisibility-closed BFS.

    Raises ResourceCapExceeded if the quotient is not finite-dimensional
    within the cap.
    """
    leads = [_lead(g) for g in basis]
    zero = (0,) * nvars
    if any(lt == zero for lt in leads):
        return []
    seen = {zero}
    queue = [zero]
    out = []
    while queue:
        m = queue.pop()
        if any(_divides(lt, m) for lt in leads):
            continue
        out.append(m)
        if len(out) > cap:
            raise ResourceCapExceeded("standard monomial cap exceeded")
        for i in range(nvars):
            m2 = m[:i] + (m[i] + 1,) + m[i + 1:]
            if m2 not in seen:
                seen.add(m2)
                queue.append(m2)
    return sorted(out, key=grevlex_key)


def to_multipoly(poly, nvars, monic=True):
    p = MultiPoly(nvars, {e: Fraction(c) for e, c in poly.items()})
    if monic and p.terms:
        lead = max(p.terms, key=grevlex_key)
        p = p * (1 / p.terms[lead])
    return p


def from_multipoly(p):
    denom = 1
    for c in p.terms.values():
        denom = denom * c.denominator // gcd(denom, c.denominator)
    return make_primitive({e: int(c * denom) for e, c in p.terms.items()})
