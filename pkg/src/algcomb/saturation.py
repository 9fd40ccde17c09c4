"""Saturation scans, Horn inequality systems, and the spectra equivalence.

The Horn systems for n = 2 and n = 3 are hardcoded transcriptions of the
published inequality lists (the min() displays expanded into individual
inequalities); together with the trace equality they characterize the
eigenvalue triples of hermitian A + B = C at these sizes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .symfunc import lr_coefficient
from .tableaux import Partition, enumerate_partitions


@dataclass(frozen=True)
class HornSystem:
    n: int
    # Each inequality is (K, I, J): sum_{k in K} gamma_k <= sum_I alpha + sum_J beta.
    inequalities: tuple = field(default_factory=tuple)


# 1-based index sets, transcribed verbatim.
_HORN_2 = (
    ((1,), (1,), (1,)),
    ((2,), (2,), (1,)),
    ((2,), (1,), (2,)),
)

_HORN_3 = (
    ((1,), (1,), (1,)),
    ((2,), (1,), (2,)),
    ((2,), (2,), (1,)),
    ((3,), (1,), (3,)),
    ((3,), (2,), (2,)),
    ((3,), (3,), (1,)),
    ((1, 2), (1, 2), (1, 2)),
    ((1, 3), (1, 2), (1, 3)),
    ((1, 3), (1, 3), (1, 2)),
    ((2, 3), (1, 2), (2, 3)),
    ((2, 3), (1, 3), (1, 3)),
    ((2, 3), (2, 3), (1, 2)),
)


def horn_system(n):
    """The hardcoded Horn system for n in {2, 3} (3 resp. 12 inequalities)."""
    if n == 2:
        return HornSystem(2, _HORN_2)
    if n == 3:
        return HornSystem(3, _HORN_3)
    raise ValueError(f"Horn system only available for n in {{2, 3}}, got {n}")


def _check_sorted(v, name):
    v = [Fraction(x) for x in v]
    if any(a < b for a, b in zip(v, v[1:])):
        raise ValueError(f"{name} is not weakly decreasing: {v}")
    return v


def horn_feasible(alpha, beta, gamma):
    """Exact trace equality plus all Horn inequalities for n in {2, 3}."""
    n = len(alpha)
    if not (len(beta) == len(gamma) == n):
        raise ValueError("spectra must share one length")
    system = horn_system(n)
    a = _check_sorted(alpha, "alpha")
    b = _check_sorted(beta, "beta")
    g = _check_sorted(gamma, "gamma")
    if sum(g) != sum(a) + sum(b):
        return False
    for K, I, J in system.inequalities:
        if sum(g[k - 1] for k in K) > sum(a[i - 1] for i in I) + sum(
            b[j - 1] for j in J
        ):
            return False
    return True


def hermitian_feasible_integer(alpha, beta, gamma):
    """Feasibility test for integer partition spectra: c_{alpha,beta}^gamma != 0."""
    a, b, g = Partition(alpha), Partition(beta), Partition(gamma)
    return lr_coefficient(a, b, g) != 0


def saturation_scan(size_bound=6, m_max=4):
    """Verify c_{m*mu, m*nu}^{m*lam} != 0 <=> c_{mu,nu}^{lam} != 0.

    Scans every triple with |lam| = |mu| + |nu| <= size_bound and every
    1 <= m <= m_max. Returns a report dict; the expected violation list
    is empty.
    """
    violations = []
    checked = 0
    for total in range(size_bound + 1):
        for lam in enumerate_partitions(total):
            for a in range(total + 1):
                for mu in enumerate_partitions(a):
                    for nu in enumerate_partitions(total - a):
                        base = lr_coefficient(mu, nu, lam) != 0
                        for m in range(1, m_max + 1):
                            scaled = (
                                lr_coefficient(
                                    mu.scale(m), nu.scale(m), lam.scale(m)
                                )
                                != 0
                            )
                            checked += 1
                            if scaled != base:
                                violations.append(
                                    {
                                        "mu": list(mu),
                                        "nu": list(nu),
                                        "lambda": list(lam),
                                        "m": m,
                                        "base_nonzero": base,
                                        "scaled_nonzero": scaled,
                                    }
                                )
    return {
        "size_bound": size_bound,
        "m_max": m_max,
        "checked": checked,
        "violations": sorted(
            violations,
            key=lambda v: (v["lambda"], v["mu"], v["nu"], v["m"]),
        ),
    }


def horn_lr_agreement(n, entry_bound=6):
    """Exhaustively compare horn_feasible with LR nonvanishing.

    Covers all weakly decreasing nonnegative integer vectors of length n
    with entries <= entry_bound. Returns (agree_count, disagreements).
    """
    if n not in (2, 3):
        raise ValueError("only n in {2, 3} supported")
    vectors = [
        v
        for v in product(range(entry_bound, -1, -1), repeat=n)
        if all(a >= b for a, b in zip(v, v[1:]))
    ]
    agree = 0
    disagreements = []
    for a in vectors:
        for b in vectors:
            sa, sb = sum(a), sum(b)
            for g in vectors:
                if sum(g) != sa + sb:
                    continue
                h = horn_feasible(a, b, g)
                c = hermitian_feasible_integer(a, b, g)
                if h == c:
                    agree += 1
                else:
                    disagreements.append((a, b, g, h, c))
    return agree, disagreements
