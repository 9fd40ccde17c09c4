"""Symmetric group conjugacy classes and irreducible characters.

Characters are computed with the border-strip (Murnaghan-Nakayama)
recursion; class sizes come straight from cycle types. These are the
standard tools needed to decompose graded traces into irreducible
multiplicities.
"""

from __future__ import annotations

from functools import lru_cache
from math import factorial

from .tableaux import Partition, enumerate_partitions


def conjugacy_classes(n):
    """Cycle types of S_n in reverse lexicographic order."""
    return enumerate_partitions(n)


def class_size(rho):
    """Number of permutations with cycle type rho."""
    rho = Partition(rho)
    n = rho.size
    z = 1
    mult = {}
    for part in rho:
        mult[part] = mult.get(part, 0) + 1
    for part, m in mult.items():
        z *= part**m * factorial(m)
    return factorial(n) // z


def sign_of_class(rho):
    """Sign character value on cycle type rho."""
    return (-1) ** (Partition(rho).size - len(rho))


def class_representative(rho, n=None):
    """A 0-based permutation image list with cycle type rho."""
    rho = Partition(rho)
    n = n or rho.size
    perm = list(range(n))
    pos = 0
    for part in rho:
        for i in range(part):
            perm[pos + i] = pos + (i + 1) % part
        pos += part
    return perm


@lru_cache(maxsize=None)
def mn_character(lam, rho):
    """Irreducible character chi^lam(rho) via border-strip removal."""
    lam, rho = Partition(lam), Partition(rho)
    if lam.size != rho.size:
        raise ValueError("partition sizes differ")
    if lam.size == 0:
        return 1
    k = rho[0]
    rest = Partition(rho[1:])
    total = 0
    for smaller, height in _border_strip_removals(lam, k):
        total += (-1) ** height * mn_character(smaller, rest)
    return total


def _border_strip_removals(lam, k):
    """All ways to remove a border strip of size k from lam.

    Yields (remaining shape, strip height). Uses the beta-number trick:
    strips of size k correspond to first-column hook lengths h with
    h - k also a valid (nonnegative, unused) beta number.
    """
    lam = list(lam)
    ell = len(lam)
    betas = [lam[i] + (ell - 1 - i) for i in range(ell)]
    beta_set = set(betas)
    for i, b in enumerate(betas):
        nb = b - k
        if nb < 0 or nb in beta_set:
            continue
        new_betas = sorted(
            [x for j, x in enumerate(betas) if j != i] + [nb], reverse=True
        )
        # Height of the strip = number of betas strictly between nb and b.
        height = sum(1 for x in betas if nb < x < b)
        parts = [nb2 - (ell - 1 - j) for j, nb2 in enumerate(new_betas)]
        yield Partition(parts), height
