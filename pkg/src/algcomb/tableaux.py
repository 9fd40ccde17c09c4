"""Partitions, Young diagrams, standard tableaux, hooks, and the major index.

Everything here is a value object: partitions are tuples of positive
integers in weakly decreasing order, tableaux are tuples of row tuples.
All counting uses Python integers, so nothing overflows.
"""

from __future__ import annotations

from functools import lru_cache
from math import factorial

from .univariate import IntPolynomial


class Partition(tuple):
    """Weakly decreasing tuple of positive integers; trailing zeros stripped."""

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts if p != 0)
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts not weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise ValueError(f"negative part in {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self):
        return sum(self)

    @property
    def length(self):
        return len(self)

    def conjugate(self):
        if not self:
            return Partition()
        return Partition(
            sum(1 for p in self if p >= j + 1) for j in range(self[0])
        )

    def contains(self, other):
        """Diagram containment: other fits inside self."""
        if len(other) > len(self):
            return False
        return all(o <= s for s, o in zip(self, other))

    def scale(self, m):
        return Partition(m * p for p in self)

    def __repr__(self):
        return f"Partition({tuple(self)})"


def enumerate_partitions(n, max_length=None):
    """All partitions of n in reverse lexicographic order.

    Reverse lex means (4), (3,1), (2,2), (2,1,1), (1,1,1,1) for n=4; this
    is the canonical order used by every golden file in the project.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = []

    def rec(remaining, max_part, prefix):
        if remaining == 0:
            out.append(Partition(prefix))
            return
        if max_length is not None and len(prefix) == max_length:
            return
        for p in range(min(max_part, remaining), 0, -1):
            rec(remaining - p, p, prefix + [p])

    rec(n, n if n else 0, [])
    if n == 0:
        return [Partition()]
    return out


def diagram_coords(mu):
    """Cells of the diagram of mu as 0-based (row, col) pairs, row-major."""
    mu = Partition(mu)
    return [(i, j) for i, row in enumerate(mu) for j in range(row)]


def hook_lengths(lam):
    lam = Partition(lam)
    conj = lam.conjugate()
    return [
        [lam[i] - j + conj[j] - i - 1 for j in range(lam[i])]
        for i in range(len(lam))
    ]


def count_syt(lam):
    """Number of standard Young tableaux of shape lam, by the hook-length formula."""
    lam = Partition(lam)
    n = lam.size
    if n == 0:
        return 1
    denom = 1
    for row in hook_lengths(lam):
        for h in row:
            denom *= h
    num = factorial(n)
    assert num % denom == 0
    return num // denom


def enumerate_syt(lam):
    """All standard Young tableaux of shape lam, as tuples of row tuples."""
    lam = Partition(lam)
    n = lam.size
    if n == 0:
        return [()]
    out = []
    rows = [[] for _ in lam]

    def rec(k):
        if k > n:
            out.append(tuple(tuple(r) for r in rows))
            return
        for i in range(len(lam)):
            j = len(rows[i])
            if j >= lam[i]:
                continue
            if i > 0 and len(rows[i - 1]) <= j:
                continue
            rows[i].append(k)
            rec(k + 1)
            rows[i].pop()

    rec(1)
    return out


def is_standard_tableau(rows, lam=None):
    entries = [e for row in rows for e in row]
    n = len(entries)
    if sorted(entries) != list(range(1, n + 1)):
        return False
    if lam is not None and Partition(len(r) for r in rows) != Partition(lam):
        return False
    for row in rows:
        if any(a >= b for a, b in zip(row, row[1:])):
            return False
    for i in range(1, len(rows)):
        if len(rows[i]) > len(rows[i - 1]):
            return False
        if any(rows[i][j] <= rows[i - 1][j] for j in range(len(rows[i]))):
            return False
    return True


def major_index(tableau):
    """MAJ(T): sum of entries i such that i+1 sits in a lower row than i."""
    row_of = {}
    for i, row in enumerate(tableau):
        for e in row:
            row_of[e] = i
    n = len(row_of)
    return sum(i for i in range(1, n) if row_of[i + 1] > row_of[i])


@lru_cache(maxsize=None)
def _maj_distribution(lam):
    dist = {}
    for t in enumerate_syt(lam):
        m = major_index(t)
        dist[m] = dist.get(m, 0) + 1
    return dist


def maj_multiplicity(lam, i):
    """Number of SYT of shape lam with major index i."""
    return _maj_distribution(Partition(lam)).get(i, 0)


def q_factorial(n):
    """The q-analogue (1+q)(1+q+q^2)...(1+q+...+q^{n-1}) of n!."""
    if n < 1:
        raise ValueError("n must be positive")
    result = IntPolynomial([1])
    for k in range(2, n + 1):
        result = result * IntPolynomial([1] * k)
    return result
