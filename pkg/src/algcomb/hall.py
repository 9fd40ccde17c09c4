"""Hall polynomials by brute force on finite abelian p-groups.

A group of type lambda is modeled as Z/p^{l1} x Z/p^{l2} x ... with
elements encoded as integers in mixed radix. Subgroups are enumerated
bottom-up: every subgroup is reached through a chain of index-p
extensions, and results are deduplicated by canonical element sets.
This route is deliberately independent of any Hall-algebra recursion so
it can serve as the oracle for the nonvanishing theorems.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .tableaux import Partition
from .univariate import IntPolynomial

DEFAULT_SIZE_CAP = 4096


class SizeCapExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class AbelianPGroup:
    p: int
    type: Partition

    def __post_init__(self):
        object.__setattr__(self, "type", Partition(self.type))

    @property
    def order(self):
        return self.p ** self.type.size

    @property
    def moduli(self):
        return tuple(self.p ** e for e in self.type)


@dataclass(frozen=True)
class SubgroupRecord:
    elements: frozenset  # encoded element indices
    type: Partition
    quotient_type: Partition


class _GroupTables:
    """Encoded arithmetic for one group: addition rows and the p-multiple map."""

    def __init__(self, group, size_cap=DEFAULT_SIZE_CAP):
        if group.order > size_cap:
            raise SizeCapExceeded(
                f"group order {group.order} exceeds cap {size_cap}"
            )
        self.group = group
        moduli = group.moduli
        order = group.order
        decode = []
        for idx in range(order):
            v, rest = [], idx
            for m in moduli:
                v.append(rest % m)
                rest //= m
            decode.append(tuple(v))
        self.decode = decode
        enc = {v: i for i, v in enumerate(decode)}
        self.add = [
            [
                enc[tuple((a + b) % m for a, b, m in zip(va, vb, moduli))]
                for vb in decode
            ]
            for va in decode
        ]
        self.pmul = [
            enc[tuple((group.p * a) % m for a, m in zip(va, moduli))]
            for va in decode
        ]
        # p^k G for k = 0, 1, ... until it collapses to {0}.
        images = [frozenset(range(order))]
        while len(images[-1]) > 1:
            images.append(frozenset(self.pmul[x] for x in images[-1]))
        self.whole_p_images = images

    def index_p_extensions(self, h):
        """All subgroups K with h < K and [K : h] = p.

        Candidates are elements g outside h with p*g inside h; two such
        candidates give the same K exactly when one lies in the K of the
        other, which makes the covered-set pruning exact.
        """
        p = self.group.p
        hset = set(h)
        out = []
        covered = set()
        for g in range(self.group.order):
            if g in hset or g in covered or self.pmul[g] not in hset:
                continue
            k = set(hset)
            jg = g
            for _ in range(p - 1):
                row = self.add[jg]
                k.update(row[y] for y in hset)
                jg = self.add[jg][g]
            k = frozenset(k)
            covered |= k
            out.append(k)
        return out

    def sum_with(self, fixed, h):
        """Subgroup sum fixed + h as an element set (both are subgroups)."""
        out = set()
        for x in fixed:
            row = self.add[x]
            out.update(row[y] for y in h)
        return frozenset(out)

    def _ranks_to_type(self, sizes):
        """Partition from a tower of sizes |H_0| >= |H_1| >= ... >= 1."""
        p = self.group.p
        conj = []
        for big, small in zip(sizes, sizes[1:]):
            ratio = big // small
            r = 0
            while p**r < ratio:
                r += 1
            assert p**r == ratio
            conj.append(r)
        return Partition(sorted(conj, reverse=True)).conjugate()

    def subgroup_type(self, elements):
        """Type of a subgroup from the sizes of p^k H."""
        sizes = [len(elements)]
        current = frozenset(elements)
        while len(current) > 1:
            current = frozenset(self.pmul[x] for x in current)
            sizes.append(len(current))
        return self._ranks_to_type(sizes)

    def quotient_type(self, elements):
        """Type of G/H from the sizes of (p^k G + H)."""
        h = frozenset(elements)
        sizes = []
        for image in self.whole_p_images:
            layer = self.sum_with(image, h)
            sizes.append(len(layer))
            if len(layer) == len(h):
                break
        return self._ranks_to_type(sizes)


@lru_cache(maxsize=64)
def _enumerate_subgroups_cached(p, lam, size_cap):
    group = AbelianPGroup(p, Partition(lam))
    tables = _GroupTables(group, size_cap)
    trivial = frozenset({0})
    seen = {trivial}
    queue = [trivial]
    while queue:
        h = queue.pop()
        for k in tables.index_p_extensions(h):
            if k not in seen:
                seen.add(k)
                queue.append(k)
    records = []
    for elements in seen:
        records.append(
            SubgroupRecord(
                elements=elements,
                type=tables.subgroup_type(elements),
                quotient_type=tables.quotient_type(elements),
            )
        )
    records.sort(key=lambda r: (len(r.elements), sorted(r.elements)))
    return tuple(records)


def enumerate_subgroups(group, size_cap=DEFAULT_SIZE_CAP):
    """All subgroups of the group, each annotated with type and quotient type."""
    return list(_enumerate_subgroups_cached(group.p, group.type, size_cap))


def hall_count(lam, mu, nu, p, size_cap=DEFAULT_SIZE_CAP):
    """g_{mu,nu}^{lam}(p): subgroups of type mu with quotient of type nu."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if mu.size + nu.size != lam.size:
        return 0
    records = enumerate_subgroups(AbelianPGroup(p, lam), size_cap)
    return sum(1 for r in records if r.type == mu and r.quotient_type == nu)


def hall_count_table(lam, p, size_cap=DEFAULT_SIZE_CAP):
    """All Hall counts for one (lam, p) at once: dict (mu, nu) -> count."""
    records = enumerate_subgroups(AbelianPGroup(p, Partition(lam)), size_cap)
    table = {}
    for r in records:
        key = (r.type, r.quotient_type)
        table[key] = table.get(key, 0) + 1
    return table


DEFAULT_PRIMES = (2, 3, 5, 7, 11, 13)


def hall_polynomial(lam, mu, nu, primes=DEFAULT_PRIMES, size_cap=DEFAULT_SIZE_CAP):
    """Reconstruct g_{mu,nu}^{lam}(t) by interpolation over primes.

    The interpolation degree grows until the count at a held-out prime
    matches; a failure to find integer coefficients or to validate at
    the held-out prime raises.
    """
    primes = list(primes)
    if len(primes) < 2:
        raise ValueError("need at least two primes")
    counts = {}

    def count_at(p):
        if p not in counts:
            counts[p] = hall_count(lam, mu, nu, p, size_cap)
        return counts[p]

    for k in range(1, len(primes)):
        support = primes[:k]
        holdout = primes[k]
        poly = IntPolynomial.interpolate([(p, count_at(p)) for p in support])
        if poly(holdout) == count_at(holdout):
            return poly
    raise ValueError("interpolation did not stabilize; supply more primes")


def maley_positivity(g):
    """True iff g(t+1) has only nonnegative coefficients."""
    return all(c >= 0 for c in g.shift_variable(1).coeffs)
