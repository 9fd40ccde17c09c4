"""Longest increasing subsequences: exact layer and Monte Carlo sampling.

The exact layer has patience sorting, RSK, Greene invariants with a
memoized brute-force oracle, the hook-formula expectation identity, the
Gessel determinant series, and validated closed forms for u_2 and u_3.
Sampling uses counter-based Philox streams keyed by sample index so
parallel and serial runs produce identical output.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import comb, factorial

import numpy as np

from .tableaux import Partition, count_syt, enumerate_partitions


def check_permutation(w):
    w = tuple(w)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise ValueError("not a permutation of 1..n")
    return w


def is_length(w):
    """Length of the longest increasing subsequence (patience sorting)."""
    w = check_permutation(w)
    piles = []
    for a in w:
        i = bisect_left(piles, a)
        if i == len(piles):
            piles.append(a)
        else:
            piles[i] = a
    return len(piles)


def rsk(w):
    """Row-insertion RSK: returns (insertion tableau P, recording tableau Q)."""
    w = check_permutation(w)
    p_rows, q_rows = [], []
    for step, a in enumerate(w, start=1):
        r = 0
        while True:
            if r == len(p_rows):
                p_rows.append([a])
                q_rows.append([step])
                break
            row = p_rows[r]
            i = bisect_right(row, a)
            if i == len(row):
                row.append(a)
                q_rows[r].append(step)
                break
            a, row[i] = row[i], a
            r += 1
    return (
        tuple(tuple(r) for r in p_rows),
        tuple(tuple(r) for r in q_rows),
    )


def greene_shape(w):
    """Greene invariants lambda(w) = shape of the RSK tableaux."""
    p, _ = rsk(w)
    return Partition(len(r) for r in p)


def greene_bruteforce(w, k):
    """Largest union of k increasing subsequences, by memoized assignment DP.

    Processes w left to right; the state is the sorted tuple of current
    chain tails (0 = empty chain). Capped at n <= 10.
    """
    w = check_permutation(w)
    n = len(w)
    if n > 10:
        raise ValueError("brute-force Greene oracle capped at n=10")
    if k >= n:
        return n
    if k < 1:
        return 0

    @lru_cache(maxsize=None)
    def best(idx, tails):
        if idx == n:
            return 0
        a = w[idx]
        result = best(idx + 1, tails)  # skip element
        for t in sorted(set(tails)):
            if t < a:
                new = list(tails)
                new.remove(t)
                new.append(a)
                result = max(
                    result, 1 + best(idx + 1, tuple(sorted(new)))
                )
        return result

    out = best(0, (0,) * k)
    best.cache_clear()
    return out


def permutation_major_index(w):
    """MAJ(w) = sum of descent positions i with w_i > w_{i+1}."""
    w = check_permutation(w)
    return sum(i + 1 for i in range(len(w) - 1) if w[i] > w[i + 1])


def expected_is_exact(n):
    """E(n) = (1/n!) sum_{lam |- n} lam_1 (f^lam)^2, exactly."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > 40:
        raise ValueError("hook-formula expectation capped at n=40")
    total = 0
    for lam in enumerate_partitions(n):
        f = count_syt(lam)
        total += lam[0] * f * f
    return Fraction(total, factorial(n))


# -- truncated power series over Q ------------------------------------


class TruncSeries:
    """Power series truncated at a fixed order, exact rational coefficients."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order, coeffs=()):
        self.order = order
        c = [Fraction(x) for x in coeffs[: order + 1]]
        c += [Fraction(0)] * (order + 1 - len(c))
        self.coeffs = c

    def __add__(self, other):
        return TruncSeries(
            self.order,
            [a + b for a, b in zip(self.coeffs, other.coeffs)],
        )

    def __sub__(self, other):
        return TruncSeries(
            self.order,
            [a - b for a, b in zip(self.coeffs, other.coeffs)],
        )

    def __mul__(self, other):
        out = [Fraction(0)] * (self.order + 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if i + j > self.order:
                    break
                if b:
                    out[i + j] += a * b
        return TruncSeries(self.order, out)

    def __getitem__(self, i):
        return self.coeffs[i]


def bessel_like_series(i, order):
    """B_i(x) = sum_{n>=0} x^{2n+i} / (n! (n+i)!), truncated."""
    coeffs = [Fraction(0)] * (order + 1)
    n = 0
    while 2 * n + i <= order:
        coeffs[2 * n + i] = Fraction(1, factorial(n) * factorial(n + i))
        n += 1
    return TruncSeries(order, coeffs)


def _series_det(matrix, order):
    k = len(matrix)
    if k == 1:
        return matrix[0][0]
    total = TruncSeries(order)
    for perm in permutations(range(k)):
        sign = 1
        seen = [False] * k
        for i in range(k):
            if seen[i]:
                continue
            j, c = i, 0
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                c += 1
            if c % 2 == 0:
                sign = -sign
        term = matrix[0][perm[0]]
        for r in range(1, k):
            term = term * matrix[r][perm[r]]
        if sign == 1:
            total = total + term
        else:
            total = total - term
    return total


def gessel_series(k, order):
    """U_k(x) = det(B_{|i-j|}(x)) and the extracted counts u_k(n).

    Returns (series, [u_k(0), ..., u_k(order // 2)]); each u_k(n) =
    n!^2 [x^{2n}] U_k(x) and must be a nonnegative integer.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if order % 2:
        raise ValueError("truncation order must be even")
    matrix = [
        [bessel_like_series(abs(i - j), order) for j in range(k)]
        for i in range(k)
    ]
    series = _series_det(matrix, order)
    counts = []
    for n in range(order // 2 + 1):
        v = series[2 * n] * factorial(n) ** 2
        if v.denominator != 1 or v < 0:
            raise ArithmeticError(f"u_{k}({n}) extraction non-integral: {v}")
        counts.append(int(v))
    return series, counts


def count_by_is_bruteforce(n, k):
    """#{w in S_n : is(w) <= k} by exhaustive enumeration (n <= 8)."""
    if n > 8:
        raise ValueError("brute-force count capped at n=8")
    if n == 0:
        return 1
    return sum(
        1 for w in permutations(range(1, n + 1)) if is_length(w) <= k
    )


def u2_closed_form(n):
    """Catalan closed form for permutations avoiding increasing triples."""
    return comb(2 * n, n) // (n + 1)


def u3_closed_form(n, printed_variant=False):
    """Count of permutations with no increasing subsequence of length 4.

    The default evaluates the brute-force-validated sum with final factor
    C(n+2, j+1); the printed variant (final factor C(n+2, j+2)) appears
    in circulation but already fails at n=2 (gives 4/3, true value 2) and
    is kept only behind the flag for comparison.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    total = 0
    for j in range(n + 1):
        last = comb(n + 2, j + 2) if printed_variant else comb(n + 2, j + 1)
        total += comb(2 * j, j) * comb(n + 1, j + 1) * last
    value = Fraction(total, (n + 1) ** 2 * (n + 2))
    if value.denominator != 1:
        raise ArithmeticError(
            f"u_3({n}) formula variant gives non-integer {value}"
        )
    return int(value)


# -- Monte Carlo sampling ----------------------------------------------


def _lis_lengths_batch(perms):
    """LIS length for each row of an integer matrix (numba-accelerated)."""
    return _lis_kernel(np.ascontiguousarray(perms, dtype=np.int64))


def _make_lis_kernel():
    import numba

    @numba.njit(cache=True, parallel=True)
    def kernel(perms):
        m, n = perms.shape
        out = np.empty(m, dtype=np.int64)
        for s in numba.prange(m):
            piles = np.empty(n, dtype=np.int64)
            size = 0
            for idx in range(n):
                a = perms[s, idx]
                lo, hi = 0, size
                while lo < hi:
                    mid = (lo + hi) // 2
                    if piles[mid] < a:
                        lo = mid + 1
                    else:
                        hi = mid
                piles[lo] = a
                if lo == size:
                    size += 1
            out[s] = size
        return out

    return kernel


_lis_kernel = None


def _ensure_kernel():
    global _lis_kernel
    if _lis_kernel is None:
        _lis_kernel = _make_lis_kernel()


def chi_statistic(is_value, n):
    return (is_value - 2.0 * np.sqrt(n)) / n ** (1.0 / 6.0)


def sample_chi_n(n, samples, seed, batch=2000):
    """Scaled LIS statistics of uniform random permutations.

    Deterministic per (n, samples, seed): sample s uses its own Philox
    stream keyed (seed, s-block), so any split of the work reproduces
    the serial output.
    """
    if samples < 1:
        raise ValueError("need at least one sample")
    _ensure_kernel()
    out = np.empty(samples, dtype=np.float64)
    pos = 0
    while pos < samples:
        m = min(batch, samples - pos)
        perms = np.empty((m, n), dtype=np.int64)
        for r in range(m):
            bg = np.random.Philox(key=(np.uint64(seed), np.uint64(pos + r)))
            perms[r] = np.random.Generator(bg).permutation(n)
        lengths = _lis_lengths_batch(perms)
        out[pos: pos + m] = chi_statistic(lengths.astype(np.float64), n)
        pos += m
    return out


def exhaustive_chi_n(n):
    """chi_n over all of S_n (n <= 8); mean equals (E(n)-2 sqrt n)/n^{1/6}."""
    if n > 8:
        raise ValueError("exhaustive enumeration capped at n=8")
    values = [
        chi_statistic(is_length(w), n)
        for w in permutations(range(1, n + 1))
    ]
    return np.array(values)
