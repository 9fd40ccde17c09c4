"""Hermitian eigenvalues from scratch.

Householder reflections reduce a complex Hermitian matrix to a real
symmetric tridiagonal one (unitary diagonal phases absorb the complex
subdiagonal); the implicit-shift QL iteration then delivers all
eigenvalues. Only eigenvalues are tracked, so no transformation
accumulation is needed.
"""

from __future__ import annotations

import numpy as np

_MAX_QL_SWEEPS = 50


def householder_tridiagonal(a):
    """Real diagonal and subdiagonal of a unitarily equivalent tridiagonal.

    Accepts a complex (or real) Hermitian matrix; returns (d, e) with
    d the diagonal (length n) and e the subdiagonal (length n - 1).
    """
    a = np.array(a, dtype=np.complex128)
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError("matrix must be square")
    if not np.allclose(a, a.conj().T, atol=1e-10 * max(1.0, np.abs(a).max())):
        raise ValueError("matrix must be Hermitian")
    for k in range(n - 2):
        x = a[k + 1:, k].copy()
        norm = np.linalg.norm(x)
        if norm == 0.0:
            continue
        # Reflect x onto a multiple of e_1, choosing the phase that
        # avoids cancellation.
        phase = x[0] / abs(x[0]) if x[0] != 0 else 1.0
        v = x.copy()
        v[0] += phase * norm
        vnorm = np.linalg.norm(v)
        if vnorm == 0.0:
            continue
        v /= vnorm
        # A <- H A H with H = I - 2 v v*.
        sub = a[k + 1:, k + 1:]
        w = sub @ v
        w -= v * (v.conj() @ w)
        sub -= 2.0 * np.outer(w, v.conj())
        sub -= 2.0 * np.outer(v, w.conj())
        a[k + 1:, k] = 0.0
        a[k, k + 1:] = 0.0
        a[k + 1, k] = -phase * norm
        a[k, k + 1] = np.conj(a[k + 1, k])
    d = np.real(np.diag(a)).copy()
    e = np.diag(a, -1).copy()
    # Absorb subdiagonal phases into a unitary diagonal similarity.
    e_real = np.abs(e)
    return d, e_real


def _make_ql_kernel():
    import numba

    @numba.njit(cache=True)
    def kernel(d, e, max_sweeps):
        n = d.shape[0]
        ee = np.zeros(n)
        ee[: n - 1] = e
        for l in range(n):
            for sweep in range(max_sweeps + 1):
                m = l
                while m < n - 1:
                    dd = abs(d[m]) + abs(d[m + 1])
                    if abs(ee[m]) <= 1e-300 or abs(ee[m]) <= 2.3e-16 * dd:
                        break
                    m += 1
                if m == l:
                    break
                if sweep == max_sweeps:
                    return -1
                g = (d[l + 1] - d[l]) / (2.0 * ee[l])
                r = np.hypot(g, 1.0)
                sign = 1.0 if g >= 0 else -1.0
                g = d[m] - d[l] + ee[l] / (g + sign * r)
                s = 1.0
                c = 1.0
                p = 0.0
                for i in range(m - 1, l - 1, -1):
                    f = s * ee[i]
                    b = c * ee[i]
                    r = np.hypot(f, g)
                    ee[i + 1] = r
                    if r == 0.0:
                        d[i + 1] -= p
                        ee[m] = 0.0
                        break
                    s = f / r
                    c = g / r
                    g = d[i + 1] - p
                    r = (d[i] - g) * s + 2.0 * c * b
                    p = s * r
                    d[i + 1] = g + p
                    g = c * r - b
                else:
                    d[l] -= p
                    ee[l] = g
                    ee[m] = 0.0
        return 0

    return kernel


_ql_kernel = None


def tridiagonal_eigenvalues(d, e):
    """All eigenvalues of a real symmetric tridiagonal matrix, sorted."""
    global _ql_kernel
    if _ql_kernel is None:
        _ql_kernel = _make_ql_kernel()
    d = np.array(d, dtype=np.float64)
    e = np.array(e, dtype=np.float64)
    if e.shape[0] != d.shape[0] - 1:
        raise ValueError("subdiagonal must have length n - 1")
    status = _ql_kernel(d, e, _MAX_QL_SWEEPS)
    if status != 0:
        raise RuntimeError("QL iteration failed to converge")
    d.sort()
    return d


def hermitian_eigenvalues(a):
    """Sorted eigenvalues of a complex Hermitian matrix."""
    d, e = householder_tridiagonal(a)
    return tridiagonal_eigenvalues(d, e)
