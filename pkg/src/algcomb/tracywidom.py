"""The Tracy-Widom distribution from its Painleve II definition.

The Airy function is summed from its Maclaurin series in adaptive
high-precision arithmetic (the series cancels catastrophically in
doubles past x ~ 5), switching to the standard asymptotic form for
large x. The Hastings-McLeod solution of Painleve II is found by
Newton relaxation on the two-point boundary value problem with u = -Ai
on the right and the parabolic expansion -sqrt(-x/2)(1 + ...) on the
left; the initial value problem is too ill-conditioned for shooting in
double precision (seed perturbations are amplified beyond 1e16 across
the domain), but a backward shooting integrator is kept because its
pole and oscillation branches bracket the true solution and make a
good independent check. The distribution function, its moments, and
GUE sampling utilities follow.
"""

from __future__ import annotations

import math

import mpmath
import numpy as np

from .eigen import hermitian_eigenvalues

AIRY_SWITCH = 12.0
AIRY_DOMAIN = 40.0


class RealGrid:
    """Values tabulated on a uniform, strictly increasing grid."""

    __slots__ = ("start", "step", "values")

    def __init__(self, start, step, values):
        if step <= 0.0:
            raise ValueError("grid step must be positive")
        self.start = float(start)
        self.step = float(step)
        self.values = np.asarray(values, dtype=float)

    def __len__(self):
        return len(self.values)

    @property
    def abscissae(self):
        return self.start + self.step * np.arange(len(self.values))

    def at(self, x):
        """Value at the grid point nearest to x (must lie on the grid)."""
        i = int(round((x - self.start) / self.step))
        if not 0 <= i < len(self.values):
            raise ValueError(f"{x} outside the grid")
        if abs(self.start + i * self.step - x) > 1e-9:
            raise ValueError(f"{x} is not a grid point")
        return float(self.values[i])


class EmpiricalDistribution:
    """Sorted sample values with their count."""

    __slots__ = ("values",)

    def __init__(self, values):
        v = np.sort(np.asarray(values, dtype=float))
        if len(v) == 0:
            raise ValueError("empty sample")
        self.values = v

    def __len__(self):
        return len(self.values)

    def mean(self):
        return float(self.values.mean())

    def variance(self):
        return float(self.values.var())


def airy(x):
    """Ai(x) for real x, from the Maclaurin series or the asymptotic form."""
    if abs(x) > AIRY_DOMAIN:
        raise OverflowError(f"airy restricted to |x| <= {AIRY_DOMAIN}")
    if x >= AIRY_SWITCH:
        z = (2.0 / 3.0) * x ** 1.5
        return math.exp(-z) / (2.0 * math.sqrt(math.pi) * x ** 0.25)
    return float(_airy_series(x)[0])


def airy_prime(x):
    """Ai'(x) for real x."""
    if abs(x) > AIRY_DOMAIN:
        raise OverflowError(f"airy_prime restricted to |x| <= {AIRY_DOMAIN}")
    if x >= AIRY_SWITCH:
        z = (2.0 / 3.0) * x ** 1.5
        return -(x ** 0.25) * math.exp(-z) / (2.0 * math.sqrt(math.pi))
    return float(_airy_series(x)[1])


def _airy_series(x):
    """(Ai(x), Ai'(x)) by direct series summation in scaled precision.

    The working precision grows like |x|^{3/2} to absorb the
    cancellation between the two solution branches.
    """
    extra = int(1.2 * abs(x) ** 1.5) + 30
    with mpmath.workdps(extra):
        xm = mpmath.mpf(x)
        c1 = mpmath.mpf(3) ** mpmath.mpf("-2/3") / mpmath.gamma(
            mpmath.mpf("2/3")
        )
        c2 = -(mpmath.mpf(3) ** mpmath.mpf("-1/3")) / mpmath.gamma(
            mpmath.mpf("1/3")
        )
        # Ai = c1 f + c2 g with f'' = x f, f(0)=1, f'(0)=0 and
        # g(0)=0, g'(0)=1; series coefficients obey a_{k+3} propto a_k.
        f = fp = mpmath.mpf(0)
        g = gp = mpmath.mpf(0)
        tf = mpmath.mpf(1)  # x^{3k} / (3k)! coefficient chain for f
        tg = xm  # x^{3k+1} chain for g
        k = 0
        while True:
            f += tf
            g += tg
            if k > 0:
                fp += tf * (3 * k) / xm if x != 0 else 0
            gp += tg * (3 * k + 1) / xm if x != 0 else 0
            if abs(tf) < mpmath.mpf(10) ** (-extra) and abs(tg) < mpmath.mpf(
                10
            ) ** (-extra) and k > 3:
                break
            tf = tf * xm ** 3 / ((3 * k + 2) * (3 * k + 3))
            tg = tg * xm ** 3 / ((3 * k + 3) * (3 * k + 4))
            k += 1
        if x == 0:
            fp = mpmath.mpf(0)
            gp = mpmath.mpf(1)
        ai = c1 * f + c2 * g
        aip = c1 * fp + c2 * gp
        return ai, aip


def _integrate_backward(c, x0, x_min, h, blow=1e3):
    """RK4 for u'' = 2u^3 + xu from x0 down, seeded u = -c Ai.

    Returns (status, xs, us): status is "ok", "pole" (u diverged, seed
    too large) or "oscillation" (u crossed zero, seed too small). xs is
    descending.
    """
    steps = int(round((x0 - x_min) / h))
    x = x0
    u = -c * airy(x0)
    v = -c * airy_prime(x0)
    xs = np.empty(steps + 1)
    us = np.empty(steps + 1)
    xs[0], us[0] = x, u

    def f(x, u, v):
        return v, 2.0 * u ** 3 + x * u

    for i in range(1, steps + 1):
        k1u, k1v = f(x, u, v)
        k2u, k2v = f(x - h / 2, u - h / 2 * k1u, v - h / 2 * k1v)
        k3u, k3v = f(x - h / 2, u - h / 2 * k2u, v - h / 2 * k2v)
        k4u, k4v = f(x - h, u - h * k3u, v - h * k3v)
        u = u - h / 6 * (k1u + 2 * k2u + 2 * k3u + k4u)
        v = v - h / 6 * (k1v + 2 * k2v + 2 * k3v + k4v)
        x = x0 - i * h
        xs[i], us[i] = x, u
        if u > 0.0:
            return "oscillation", xs[: i + 1], us[: i + 1]
        if u < -blow:
            return "pole", xs[: i + 1], us[: i + 1]
    return "ok", xs, us


def left_asymptote(x):
    """Expansion u(x) = -sqrt(-x/2)(1 + x^-3/8 - 73 x^-6/128), x << 0."""
    if x >= -1.0:
        raise ValueError("left asymptote only valid for x << 0")
    return -math.sqrt(-x / 2.0) * (
        1.0 + 1.0 / (8.0 * x ** 3) - 73.0 / (128.0 * x ** 6)
    )


def _thomas_solve(lower, diag, upper, rhs):
    """Tridiagonal solve; overwrites nothing, returns the solution."""
    n = len(diag)
    c = np.empty(n)
    d = np.empty(n)
    c[0] = upper[0] / diag[0]
    d[0] = rhs[0] / diag[0]
    for i in range(1, n):
        denom = diag[i] - lower[i - 1] * c[i - 1]
        c[i] = upper[i] / denom if i < n - 1 else 0.0
        d[i] = (rhs[i] - lower[i - 1] * d[i - 1]) / denom
    x = np.empty(n)
    x[-1] = d[-1]
    for i in range(n - 2, -1, -1):
        x[i] = d[i] - c[i] * x[i + 1]
    return x


def painleve2_hastings_mcleod(x_min=-10.0, x0=8.0, h=1e-3, pad=2.0):
    """The Hastings-McLeod solution on [x_min, x0].

    Solves the boundary value problem by damped Newton iteration on a
    central-difference grid extended ``pad`` beyond x_min, so the small
    truncation error of the left asymptote decays before it reaches the
    reported window. Returns a RealGrid of u with uniform step h.
    """
    if x_min < -10.0 - 1e-12 or x0 > 10.0 + 1e-12 or x_min >= x0:
        raise ValueError("grid must lie within [-10, 10]")
    left = x_min - pad
    steps = int(round((x0 - left) / h))
    x = left + h * np.arange(steps + 1)
    x[-1] = x0
    u = _initial_guess(x)
    u[0] = left_asymptote(left)
    u[-1] = -airy(x0)
    inv_h2 = 1.0 / (h * h)
    for _ in range(60):
        xi, ui = x[1:-1], u[1:-1]
        residual = (
            (u[:-2] - 2.0 * ui + u[2:]) * inv_h2 - 2.0 * ui ** 3 - xi * ui
        )
        diag = -2.0 * inv_h2 - 6.0 * ui ** 2 - xi
        off = np.full(len(ui) - 1, inv_h2)
        delta = _thomas_solve(off, diag, off, -residual)
        # Damp large steps so the cubic term cannot overshoot to a pole.
        scale = np.abs(delta).max()
        if scale > 1.0:
            delta *= 1.0 / scale
        u[1:-1] += delta
        if scale < 1e-13:
            break
    else:
        raise RuntimeError("Newton relaxation did not converge")
    keep = x >= x_min - 1e-12
    return RealGrid(x[keep][0], h, u[keep])


def _initial_guess(x):
    """A smooth curve with the right asymptotics on both ends."""
    s = 0.5 * (np.hypot(x, 1.0) - x)
    decay = np.exp(-(2.0 / 3.0) * np.clip(x, 0.0, None) ** 1.5)
    return -np.sqrt(s) * decay


def painleve2_residual(grid):
    """Max |u'' - 2u^3 - xu| on the interior, by central differences."""
    x = grid.abscissae
    u = grid.values
    h = grid.step
    second = (u[:-2] - 2.0 * u[1:-1] + u[2:]) / (h * h)
    res = second - 2.0 * u[1:-1] ** 3 - x[1:-1] * u[1:-1]
    return float(np.abs(res).max())


def airy_residual(points, h=5e-3):
    """Max |Ai''(x) - x Ai(x)| at the given points.

    The second derivative is a fourth-order five-point stencil
    evaluated in extended precision so roundoff does not mask the
    series accuracy being tested.
    """
    worst = 0.0
    for x in points:
        with mpmath.workdps(40):
            vals = [_airy_series(x + k * h)[0] for k in (-2, -1, 0, 1, 2)]
            second = (
                -vals[0] + 16 * vals[1] - 30 * vals[2] + 16 * vals[3]
                - vals[4]
            ) / (12 * mpmath.mpf(h) ** 2)
            worst = max(worst, abs(float(second - x * vals[2])))
    return worst


def tw_cdf(x_min=-10.0, x0=8.0, h=1e-3, tail=14.0):
    """RealGrid of F(t) for the Tracy-Widom distribution on [x_min, x0].

    F(t) = exp(-int_t^inf (x - t) u(x)^2 dx); the integral beyond x0
    uses u = -Ai directly. Values are monotone and clipped to [0, 1].
    """
    ugrid = painleve2_hastings_mcleod(x_min, x0, h)
    xs, us = ugrid.abscissae, ugrid.values
    # Append the far tail where u is indistinguishable from -Ai.
    th = 0.01
    tail_x = np.arange(x0 + th, tail + th / 2, th)
    tail_u = np.array([-airy(x) for x in tail_x])
    grid = np.concatenate([xs, tail_x])
    u2 = np.concatenate([us, tail_u]) ** 2
    xu2 = grid * u2
    # Suffix trapezoid sums: A(i) = int_{x_i}^{tail} u^2 dx, likewise B.
    dx = np.diff(grid)
    a_steps = 0.5 * dx * (u2[1:] + u2[:-1])
    b_steps = 0.5 * dx * (xu2[1:] + xu2[:-1])
    a = np.concatenate([np.cumsum(a_steps[::-1])[::-1], [0.0]])
    b = np.concatenate([np.cumsum(b_steps[::-1])[::-1], [0.0]])
    n = len(xs)
    t = grid[:n]
    f = np.exp(-(b[:n] - t * a[:n]))
    f = np.clip(f, 0.0, 1.0)
    if np.any(np.diff(f) < -1e-12):
        raise RuntimeError("computed distribution is not monotone")
    return RealGrid(t[0], h, f)


def tw_moments(x_min=-10.0, x0=8.0, h=1e-3):
    """(mean, variance) of the Tracy-Widom distribution.

    Uses E X = int_0^inf (1 - F) - int_{-inf}^0 F and
    E X^2 = int_0^inf 2t (1 - F(t)) dt + int_0^inf 2t F(-t) dt,
    with trapezoid sums on the CDF grid; tails beyond the grid are
    below 1e-8.
    """
    grid = tw_cdf(x_min, x0, h)
    t, f = grid.abscissae, grid.values
    pos = t >= 0.0
    neg = t <= 0.0
    mean = np.trapezoid(1.0 - f[pos], t[pos]) - np.trapezoid(f[neg], t[neg])
    m2 = np.trapezoid(2.0 * t[pos] * (1.0 - f[pos]), t[pos]) + np.trapezoid(
        -2.0 * t[neg] * f[neg], t[neg]
    )
    return float(mean), float(m2 - mean * mean)


# -- GUE sampling ------------------------------------------------------


def gue_matrix(n, rng):
    """Draw from the density proportional to exp(-tr M^2).

    Diagonal entries are N(0, 1/2); off-diagonal real and imaginary
    parts are N(0, 1/4).
    """
    d = rng.normal(scale=math.sqrt(0.5), size=n)
    re = rng.normal(scale=0.5, size=(n, n))
    im = rng.normal(scale=0.5, size=(n, n))
    m = np.triu(re + 1j * im, 1)
    m = m + m.conj().T
    m[np.diag_indices(n)] = d
    return m


def gue_sample(n, seed):
    """One GUE draw: eigenvalues alpha_1 >= ... >= alpha_n.

    Deterministic per (n, seed); checks the eigenvalue sum against the
    trace before returning.
    """
    if n > 500:
        raise ValueError("gue_sample capped at n=500")
    rng = np.random.Generator(np.random.Philox(key=np.uint64(seed)))
    m = gue_matrix(n, rng)
    eigs = hermitian_eigenvalues(m)
    tr = np.trace(m).real
    if abs(eigs.sum() - tr) > 1e-10 * max(1.0, abs(tr)):
        raise RuntimeError("eigenvalue sum does not match trace")
    return eigs[::-1].copy()


def scaled_largest_eigenvalue(eigs, n):
    """(alpha_1 - sqrt(2n)) sqrt(2) n^{1/6}."""
    return (np.max(eigs) - math.sqrt(2.0 * n)) * math.sqrt(2.0) * n ** (
        1.0 / 6.0
    )


def sample_gue_chi(n, samples, seed):
    """Scaled largest-eigenvalue statistics of GUE draws.

    Deterministic per (n, samples, seed); sample s has its own Philox
    stream keyed (seed, s).
    """
    out = np.empty(samples)
    for s in range(samples):
        bg = np.random.Philox(key=(np.uint64(seed), np.uint64(s)))
        rng = np.random.Generator(bg)
        m = gue_matrix(n, rng)
        eigs = hermitian_eigenvalues(m)
        tr = np.trace(m).real
        if abs(eigs.sum() - tr) > 1e-8 * max(1.0, abs(tr)):
            raise RuntimeError("eigenvalue sum does not match trace")
        out[s] = scaled_largest_eigenvalue(eigs, n)
    return out


def ks_distance(empirical, cdf):
    """sup |ecdf - F| over sample points, with F interpolated.

    empirical may be an EmpiricalDistribution or raw values; cdf is the
    RealGrid of F.
    """
    if not isinstance(empirical, EmpiricalDistribution):
        empirical = EmpiricalDistribution(empirical)
    v = empirical.values
    n = len(v)
    interp = np.interp(v, cdf.abscissae, cdf.values, left=0.0, right=1.0)
    upper = np.arange(1, n + 1) / n
    lower = np.arange(0, n) / n
    return float(
        max(np.abs(upper - interp).max(), np.abs(lower - interp).max())
    )


def sample_tw(samples, seed, cdf):
    """Inverse-transform samples from the distribution on a CDF grid.

    Used to calibrate Kolmogorov-Smirnov tolerances against sampling
    noise alone.
    """
    rng = np.random.Generator(np.random.Philox(key=np.uint64(seed)))
    f = cdf.values
    u = rng.uniform(f[0], f[-1], size=samples)
    return np.interp(u, f, cdf.abscissae)
