"""Command-line front end.

Every experiment is a subcommand; scalar results are emitted as JSON
with sorted keys and 12-significant-digit floats so identical configs
produce byte-identical output, and bulk samples are emitted as CSV.
The reproducibility header (command, seed, version) is embedded in the
output itself; wall-clock runtime goes to stderr so it cannot perturb
byte determinism.

Exit codes: 0 success, 1 verification failure, 2 usage error,
3 resource cap exceeded.
"""

from __future__ import annotations

import json
import os
import sys
import time

import click
import numpy as np

from . import __version__
from . import diagcoinv, hall, lis, saturation, symfunc, tracywidom, verify
from .apolar import gh_span, coinvariant_span, graded_character, \
    irreducible_multiplicities
from .groebner import ResourceCapExceeded
from .hall import SizeCapExceeded
from .tableaux import Partition, q_factorial

EXIT_VERIFY = 1
EXIT_RESOURCE = 3

_START = time.monotonic()


def _report_runtime():
    print(f"runtime: {time.monotonic() - _START:.3f}s", file=sys.stderr)


def _parse_partition(text):
    if text in ("", "0", "-"):
        return Partition(())
    try:
        parts = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise click.BadParameter(f"expected comma-separated integers: {text}")
    if any(p <= 0 for p in parts) or any(
        a < b for a, b in zip(parts, parts[1:])
    ):
        raise click.BadParameter(
            f"parts must be positive and weakly decreasing: {text}"
        )
    return Partition(parts)


def _format_floats(obj):
    if isinstance(obj, float):
        return float(f"{obj:.12g}")
    if isinstance(obj, dict):
        return {k: _format_floats(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_format_floats(v) for v in obj]
    return obj


def _command_line():
    """Reconstruct the invocation from the click context.

    Rebuilt from parsed parameters rather than sys.argv so the header
    is identical whether the command runs as a console script or
    in-process.
    """
    ctx = click.get_current_context(silent=True)
    if ctx is None:
        return " ".join(sys.argv[1:])
    pieces = [ctx.command_path]
    for name in sorted(ctx.params):
        value = ctx.params[name]
        if value is None:
            continue
        flag = "--" + ("lambda" if name == "lam" else name.replace("_", "-"))
        pieces.append(f"{flag} {value}")
    return " ".join(pieces)


def _emit_json(payload, seed=None, output=None):
    meta = {
        "command": _command_line(),
        "version": __version__,
    }
    if seed is not None:
        meta["seed"] = seed
    payload = dict(payload)
    payload["meta"] = meta
    text = json.dumps(_format_floats(payload), sort_keys=True, indent=2)
    if output:
        with open(output, "w") as fh:
            fh.write(text + "\n")
    else:
        click.echo(text)
    _report_runtime()


def _emit_csv(header, rows, seed=None, output=None):
    lines = [
        f"# command: {_command_line()}",
        f"# version: {__version__}",
    ]
    if seed is not None:
        lines.append(f"# seed: {seed}")
    lines.append(header)
    lines.extend(rows)
    text = "\n".join(lines)
    if output:
        with open(output, "w") as fh:
            fh.write(text + "\n")
    else:
        click.echo(text)
    _report_runtime()


def _partition_key(lam):
    return ",".join(str(p) for p in lam) if lam else "0"


@click.group()
@click.option(
    "--threads",
    type=int,
    default=None,
    help="Cap worker threads (also read from ALGCOMB_THREADS).",
)
def main(threads):
    """Exact and numerical experiments in algebraic combinatorics."""
    if threads is None:
        env = os.environ.get("ALGCOMB_THREADS")
        threads = int(env) if env else None
    if threads is not None:
        import numba

        numba.set_num_threads(max(1, threads))


@main.command()
@click.option("--mu", required=True, help="Partition, e.g. 2,1.")
@click.option("--nu", required=True)
@click.option("--lambda", "lam", required=True)
def lr(mu, nu, lam):
    """Littlewood-Richardson coefficient c_{mu,nu}^{lambda}."""
    c = symfunc.lr_coefficient(
        _parse_partition(mu), _parse_partition(nu), _parse_partition(lam)
    )
    _emit_json({"c": c})


@main.command("schur-expand")
@click.option("--mu", required=True)
@click.option("--nu", required=True)
def schur_expand_cmd(mu, nu):
    """Expand s_mu * s_nu in the Schur basis."""
    mu_p, nu_p = _parse_partition(mu), _parse_partition(nu)
    nv = max(mu_p.size + nu_p.size, 1)
    product = symfunc.schur_poly(mu_p, nv) * symfunc.schur_poly(nu_p, nv)
    expansion = symfunc.schur_expand(product)
    _emit_json(
        {
            "coefficients": {
                _partition_key(lam): int(c) for lam, c in expansion.items()
            }
        }
    )


@main.command("saturation")
@click.option("--bound", type=int, default=6, show_default=True)
@click.option("--m-max", type=int, default=4, show_default=True)
@click.option("--out", type=click.Choice(["json"]), default="json")
@click.option("--output", type=click.Path(), default=None)
def saturation_cmd(bound, m_max, out, output):
    """Scan for saturation violations (expected: none)."""
    report = saturation.saturation_scan(bound, m_max)
    _emit_json(report, output=output)
    if report["violations"]:
        sys.exit(EXIT_VERIFY)


@main.command()
@click.option("--n", type=int, required=True)
@click.option("--alpha", required=True, help="Weakly decreasing, e.g. 3,2.")
@click.option("--beta", required=True)
@click.option("--gamma", required=True)
def horn(n, alpha, beta, gamma):
    """Horn feasibility of a spectral triple, with the LR cross-check."""

    def vec(text):
        try:
            v = tuple(int(x) for x in text.split(","))
        except ValueError:
            raise click.BadParameter(f"expected integers: {text}")
        if len(v) != n:
            raise click.BadParameter(f"expected {n} entries: {text}")
        return v

    a, b, g = vec(alpha), vec(beta), vec(gamma)
    feasible = saturation.horn_feasible(a, b, g)
    result = {"horn_feasible": feasible}
    if all(x >= 0 for x in a + b + g):
        result["lr_nonzero"] = saturation.hermitian_feasible_integer(a, b, g)
        result["agree"] = result["lr_nonzero"] == feasible
    _emit_json(result)


@main.command("hall")
@click.option("--lambda", "lam", required=True)
@click.option("--mu", required=True)
@click.option("--nu", required=True)
@click.option("--primes", default="2,3,5,7,11,13", show_default=True)
@click.option("--out", type=click.Choice(["json"]), default="json")
@click.option("--output", type=click.Path(), default=None)
def hall_cmd(lam, mu, nu, primes, out, output):
    """Hall counts, the interpolated polynomial, and Maley positivity."""
    lam_p = _parse_partition(lam)
    mu_p = _parse_partition(mu)
    nu_p = _parse_partition(nu)
    prime_list = tuple(int(p) for p in primes.split(","))
    counts = {
        str(p): hall.hall_count(lam_p, mu_p, nu_p, p) for p in prime_list[:3]
    }
    poly = hall.hall_polynomial(lam_p, mu_p, nu_p, prime_list)
    _emit_json(
        {
            "counts": counts,
            "polynomial": list(poly.coeffs),
            "positive_after_shift": hall.maley_positivity(poly),
        },
        output=output,
    )


@main.command()
@click.option("--mu", required=True)
def nfact(mu, ):
    """Dimension and character of the derivative span of D_mu."""
    mu_p = _parse_partition(mu)
    span = gh_span(mu_p)
    n = mu_p.size
    table = graded_character(span, n)
    mults = irreducible_multiplicities(table)
    _emit_json(
        {
            "dim": span.dimension,
            "bigraded_dims": {
                f"{i},{j}": d
                for (i, j), d in sorted(span.bigraded_dimensions().items())
            },
            "multiplicities": {
                f"{bd[0]},{bd[1]}|{_partition_key(lam)}": m
                for (bd, lam), m in sorted(mults.items())
            },
        }
    )


@main.command()
@click.option("--n", type=int, required=True)
def coinv(n):
    """The coinvariant algebra of S_n via the derivative span of V_n."""
    span = coinvariant_span(n)
    graded = span.graded_dimensions()
    qf = q_factorial(n)
    payload = {
        "dim": span.dimension,
        "graded_dims": {str(i): graded.get(i, 0) for i in sorted(graded)},
        "q_factorial_match": list(qf.coeffs)
        == [graded.get(i, 0) for i in range(len(qf.coeffs))],
    }
    if n <= 5:
        table = graded_character(span, n)
        mults = irreducible_multiplicities(table)
        payload["multiplicities"] = {
            f"{bd[0]}|{_partition_key(lam)}": m
            for (bd, lam), m in sorted(mults.items())
        }
    _emit_json(payload)


@main.command()
@click.option("--n", type=int, required=True)
@click.option(
    "--characters",
    is_flag=True,
    help="Include the bigraded decomposition into irreducibles.",
)
@click.option("--out", type=click.Choice(["json"]), default="json")
@click.option("--output", type=click.Path(), default=None)
def diag(n, characters, out, output):
    """Diagonal coinvariants: bigraded dimensions and the Catalan part."""
    total = diagcoinv.total_dimension(n)
    dims = diagcoinv.bigraded_dimensions(n)
    gamma, gamma_total = diagcoinv.antiinvariant_dimensions(n)
    payload = {
        "total": total,
        "formula_check": total == (n + 1) ** (n - 1),
        "bigraded_dims": {
            f"{i},{j}": d for (i, j), d in sorted(dims.items())
        },
        "gamma_dims": {
            f"{i},{j}": d for (i, j), d in sorted(gamma.items())
        },
        "gamma_total": gamma_total,
        "catalan_check": gamma_total == diagcoinv.catalan(n),
    }
    if characters:
        mults = diagcoinv.character_multiplicities(n)
        payload["multiplicities"] = {
            f"{bd[0]},{bd[1]}|{_partition_key(lam)}": m
            for (bd, lam), m in sorted(mults.items())
        }
    _emit_json(payload, output=output)


@main.group("lis")
def lis_group():
    """Longest increasing subsequence experiments."""


@lis_group.command()
@click.option("--n", type=int, required=True)
def expect(n):
    """Exact E(n) from the hook-length identity."""
    e = lis.expected_is_exact(n)
    _emit_json(
        {
            "numerator": e.numerator,
            "denominator": e.denominator,
            "value": float(e),
            "ratio_to_sqrt_n": float(e) / n ** 0.5,
        }
    )


@lis_group.command()
@click.option("--k", type=int, required=True)
@click.option("--max-n", type=int, default=10, show_default=True)
def uk(k, max_n):
    """u_k(n) for n <= max-n from the Gessel determinant."""
    _, counts = lis.gessel_series(k, 2 * max_n)
    _emit_json({"k": k, "counts": counts[: max_n + 1]})


@lis_group.command()
@click.option("--n", type=int, required=True)
@click.option("--samples", type=int, required=True)
@click.option("--seed", type=int, default=42, show_default=True)
@click.option("--out", type=click.Choice(["csv"]), default="csv")
@click.option("--output", type=click.Path(), default=None)
def sample(n, samples, seed, out, output):
    """Sample the scaled statistic chi_n; one value per CSV row."""
    values = lis.sample_chi_n(n, samples, seed)
    _emit_csv(
        "chi",
        [f"{v:.12g}" for v in values],
        seed=seed,
        output=output,
    )


@lis_group.command("length")
@click.option("--w", required=True, help="Permutation, e.g. 2,7,4,1,6,3,9,5,8.")
def lis_length(w):
    """is(w) and the Greene/RSK shape of one permutation."""
    try:
        perm = tuple(int(x) for x in w.split(","))
    except ValueError:
        raise click.BadParameter(f"expected integers: {w}")
    try:
        shape = lis.greene_shape(perm)
    except ValueError as exc:
        raise click.BadParameter(str(exc))
    _emit_json(
        {
            "is": lis.is_length(perm),
            "shape": list(shape),
            "maj": lis.permutation_major_index(perm),
        }
    )


@main.group("tw")
def tw_group():
    """Tracy-Widom distribution and GUE experiments."""


@tw_group.command()
@click.option("--tmin", type=float, default=-5.0, show_default=True)
@click.option("--tmax", type=float, default=5.0, show_default=True)
@click.option("--step", type=float, default=0.01, show_default=True)
@click.option("--out", type=click.Choice(["csv"]), default="csv")
@click.option("--output", type=click.Path(), default=None)
def cdf(tmin, tmax, step, out, output):
    """Tabulate F(t); CSV columns t, F."""
    if tmin < -10.0 or tmax > 8.0 or tmin >= tmax:
        raise click.BadParameter("need -10 <= tmin < tmax <= 8")
    grid = tracywidom.tw_cdf(x_min=min(tmin, -6.0))
    ts = np.arange(tmin, tmax + step / 2, step)
    fs = np.interp(ts, grid.abscissae, grid.values)
    rows = [f"{t:.12g},{f:.12g}" for t, f in zip(ts, fs)]
    _emit_csv("t,F", rows, output=output)


@tw_group.command()
@click.option("--n", type=int, default=200, show_default=True)
@click.option("--samples", type=int, default=2000, show_default=True)
@click.option("--seed", type=int, default=7, show_default=True)
@click.option("--out", type=click.Choice(["csv"]), default="csv")
@click.option("--output", type=click.Path(), default=None)
def gue(n, samples, seed, out, output):
    """Sample scaled largest GUE eigenvalues; one value per CSV row."""
    values = tracywidom.sample_gue_chi(n, samples, seed)
    _emit_csv(
        "scaled_alpha1",
        [f"{v:.12g}" for v in values],
        seed=seed,
        output=output,
    )


@tw_group.command()
def moments():
    """Mean and variance of the Tracy-Widom distribution."""
    mean, var = tracywidom.tw_moments()
    _emit_json({"mean": mean, "variance": var})


@tw_group.command()
@click.option(
    "--lis-csv",
    "lis_csv",
    type=click.Path(exists=True),
    required=True,
    help="CSV of chi values from `algcomb lis sample`.",
)
def compare(lis_csv):
    """KS distance and moments of a chi sample against F(t)."""
    values = []
    with open(lis_csv) as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#") or line == "chi":
                continue
            values.append(float(line))
    if not values:
        raise click.BadParameter("no sample values found in the CSV")
    grid = tracywidom.tw_cdf()
    emp = tracywidom.EmpiricalDistribution(values)
    _emit_json(
        {
            "ks": tracywidom.ks_distance(emp, grid),
            "mean": emp.mean(),
            "var": emp.variance(),
            "count": len(emp),
        }
    )


@main.command("verify-all")
@click.option(
    "--level",
    type=click.Choice(["quick", "full"]),
    default="quick",
    show_default=True,
)
def verify_all(level):
    """Run the acceptance suite; nonzero exit on any failure."""
    start = time.monotonic()
    results, ok = verify.run_all(level, echo=click.echo)
    click.echo(
        f"{'ALL PASS' if ok else 'FAILURES PRESENT'} "
        f"({len(results)} criteria)",
    )
    print(f"runtime: {time.monotonic() - start:.1f}s", file=sys.stderr)
    if not ok:
        sys.exit(EXIT_VERIFY)


def _wrap_resource_errors(fn):
    def run(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except (ResourceCapExceeded, SizeCapExceeded) as exc:
            print(f"resource cap exceeded: {exc}", file=sys.stderr)
            sys.exit(EXIT_RESOURCE)

    return run


main.main = _wrap_resource_errors(main.main)


if __name__ == "__main__":
    main()
