"""Command-line front end: ``tannydowling {table,eval,verify,egf,series}``.

Exit codes: 0 success (or only expected erratum failures), 1 unexpected
verdict, 2 usage or domain error.
"""

from __future__ import annotations

import csv
import io
import json
import sys
from fractions import Fraction
from typing import List, Optional, Sequence

import click

from . import fps, polynomials, series, triangles
from .arith import format_rational, parse_rational
from .identities import AS_PRINTED, CATALOG, CORRECTED, VARIANTS, Grid, run_suite

EXIT_OK, EXIT_UNEXPECTED, EXIT_USAGE = 0, 1, 2


class RationalType(click.ParamType):
    name = "rational"

    def convert(self, value, param, ctx):
        if isinstance(value, Fraction):
            return value
        try:
            return parse_rational(str(value))
        except ValueError:
            self.fail(f"{value!r} is not a rational (use p/q, p or a decimal literal)", param, ctx)


class RationalListType(click.ParamType):
    name = "rational-list"

    def convert(self, value, param, ctx):
        if isinstance(value, tuple):
            return value
        parts = [s for s in str(value).split(",") if s.strip()]
        if not parts:
            self.fail("empty list", param, ctx)
        try:
            return tuple(parse_rational(s) for s in parts)
        except ValueError:
            self.fail(f"{value!r} is not a comma-separated list of rationals", param, ctx)


RATIONAL = RationalType()
RATIONAL_LIST = RationalListType()


def _die(msg: str) -> None:
    click.echo(f"error: {msg}", err=True)
    sys.exit(EXIT_USAGE)


def _require(**kw) -> None:
    missing = [f"--{k.replace('_', '-')}" for k, v in kw.items() if v is None]
    if missing:
        _die(f"missing required option(s): {', '.join(missing)}")


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
def main() -> None:
    """Exact Stirling / Whitney / Tanny-Dowling computations and identity checks."""


TABLE_FAMILIES = ("stirling2", "twhitney", "whitney", "ncwhitney")


@main.command()
@click.argument("family", type=click.Choice(TABLE_FAMILIES))
@click.option("--m", type=RATIONAL, help="m parameter (twhitney, whitney, ncwhitney)")
@click.option("--a", type=RATIONAL, help="a parameter (ncwhitney)")
@click.option("--n-max", type=click.IntRange(min=0), default=6, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv", show_default=True)
def table(family: str, m, a, n_max: int, fmt: str) -> None:
    """Print rows 0..n-max of a number triangle."""
    if family == "stirling2":
        def value(n, k):
            return triangles.stirling2(n, k)
    elif family == "twhitney":
        _require(m=m)
        def value(n, k):
            return triangles.translated_whitney(m, n, k)
    elif family == "whitney":
        _require(m=m)
        def value(n, k):
            return triangles.whitney(m, n, k)
    else:
        _require(m=m, a=a)
        def value(n, k):
            return triangles.noncentral_whitney(m, a, n, k)
    try:
        rows = [[format_rational(value(n, k)) for k in range(n + 1)] for n in range(n_max + 1)]
    except ValueError as exc:
        _die(str(exc))
    if fmt == "json":
        click.echo(json.dumps(rows))
        return
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["n", "k", "value"])
    for n, row in enumerate(rows):
        for k, v in enumerate(row):
            writer.writerow([n, k, v])
    click.echo(buf.getvalue(), nl=False)


EVAL_FAMILIES = ("geometric", "geometric2", "ftilde", "td1", "td2")


@main.command("eval")
@click.argument("family", type=click.Choice(EVAL_FAMILIES))
@click.option("--n", type=click.IntRange(min=0), required=True)
@click.option("--x", type=RATIONAL, required=True)
@click.option("--m", type=RATIONAL)
@click.option("--a", type=RATIONAL)
@click.option("--r", type=RATIONAL, help="shift of the two-variable geometric polynomial")
def eval_cmd(family: str, n: int, x, m, a, r) -> None:
    """Evaluate a polynomial family at x exactly."""
    try:
        if family == "geometric":
            p = polynomials.geometric_polynomial(n)
        elif family == "geometric2":
            _require(r=r)
            p = polynomials.geometric_two_variable(r, n)
        elif family == "ftilde":
            _require(m=m, a=a)
            p = polynomials.noncentral_td(m, a, n)
        else:
            _require(m=m)
            p = polynomials.tanny_dowling(1 if family == "td1" else 2, m, n)
    except ValueError as exc:
        _die(str(exc))
    click.echo(format_rational(polynomials.eval_poly(p, x)))


def _parse_variants(v: str) -> Sequence[str]:
    return VARIANTS if v == "both" else (v,)


@main.command()
@click.argument("ids", nargs=-1, required=True)
@click.option("--m-set", type=RATIONAL_LIST, default="1,2,3", show_default=True)
@click.option("--a-set", type=RATIONAL_LIST, default="-2,-1,0,1,2", show_default=True)
@click.option("--n-max", type=click.IntRange(min=0), default=10, show_default=True)
@click.option("--x-set", type=RATIONAL_LIST, default="-1/2,1/2,1,2,5/3", show_default=True)
@click.option("--variant", type=click.Choice([AS_PRINTED, CORRECTED, "both"]), default="both", show_default=True)
@click.option("--out", type=click.Path(dir_okay=False, writable=True), help="write JSONL reports here")
def verify(ids, m_set, a_set, n_max, x_set, variant, out: Optional[str]) -> None:
    """Check identities (tags, or 'all') over a parameter grid."""
    if len(ids) == 1 and ids[0].lower() == "all":
        tags: List[str] = list(CATALOG)
    else:
        tags = [t for part in ids for t in part.split(",") if t]
        unknown = [t for t in tags if t not in CATALOG]
        if unknown:
            _die(f"unknown identity id(s): {', '.join(unknown)}; known: {', '.join(sorted(CATALOG))}")
    grid = Grid.make(m_set, a_set, n_max, x_set)
    summary = run_suite(grid, tags, _parse_variants(variant))
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            for rep in summary.reports:
                fh.write(json.dumps(rep.to_json()) + "\n")
    for line in summary.lines():
        click.echo(line)
    for msg in summary.unexpected:
        click.echo(f"UNEXPECTED: {msg}")
    click.echo(f"{len(summary.reports)} reports, {len(summary.unexpected)} unexpected")
    sys.exit(EXIT_OK if summary.ok else EXIT_UNEXPECTED)


@main.command()
@click.option("--m", type=RATIONAL, required=True)
@click.option("--a", type=RATIONAL, required=True)
@click.option("--x", type=RATIONAL, required=True)
@click.option("--order", type=click.IntRange(min=0), default=12, show_default=True)
def egf(m, a, x, order: int) -> None:
    """Coefficients of m e^{-az}/(m - x(e^{mz}-1)), checked against the defining sum."""
    if m == 0:
        _die("m must be nonzero")
    values = fps.ftilde_egf(m, a, x, order)
    click.echo(",".join(format_rational(v) for v in values))
    direct = [polynomials.eval_poly(polynomials.noncentral_td(m, a, n), x) for n in range(order + 1)]
    match = direct == values
    click.echo(f"definitional match: {'yes' if match else 'NO'}")
    sys.exit(EXIT_OK if match else EXIT_UNEXPECTED)


@main.command("series")
@click.option("--m", type=RATIONAL, required=True)
@click.option("--a", type=RATIONAL, required=True)
@click.option("--n", type=click.IntRange(min=0), required=True)
@click.option("--x", type=RATIONAL, required=True)
@click.option("--eps", type=RATIONAL, default="1e-20", show_default=True)
@click.option("--max-terms", type=click.IntRange(min=1), default=10_000, show_default=True)
def series_cmd(m, a, n: int, x, eps, max_terms: int) -> None:
    """Certified enclosure of m/(m+x) sum_k (x/(m+x))^k (mk-a)^n."""
    try:
        enc = series.ftilde_series(m, a, n, x, eps, max_terms)
    except ValueError as exc:
        _die(str(exc))
    except series.SeriesNotConverged as exc:
        click.echo(f"unconverged: {exc}")
        click.echo(f"partial_sum: {format_rational(exc.partial_sum)}")
        sys.exit(EXIT_UNEXPECTED)
    exact = polynomials.eval_poly(polynomials.noncentral_td(m, a, n), x)
    contained = exact in enc
    click.echo(f"lo: {format_rational(enc.lo)}")
    click.echo(f"hi: {format_rational(enc.hi)}")
    click.echo(f"terms_used: {enc.terms_used}")
    click.echo(f"exact: {format_rational(exact)}")
    click.echo(f"contains exact: {'yes' if contained else 'NO'}")
    sys.exit(EXIT_OK if contained else EXIT_UNEXPECTED)


if __name__ == "__main__":
    main()
