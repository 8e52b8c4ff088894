#!/usr/bin/env python3
# src/cli/main.py
"""
iterpow command line: batch in, report out.

Every command prints one report on stdout (``--format text`` or ``--format json``).
Exit status: 0 on success, 1 on domain errors, 2 on usage and parse errors.
"""
import logging
import math
import sys
from typing import List, Optional, Sequence

import click

from config import settings
from src.errors import IterPowError, ParameterError
from src.gb import left_gb, quotient_dim, twosided_gb
from src.ideal import IdealHandle, ZeroCertificate, cert_zero_principal, iterate_powint, iteration_status, powint, vanishing_index
from src.invariant import UniPoly, invariant_factorization, restrict_derivations
from src.lie import (
    derived_is_nilpotent,
    derived_series,
    is_adapted_flag,
    is_completely_solvable,
    is_nilpotent,
    is_solvable,
    lower_central_series,
    validate_lie,
)
from .documents import ReportDocument, load_lie, load_spec
from .parser import parse_expression, parse_generators
from .verify import ring_summary, round_document, verify_theorem

logger = logging.getLogger(__name__)

spec_option = click.option("--spec", "spec_path", required=True, help="Ring (.ring) or Lie (.lie) spec document")
ideal_option = click.option("--ideal", "ideal_text", required=True, help='Comma-separated generators, e.g. "x1, x2"')
deg_option = click.option("--deg", default=settings.DEFAULT_DEGREE, show_default=True, type=int,
                          help="Degree bound d of the truncation S_{<=d}")
maxpow_option = click.option("--maxpow", default=settings.DEFAULT_MAX_POWER, show_default=True, type=int,
                             help="Largest power k of the ideal")
iters_option = click.option("--iters", default=settings.DEFAULT_ITERATIONS, show_default=True, type=int,
                            help="Number of iterated rounds")


def _emit(ctx: click.Context, doc: ReportDocument, text: Optional[str] = None) -> None:
    if ctx.obj["format"] == "json":
        click.echo(doc.to_json())
    else:
        click.echo(text if text is not None else doc.to_text())


def _qdim(value):
    return "infinite" if value == math.inf else value


@click.group(name="iterpow")
@click.option("--format", "output_format", type=click.Choice(["text", "json"]), default="text", show_default=True)
@click.option("-v", "--verbose", count=True, help="-v for INFO, -vv for DEBUG logging on stderr")
@click.pass_context
def cli(ctx: click.Context, output_format: str, verbose: int):
    """Iterated power intersections in iterated differential polynomial rings."""
    level = {0: settings.LOG_LEVEL, 1: "INFO"}.get(verbose, "DEBUG")
    logging.basicConfig(level=level, format=settings.LOG_FORMAT, stream=sys.stderr, force=True)
    ctx.ensure_object(dict)
    ctx.obj["format"] = output_format


@cli.command()
@spec_option
@click.pass_context
def validate(ctx: click.Context, spec_path: str):
    """Check the derivation table (support and Leibniz compatibility)."""
    spec, _ = load_spec(spec_path)
    report = spec.validation()
    doc = ReportDocument(
        command="validate",
        params={"spec": spec_path, "ring": ring_summary(spec)},
        result={
            "ok": report.ok,
            "support_ok": spec.support_ok,
            "filtered": spec.filtered,
            "t2_shape": spec.t2_shape,
            "violations": [v.as_dict() for v in report.violations],
        },
    )
    _emit(ctx, doc)
    if not report.ok:
        logger.error("❌ %s: %s", spec_path, report.summary())
        ctx.exit(1)


@cli.command()
@spec_option
@click.option("--expr", "expr_text", required=True, help="Element to normalize")
@click.pass_context
def nf(ctx: click.Context, spec_path: str, expr_text: str):
    """Print the normal form of an expression."""
    spec, _ = load_spec(spec_path)
    f = parse_expression(expr_text, spec)
    doc = ReportDocument(command="nf", params={"spec": spec_path, "expr": expr_text}, result={"nf": str(f)})
    _emit(ctx, doc, str(f))


@cli.command()
@spec_option
@click.option("--left", "left_text", required=True, help="Left factor")
@click.option("--right", "right_text", required=True, help="Right factor")
@click.pass_context
def mul(ctx: click.Context, spec_path: str, left_text: str, right_text: str):
    """Multiply two elements in the written order."""
    spec, _ = load_spec(spec_path)
    f = parse_expression(left_text, spec) * parse_expression(right_text, spec)
    doc = ReportDocument(
        command="mul", params={"spec": spec_path, "left": left_text, "right": right_text}, result={"product": str(f)}
    )
    _emit(ctx, doc, str(f))


@cli.command()
@spec_option
@ideal_option
@click.option("--left", "left_only", is_flag=True, help="Left ideal instead of two-sided")
@click.pass_context
def gb(ctx: click.Context, spec_path: str, ideal_text: str, left_only: bool):
    """Reduced Groebner basis and quotient dimension."""
    spec, _ = load_spec(spec_path)
    gens = parse_generators(ideal_text, spec)
    G = left_gb(gens, spec) if left_only else twosided_gb(gens, spec)
    doc = ReportDocument(
        command="gb",
        params={"spec": spec_path, "ideal": ideal_text, "sidedness": G.sidedness.value},
        result={
            "basis": [str(g) for g in G.elements],
            "unit": G.is_unit(),
            "quotient_dim": _qdim(quotient_dim(G)),
        },
    )
    _emit(ctx, doc)


@cli.command(name="powint")
@spec_option
@ideal_option
@deg_option
@maxpow_option
@click.pass_context
def powint_command(ctx: click.Context, spec_path: str, ideal_text: str, deg: int, maxpow: int):
    """Truncated power intersections I^k ∩ S_{<=d}, k = 1..maxpow."""
    spec, _ = load_spec(spec_path)
    I = IdealHandle(spec, parse_generators(ideal_text, spec))
    report = powint(I, deg, maxpow)
    result = {"k_dims": report.dims, "status": report.status.value}
    if report.stable_index is not None:
        result["stable_index"] = report.stable_index
    if report.ideal_stable_at is not None:
        result["ideal_stable_at"] = report.ideal_stable_at
    if report.candidate is not None:
        result["candidate"] = [str(row) for row in report.candidate.rows]
    doc = ReportDocument(
        command="powint", params={"spec": spec_path, "ideal": ideal_text, "deg": deg, "maxpow": maxpow}, result=result
    )
    _emit(ctx, doc)


@cli.command()
@spec_option
@ideal_option
@deg_option
@maxpow_option
@iters_option
@click.pass_context
def iterate(ctx: click.Context, spec_path: str, ideal_text: str, deg: int, maxpow: int, iters: int):
    """Approximate I(1), I(2), ... round by round."""
    spec, _ = load_spec(spec_path)
    I = IdealHandle(spec, parse_generators(ideal_text, spec))
    rounds = iterate_powint(I, deg, maxpow, iters)
    doc = ReportDocument(
        command="iterate",
        params={"spec": spec_path, "ideal": ideal_text, "deg": deg, "maxpow": maxpow, "iters": iters},
        rounds=[round_document(r) for r in rounds],
        status=iteration_status(rounds).value,
        m_obs=vanishing_index(rounds),
        notes=[] if I.is_proper() else ["is_proper = false: the unit ideal has no vanishing powers"],
    )
    _emit(ctx, doc)


@cli.command()
@spec_option
@ideal_option
@click.pass_context
def cert(ctx: click.Context, spec_path: str, ideal_text: str):
    """Try to certify that the intersection of all powers of a principal ideal is 0."""
    spec, _ = load_spec(spec_path)
    I = IdealHandle(spec, parse_generators(ideal_text, spec))
    outcome = cert_zero_principal(I)
    if isinstance(outcome, ZeroCertificate):
        result = {
            "certified": True,
            "generator": str(outcome.generator),
            "central": outcome.central,
            "justification": outcome.justification,
        }
    else:
        result = {"certified": False, "failure": outcome.value}
    doc = ReportDocument(command="cert", params={"spec": spec_path, "ideal": ideal_text}, result=result)
    _emit(ctx, doc)


@cli.command(name="invariant-factor")
@spec_option
@click.option("--poly", "poly_text", required=True, help="Monic element of F[x1]")
@click.option("--no-derivations", is_flag=True, help="Use Δ = ∅ (plain irreducible factorization)")
@click.pass_context
def invariant_factor(ctx: click.Context, spec_path: str, poly_text: str, no_derivations: bool):
    """Factor f into powers of minimal Δ-invariant divisors (Δ = δ2..δn restricted to F[x1])."""
    spec, _ = load_spec(spec_path)
    element = parse_expression(poly_text, spec)
    if element.max_var() > 1:
        raise ParameterError(f"--poly must lie in F[{spec.names[0]}], got {element}")
    f = UniPoly.from_poly(element)
    derivations = [] if no_derivations else restrict_derivations(spec)
    report = invariant_factorization(f, derivations)
    name = spec.names[0]
    doc = ReportDocument(
        command="invariant-factor",
        params={"spec": spec_path, "poly": poly_text, "derivations": [str(delta) for delta in derivations]},
        result={
            "sigma_m": [h.format(name) for h in report.sigma_m],
            "exponents": report.exponents,
            "irreducible": [f"({h.format(name)})^{e}" for h, e in report.irreducible],
            "complete": report.complete,
        },
        notes=report.notes,
    )
    _emit(ctx, doc)


@cli.command()
@spec_option
@click.pass_context
def lie(ctx: click.Context, spec_path: str):
    """Jacobi check, derived and lower central series, solvability flags."""
    algebra = load_lie(spec_path)
    report = validate_lie(algebra)
    result = {"jacobi_ok": report.ok, "violations": [v.as_dict() for v in report.violations]}
    if report.ok:
        result.update({
            "derived_series": derived_series(algebra),
            "lower_central_series": lower_central_series(algebra),
            "solvable": is_solvable(algebra),
            "completely_solvable": is_completely_solvable(algebra),
            "adapted_flag": is_adapted_flag(algebra),
            "nilpotent": is_nilpotent(algebra),
            "derived_nilpotent": derived_is_nilpotent(algebra),
        })
    doc = ReportDocument(command="lie", params={"spec": spec_path, "dim": algebra.n}, result=result)
    _emit(ctx, doc)
    if not report.ok:
        logger.error("❌ %s: %s", spec_path, report.summary())
        ctx.exit(1)


@cli.command()
@spec_option
@ideal_option
@deg_option
@maxpow_option
@iters_option
@click.pass_context
def verify(ctx: click.Context, spec_path: str, ideal_text: str, deg: int, maxpow: int, iters: int):
    """Check the hypotheses and compare the observed vanishing index with the bound."""
    spec, algebra = load_spec(spec_path)
    report = verify_theorem(spec, parse_generators(ideal_text, spec), deg, maxpow, iters, lie=algebra)
    report.params["spec"] = spec_path
    _emit(ctx, report.to_document())


def run_command(argv: Sequence[str]) -> int:
    """Run one command and return its exit status instead of exiting."""
    try:
        result = cli.main(args=list(argv), standalone_mode=False, prog_name="iterpow")
    except click.exceptions.Abort:
        click.echo("Aborted!", err=True)
        return 1
    except click.ClickException as e:
        e.show()
        return e.exit_code
    except IterPowError as e:
        logger.debug("command failed: %r", e)
        click.echo(f"error: {e.message}", err=True)
        return e.exit_code
    return result if isinstance(result, int) else 0


def entry(argv: Optional[List[str]] = None) -> None:
    sys.exit(run_command(sys.argv[1:] if argv is None else argv))


if __name__ == "__main__":
    entry()
