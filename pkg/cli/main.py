"""Command-line interface for the Poincaré series engine.

Every command writes its result to stdout in a fixed text format and all
diagnostics to stderr. Exit codes: 0 success/PASS/VERIFIED, 1 FAIL/mismatch,
2 input errors.
"""

import logging
import sys
from typing import List, Optional

import click
from rich.console import Console
from rich.logging import RichHandler

from poincareseries.config import get_config
from poincareseries.core import CFConvention
from poincareseries.dualgraph import (
    ClassificationInvariants,
    DualGraphPiece,
    ValuationType,
    classify,
    piece_q,
    table_row,
)
from poincareseries.errors import PoincareSeriesError, SpecValidationError
from poincareseries.poincare import (
    diff_series,
    render_product,
    series_factors,
    series_from_enumeration,
    series_from_formula,
)
from poincareseries.semigroup import brute_force_oracle, represent, verify_uniqueness
from poincareseries.core.encoding import parse_value

from cli.utils import parse_bound, parse_spec_file, spec_from_document

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2

spec_option = click.option(
    "--spec",
    "spec_path",
    required=True,
    type=click.Path(exists=True, dir_okay=False),
    help="Valuation spec file (JSON)",
)
bound_option = click.option(
    "--bound", required=True, help='Truncation bound: "12", "2+0*tau" or a box "(2,2)"'
)


def _configure_logging(verbose: bool):
    level = logging.DEBUG if verbose else getattr(logging, get_config()["log_level"], logging.WARNING)
    logging.basicConfig(
        level=level,
        format="%(name)s - %(message)s",
        handlers=[RichHandler(console=Console(stderr=True), show_time=False, show_path=False)],
        force=True,
    )


@click.group()
@click.option("--verbose", "-v", is_flag=True, help="Log engine steps to stderr")
def cli(verbose: bool):
    """Value semigroups and Poincaré series of surface valuations."""
    _configure_logging(verbose)


@cli.command("classify")
@spec_option
def classify_command(spec_path: str) -> int:
    """Candidate valuation types from the classification block."""
    doc = parse_spec_file(spec_path)
    if doc.classification is not None:
        block = doc.classification
        inv = ClassificationInvariants(
            block.rank, block.rational_rank, block.dimension, block.discrete
        )
    else:
        inv, _ = table_row(ValuationType(doc.type))
        logger.info(f"no classification block; using the row of declared Type {doc.type}")
    candidates = sorted(t.value for t in classify(inv))
    click.echo(f"candidates: {', '.join(candidates)}")
    if doc.type not in candidates:
        click.echo(f"❌ declared Type {doc.type} is not a candidate", err=True)
        return EXIT_FAIL
    return EXIT_OK


@cli.command("q")
@spec_option
def q_command(spec_path: str) -> int:
    """(p, q) of every dual-graph piece."""
    doc = parse_spec_file(spec_path)
    if not doc.pieces:
        raise click.UsageError("spec file has no pieces")
    conv = CFConvention(doc.cf_convention.value if doc.cf_convention else get_config()["cf_convention"])
    for counts in doc.pieces:
        p, q = piece_q(DualGraphPiece(tuple(counts)), conv)
        click.echo(f"[{','.join(map(str, counts))}]\tp={p}\tq={q}")
    return EXIT_OK


@cli.command("factors")
@spec_option
def factors_command(spec_path: str) -> int:
    """The closed-form product for the spec."""
    spec = spec_from_document(parse_spec_file(spec_path))
    click.echo(render_product(series_factors(spec)))
    return EXIT_OK


@cli.command("series")
@spec_option
@bound_option
@click.option(
    "--method",
    type=click.Choice(["formula", "enum", "both"]),
    default="formula",
    show_default=True,
    help="Expand the product formula, enumerate the semigroup, or both and compare",
)
def series_command(spec_path: str, bound: str, method: str) -> int:
    """Truncated Poincaré series."""
    spec = spec_from_document(parse_spec_file(spec_path))
    truncation = parse_bound(bound, spec)

    # Both sides are computed before anything reaches stdout
    formula = series_from_formula(spec, truncation) if method != "enum" else None
    enumerated = series_from_enumeration(spec, truncation) if method != "formula" else None

    shown = enumerated if formula is None else formula
    click.echo(shown.to_text(), nl=False)
    if method != "both":
        return EXIT_OK

    diff = diff_series(formula, enumerated, spec.tau)
    click.echo(diff.describe())
    return EXIT_OK if diff.equal else EXIT_FAIL


@cli.command("verify")
@spec_option
@bound_option
def verify_command(spec_path: str, bound: str) -> int:
    """Check unique representation against the brute-force oracle."""
    spec = spec_from_document(parse_spec_file(spec_path))
    report = verify_uniqueness(spec, parse_bound(bound, spec))
    if report.passed:
        click.echo(f"PASS ({report.values_checked} values checked)")
        return EXIT_OK
    if report.violations:
        click.echo(f"FAIL at {report.first_failure} ({len(report.violations)} violations)")
    else:
        click.echo("FAIL (enumeration disagrees with the oracle)")
    for violation in report.violations:
        click.echo(violation.describe())
    for line in report.disagreements:
        click.echo(line)
    return EXIT_FAIL


@cli.command("oracle")
@spec_option
@bound_option
def oracle_command(spec_path: str, bound: str) -> int:
    """Every value with every unconstrained representation (debug aid)."""
    spec = spec_from_document(parse_spec_file(spec_path))
    for value, reps in brute_force_oracle(spec, parse_bound(bound, spec)).items():
        click.echo(f"{value}\t" + " ".join("(" + ",".join(map(str, r)) + ")" for r in reps))
    return EXIT_OK


@cli.command("represent")
@spec_option
@click.option("--value", "value_text", required=True, help="A value encoding, e.g. 7")
def represent_command(spec_path: str, value_text: str) -> int:
    """The unique constrained representation of one value."""
    spec = spec_from_document(parse_spec_file(spec_path))
    value = parse_value(value_text)
    rep = represent(spec, value)
    if rep is None:
        click.echo(f"{value}\tnot in S")
        return EXIT_FAIL
    click.echo(f"{value}\t{rep}")
    return EXIT_OK


def run(argv: Optional[List[str]] = None) -> int:
    """Run one command and return its exit code."""
    try:
        rv = cli.main(args=argv, prog_name="poincare-series", standalone_mode=False)
    except click.ClickException as e:
        click.echo(f"❌ {e.format_message()}", err=True)
        return EXIT_INPUT
    except click.Abort:
        click.echo("❌ aborted", err=True)
        return EXIT_INPUT
    except SpecValidationError as e:
        for violation in e.violations:
            click.echo(f"❌ {type(violation).__name__}: {violation}", err=True)
        return EXIT_INPUT
    except (PoincareSeriesError, ValueError) as e:
        click.echo(f"❌ {type(e).__name__}: {e}", err=True)
        return EXIT_INPUT
    return EXIT_OK if rv is None else rv


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
