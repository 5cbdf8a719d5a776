from __future__ import annotations

import dataclasses
import logging
import sys
from pathlib import Path
from typing import Any, Callable, Optional

import click

from catalog.monolith import EXACT, SAMPLING, monolith_claim_check
from catalog.reports import VerificationReport, render_text, validate_report
from catalog.structure import build_report, element_report, lattice_report, parity_report, projection_report
from catalog.triple import triple_catalog_verify
from catalog.verify import AMBIENT_KINDS, default_ambient, normalizer_check, verify_catalog
from catalog.witness import commutator_witness
from config import Settings, load_claims, load_env, load_settings
from group.enumeration import EnumerationLimitError
from tableau.spec import WreathSpec, parse_spec
from wreath.products import build_wreath

logger = logging.getLogger("wreath")

LOG_LEVELS = {0: logging.WARNING, 1: logging.INFO}


def _spec(ctx: click.Context, param: click.Parameter, value: str) -> WreathSpec:
    try:
        return parse_spec(value)
    except ValueError as exc:
        raise click.BadParameter(str(exc), ctx=ctx, param=param) from None


def common_options(func: Callable[..., Any]) -> Callable[..., Any]:
    options = [
        click.option("--seed", type=click.IntRange(min=0), default=None, help="Seed for every random choice."),
        click.option("--limit", type=click.IntRange(min=1), default=None, help="Enumeration limit in elements."),
        click.option("--leaf-limit", type=click.IntRange(min=1), default=None, help="Largest permutation degree."),
        click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text", show_default=True),
        click.option("--out", type=click.Path(dir_okay=False, path_type=Path), default=None, help="Write the report here."),
        click.option("--sampling", type=click.IntRange(min=1), default=None, help="Sample count for randomized checks."),
        click.option("-v", "--verbose", count=True, help="-v for info, -vv for debug logging."),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def _settings(seed: Optional[int], limit: Optional[int], leaf_limit: Optional[int], sampling: Optional[int]) -> Settings:
    settings = load_settings()
    overrides = {
        "seed": seed,
        "enumeration_limit": limit,
        "leaf_limit": leaf_limit,
        "sampling": sampling,
    }
    return dataclasses.replace(settings, **{k: v for k, v in overrides.items() if v is not None})


def _emit(report: VerificationReport, fmt: str, out: Optional[Path]) -> None:
    if fmt == "json":
        payload = report.to_dict()
        validate_report(payload)
        text = report.to_json()
    else:
        text = render_text(report)
    if out is None:
        click.echo(text, nl=False)
        return
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(text, encoding="utf-8")
    logger.info("report written to %s", out)


def _run(ctx: click.Context, produce: Callable[[Settings], VerificationReport], **options: Any) -> None:
    logging.basicConfig(
        level=LOG_LEVELS.get(options["verbose"], logging.DEBUG),
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
        force=True,
    )
    load_env()
    try:
        settings = _settings(options["seed"], options["limit"], options["leaf_limit"], options["sampling"])
        report = produce(settings)
    except ValueError as exc:
        raise click.UsageError(str(exc), ctx=ctx) from None
    except EnumerationLimitError as exc:
        click.echo(f"error: {exc} (order {exc.order}, limit {exc.limit})", err=True)
        ctx.exit(1)
    _emit(report, options["fmt"], options["out"])
    ctx.exit(report.exit_code)


@click.group()
def cli() -> None:
    """Verify normal-subgroup claims for iterated wreath products of symmetric groups."""


@cli.command()
@click.argument("spec", callback=_spec)
@click.option("--order", "order_only", is_flag=True, help="Print only the group order.")
@common_options
@click.pass_context
def build(ctx: click.Context, spec: WreathSpec, order_only: bool, **options: Any) -> None:
    """Build the wreath product SPEC and check its order."""
    if order_only:
        try:
            settings = _settings(options["seed"], options["limit"], options["leaf_limit"], options["sampling"])
            click.echo(build_wreath(spec, settings.leaf_limit).order)
        except ValueError as exc:
            raise click.UsageError(str(exc), ctx=ctx) from None
        return
    _run(ctx, lambda settings: build_report(spec, settings), **options)


@cli.command()
@click.argument("spec", callback=_spec)
@click.argument("element")
@common_options
@click.pass_context
def element(ctx: click.Context, spec: WreathSpec, element: str, **options: Any) -> None:
    """Classify ELEMENT, a tableau literal or a cycle string on the leaves."""
    _run(ctx, lambda settings: element_report(spec, element, settings), **options)


@cli.command("normal-subgroups")
@click.argument("spec", callback=_spec)
@common_options
@click.pass_context
def normal_subgroups(ctx: click.Context, spec: WreathSpec, **options: Any) -> None:
    """Enumerate every normal subgroup of SPEC."""
    _run(ctx, lambda settings: lattice_report(spec, settings, load_claims()), **options)


@cli.command()
@click.argument("spec", callback=_spec)
@click.option("--family", type=click.Choice(sorted(AMBIENT_KINDS)), default=None, help="Ambient catalog.")
@common_options
@click.pass_context
def catalog(ctx: click.Context, spec: WreathSpec, family: Optional[str], **options: Any) -> None:
    """Check the catalog of named normal subgroups in a depth-2 SPEC."""
    def produce(settings: Settings) -> VerificationReport:
        ambient = family or default_ambient(spec)
        return verify_catalog(ambient, spec, settings, load_claims())

    _run(ctx, produce, **options)


@cli.command()
@click.argument("n", type=click.IntRange(min=2))
@common_options
@click.pass_context
def triple(ctx: click.Context, n: int, **options: Any) -> None:
    """Check the candidate normal subgroups of S_n wr S_n wr S_n."""
    _run(ctx, lambda settings: triple_catalog_verify(n, settings, load_claims()), **options)


@cli.command()
@click.argument("spec", callback=_spec)
@click.option("--mode", type=click.Choice([EXACT, SAMPLING]), default=EXACT, show_default=True)
@common_options
@click.pass_context
def monolith(ctx: click.Context, spec: WreathSpec, mode: str, **options: Any) -> None:
    """Compare the monolith of SPEC with e wr A~_m."""
    _run(ctx, lambda settings: monolith_claim_check(spec, mode, settings), **options)


@cli.command()
@click.argument("spec", callback=_spec)
@common_options
@click.pass_context
def parity(ctx: click.Context, spec: WreathSpec, **options: Any) -> None:
    """Index and exponent of the level-parity quotient."""
    _run(ctx, lambda settings: parity_report(spec, settings), **options)


@cli.command()
@click.argument("spec", callback=_spec)
@click.option("--to", "to_depth", type=click.IntRange(min=1), required=True, help="Target depth.")
@click.option("--element", "element_text", default=None, help="Element to project.")
@common_options
@click.pass_context
def project(ctx: click.Context, spec: WreathSpec, to_depth: int, element_text: Optional[str], **options: Any) -> None:
    """Truncate SPEC to its first levels and check the projection."""
    _run(ctx, lambda settings: projection_report(spec, to_depth, settings, element_text), **options)


@cli.command()
@click.argument("spec", callback=_spec)
@click.option("--level", type=click.IntRange(min=1), required=True)
@click.option("--vertex", type=click.IntRange(min=1), default=1, show_default=True)
@common_options
@click.pass_context
def witness(ctx: click.Context, spec: WreathSpec, level: int, vertex: int, **options: Any) -> None:
    """Build the nested-commutator witness at LEVEL and VERTEX."""
    def produce(settings: Settings) -> VerificationReport:
        _, report = commutator_witness(spec, level, vertex, settings.seed, settings.leaf_limit)
        return report

    _run(ctx, produce, **options)


@cli.command()
@click.argument("spec", callback=_spec)
@common_options
@click.pass_context
def normalizer(ctx: click.Context, spec: WreathSpec, **options: Any) -> None:
    """Normalizer of A_n wr A_m inside S_n wr S_m."""
    _run(ctx, lambda settings: normalizer_check(spec, settings), **options)


if __name__ == "__main__":
    cli(prog_name="wreath")
