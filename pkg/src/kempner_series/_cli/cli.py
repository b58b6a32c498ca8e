import csv
import json
import logging
import math
from collections.abc import Callable, Iterator
from contextlib import contextmanager
from typing import Any

import click
from pydantic import ValidationError

from kempner_series._utils import get_settings
from kempner_series.census import (
    census_table,
    enumerate_interval,
    interval_count,
    log_count,
    verify_census,
)
from kempner_series.errors import (
    KempnerError,
    KempnerErrorCategory,
    KempnerErrorCode,
)
from kempner_series.schedule import Schedule, in_m_set, load_schedule, spec_hash
from kempner_series.series import (
    abscissa,
    classify,
    critical_ratio,
    divergence_certificate,
    empirical_abscissa,
    evaluate,
)

from ._config import CRITICAL, Command, OutputFormat, RunConfig
from ._serialize import flatten_row, serialize_output

logger = logging.getLogger(__name__)

LOG_LEVELS = ["DEBUG", "INFO", "WARNING", "ERROR"]


class DigitRange(click.ParamType):
    """`a..b` (inclusive) or a single integer."""

    name = "a..b"

    def convert(self, value: Any, param: Any, ctx: Any) -> tuple[int, int]:
        if isinstance(value, tuple):
            return value
        low, sep, high = str(value).strip().partition("..")
        try:
            a = int(low)
            b = int(high) if sep else a
        except ValueError:
            self.fail(f"{value!r} is neither an integer nor an a..b range", param, ctx)
        return a, b


class Sigma(click.ParamType):
    """A finite real number or the literal `critical`."""

    name = "sigma"

    def convert(self, value: Any, param: Any, ctx: Any) -> float | str:
        if isinstance(value, float):
            return value
        text = str(value).strip()
        if text.lower() == CRITICAL:
            return CRITICAL
        try:
            sigma = float(text)
        except ValueError:
            self.fail(f"{value!r} is neither a number nor '{CRITICAL}'", param, ctx)
        if not math.isfinite(sigma):
            self.fail(f"sigma must be finite, got {value!r}", param, ctx)
        return sigma


def report_options(func: Callable[..., Any]) -> Callable[..., Any]:
    """Options shared by every command."""
    func = click.option(
        "--log-level",
        type=click.Choice(LOG_LEVELS, case_sensitive=False),
        default=None,
        help="Overrides KEMPNER_LOG_LEVEL. Logs go to stderr.",
    )(func)
    func = click.option(
        "--output",
        "output_path",
        type=click.Path(dir_okay=False),
        default=None,
        help="Write the report here instead of stdout.",
    )(func)
    func = click.option(
        "--format",
        "output_format",
        type=click.Choice([f.value for f in OutputFormat]),
        default=OutputFormat.JSON.value,
        show_default=True,
    )(func)
    func = click.option(
        "--spec",
        "schedule_path",
        type=click.Path(dir_okay=False),
        required=True,
        help="Schedule spec JSON file.",
    )(func)
    return func


class _StderrHandler(logging.Handler):
    """Writes records through click so they follow the current stderr."""

    def emit(self, record: logging.LogRecord) -> None:
        try:
            click.echo(self.format(record), err=True)
        except Exception:
            self.handleError(record)


def _configure_logging(level: str | None) -> None:
    logging.basicConfig(
        level=(level or get_settings().log_level).upper(),
        handlers=[_StderrHandler()],
        format="%(levelname)s %(name)s: %(message)s",
        force=True,
    )


def _build_config(command: Command, **options: Any) -> RunConfig:
    try:
        return RunConfig(command=command, **options)
    except ValidationError as e:
        problems = "; ".join(str(err["msg"]) for err in e.errors())
        raise click.UsageError(problems) from e


@contextmanager
def _session(log_level: str | None) -> Iterator[None]:
    """Configure logging and turn module errors into a one-line diagnostic."""
    _configure_logging(log_level)
    try:
        yield
    except KempnerError as e:
        logger.debug("Command failed: %s", e.error_info)
        click.echo(str(e), err=True)
        click.get_current_context().exit(1)


def _resolve_sigma(schedule: Schedule, sigma: float | str | None) -> float:
    if sigma is None or sigma == CRITICAL:
        return abscissa(schedule).value
    return float(sigma)


def _document(
    schedule: Schedule, config: RunConfig, payload: dict[str, Any]
) -> dict[str, Any]:
    return {
        "command": config.command.value,
        "spec_hash": spec_hash(schedule),
        "g": schedule.g,
        **payload,
    }


def _emit(
    schedule: Schedule,
    config: RunConfig,
    document: dict[str, Any],
    rows: list[dict[str, Any]],
    columns: list[str] | None = None,
) -> None:
    """Write the JSON document or the CSV rows, each row tagged with the schedule."""
    with click.open_file(config.output_path or "-", "w", encoding="utf-8") as f:
        if config.output_format == OutputFormat.JSON:
            f.write(json.dumps(document, indent=2) + "\n")
            return

        header = {"spec_hash": spec_hash(schedule), "g": schedule.g}
        flat = [{**flatten_row(row), **header} for row in rows]
        if columns is None:
            columns = list(flat[0]) if flat else list(header)
        else:
            columns = columns + list(header)
        writer = csv.DictWriter(f, fieldnames=columns, lineterminator="\n")
        writer.writeheader()
        writer.writerows(flat)
    logger.debug("Wrote %s report to %s", config.output_format.value, config.output_path or "stdout")


@click.group()
@click.version_option(package_name="kempner-series")
def cli() -> None:
    """Dirichlet series over integers with missing g-adic digits."""


@cli.command("sigma-c")
@report_options
def sigma_c(
    schedule_path: str,
    output_format: str,
    output_path: str | None,
    log_level: str | None,
) -> None:
    """Abscissa of convergence, symbolic and numeric."""
    config = _build_config(
        Command.SIGMA_C,
        schedule_path=schedule_path,
        output_format=output_format,
        output_path=output_path,
    )
    with _session(log_level):
        schedule = load_schedule(config.schedule_path)
        report = abscissa(schedule)
        payload = {
            "sigma_c": report.value,
            "diverges_at_sigma_c": report.diverges_at_sigma_c,
            "m_set_infinite": report.m_set_infinite,
            "polynomial": report.polynomial,
            "symbolic": report.symbolic,
            "critical_ratio": critical_ratio(schedule, report.value),
            "beta": schedule.beta,
            "alpha": serialize_output(list(schedule.alpha)),
        }
        document = _document(schedule, config, {**payload, "terms": serialize_output(report.terms)})
        _emit(schedule, config, document, [payload])


@cli.command()
@report_options
@click.option("--m", "m_range", type=DigitRange(), required=True, help="Digit lengths a..b.")
@click.option("--verify", is_flag=True, help="Cross-check every count by a brute-force scan.")
@click.option("--workers", type=int, default=1, show_default=True, help="Processes for the scan.")
def census(
    schedule_path: str,
    output_format: str,
    output_path: str | None,
    log_level: str | None,
    m_range: tuple[int, int],
    verify: bool,
    workers: int,
) -> None:
    """Exact member counts per digit length."""
    config = _build_config(
        Command.CENSUS,
        schedule_path=schedule_path,
        output_format=output_format,
        output_path=output_path,
        m_range=m_range,
        verify=verify,
        workers=workers,
    )
    with _session(log_level):
        schedule = load_schedule(config.schedule_path)
        rows = census_table(
            schedule, config.m_values, verify=config.verify, workers=config.workers
        )
        serialized = serialize_output(rows)
        _emit(
            schedule,
            config,
            _document(schedule, config, {"rows": serialized}),
            serialized,
            ["m", "in_M", "count", "method"],
        )
        if config.verify:
            verify_census(rows)


@cli.command("enumerate")
@report_options
@click.option("--m", "m_range", type=DigitRange(), required=True, help="Digit lengths a..b.")
def enumerate_members(
    schedule_path: str,
    output_format: str,
    output_path: str | None,
    log_level: str | None,
    m_range: tuple[int, int],
) -> None:
    """Every member with a digit length in the range, ascending (digits c_0 first)."""
    config = _build_config(
        Command.ENUMERATE,
        schedule_path=schedule_path,
        output_format=output_format,
        output_path=output_path,
        m_range=m_range,
    )
    with _session(log_level):
        schedule = load_schedule(config.schedule_path)
        limit = get_settings().max_enum
        total = sum(interval_count(schedule, m).count for m in config.m_values)
        if total > limit:
            raise KempnerError(
                KempnerErrorCode.ENUMERATION_TOO_LARGE,
                "Enumeration too large",
                f"{total} members exceed the limit {limit} (KEMPNER_MAX_ENUM)",
                KempnerErrorCategory.LIMIT,
            )
        rows = [
            {"m": m, **serialize_output(member)}
            for m in config.m_values
            for member in enumerate_interval(schedule, m)
        ]
        _emit(
            schedule,
            config,
            _document(schedule, config, {"count": total, "members": rows}),
            rows,
            ["m", "value", "digits"],
        )


@cli.command("sum")
@report_options
@click.option("--sigma", type=Sigma(), required=True, help="Real exponent or 'critical'.")
@click.option("--m-enumerated", type=int, default=6, show_default=True, help="Depth of exact summation.")
@click.option("--m-counted", type=int, default=None, help="Depth of count brackets [default: --m-enumerated].")
def sum_series(
    schedule_path: str,
    output_format: str,
    output_path: str | None,
    log_level: str | None,
    sigma: float | str,
    m_enumerated: int,
    m_counted: int | None,
) -> None:
    """Rigorous enclosure of F_A(sigma)."""
    config = _build_config(
        Command.SUM,
        schedule_path=schedule_path,
        output_format=output_format,
        output_path=output_path,
        sigma=sigma,
        m_enumerated=m_enumerated,
        m_counted=m_counted,
    )
    with _session(log_level):
        schedule = load_schedule(config.schedule_path)
        enclosure = evaluate(
            schedule,
            _resolve_sigma(schedule, config.sigma),
            config.m_enumerated,
            config.counted_depth,
        )
        payload = serialize_output(enclosure)
        _emit(schedule, config, _document(schedule, config, payload), [payload])


@cli.command()
@report_options
@click.option("--m", "m_range", type=DigitRange(), required=True, help="Digit lengths a..b.")
def estimate(
    schedule_path: str,
    output_format: str,
    output_path: str | None,
    log_level: str | None,
    m_range: tuple[int, int],
) -> None:
    """Growth-rate estimates log|A in I_m| / (m log g) against sigma_c."""
    config = _build_config(
        Command.ESTIMATE,
        schedule_path=schedule_path,
        output_format=output_format,
        output_path=output_path,
        m_range=m_range,
    )
    with _session(log_level):
        schedule = load_schedule(config.schedule_path)
        target = abscissa(schedule).value
        rows: list[dict[str, Any]] = []
        for m in config.m_values:
            if not in_m_set(schedule, m):
                rows.append(
                    {"m": m, "in_M": False, "log_count": None, "estimate": None, "deviation": None}
                )
                continue
            value = empirical_abscissa(schedule, m)
            rows.append(
                {
                    "m": m,
                    "in_M": True,
                    "log_count": log_count(schedule, m),
                    "estimate": value,
                    "deviation": value - target,
                }
            )
        _emit(
            schedule,
            config,
            _document(schedule, config, {"sigma_c": target, "rows": rows}),
            rows,
            ["m", "in_M", "log_count", "estimate", "deviation"],
        )


@cli.command()
@report_options
@click.option("--sigma", type=Sigma(), default=CRITICAL, show_default=True, help="Exponent at or below sigma_c.")
@click.option("--m-max", type=int, default=100, show_default=True, help="Largest digit length included.")
def certify(
    schedule_path: str,
    output_format: str,
    output_path: str | None,
    log_level: str | None,
    sigma: float | str,
    m_max: int,
) -> None:
    """Divergence certificate at or below the abscissa."""
    config = _build_config(
        Command.CERTIFY,
        schedule_path=schedule_path,
        output_format=output_format,
        output_path=output_path,
        sigma=sigma,
        m_max=m_max,
    )
    with _session(log_level):
        schedule = load_schedule(config.schedule_path)
        exact = None if config.sigma == CRITICAL else _resolve_sigma(schedule, config.sigma)
        certificate = divergence_certificate(schedule, exact, config.m_max)
        payload = serialize_output(certificate)
        _emit(schedule, config, _document(schedule, config, payload), [payload])


@cli.command("classify")
@report_options
@click.option("--sigma", type=Sigma(), required=True, help="Real exponent or 'critical'.")
def classify_sigma(
    schedule_path: str,
    output_format: str,
    output_path: str | None,
    log_level: str | None,
    sigma: float | str,
) -> None:
    """Converges, Diverges or Polynomial at sigma."""
    config = _build_config(
        Command.CLASSIFY,
        schedule_path=schedule_path,
        output_format=output_format,
        output_path=output_path,
        sigma=sigma,
    )
    with _session(log_level):
        schedule = load_schedule(config.schedule_path)
        classification = classify(schedule, _resolve_sigma(schedule, config.sigma))
        payload = serialize_output(classification)
        _emit(schedule, config, _document(schedule, config, payload), [payload])


def run(argv: list[str]) -> int:
    """Invoke the CLI in-process and return its exit status."""
    try:
        status = cli.main(args=argv, prog_name="kempner", standalone_mode=False)
    except click.ClickException as e:
        e.show()
        return e.exit_code
    except click.exceptions.Abort:
        return 1
    return status if isinstance(status, int) else 0


if __name__ == "__main__":
    cli()
