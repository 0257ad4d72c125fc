"""Command-line interface: argument parsing, dispatch and exit codes"""
import argparse
import logging
import sys
from typing import Optional, Sequence

from pydantic import ValidationError

from hexforce.commands import generate, matchings, polynomial, sequence, spectrum, validate
from hexforce.config import Settings, get_settings
from hexforce.errors import (
    CapExceededError,
    EmptyPolynomialError,
    InvalidParameterError,
    MethodMismatchError,
    ParseError,
    UnsupportedGraphError,
)
from hexforce.schemas import RunConfig
from hexforce.utils.output import to_csv, to_json, write_output

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VALIDATION_FAILED = 1
EXIT_INPUT_ERROR = 2
EXIT_METHOD_MISMATCH = 3

COMMANDS = {
    "generate": generate,
    "matchings": matchings,
    "polynomial": polynomial,
    "spectrum": spectrum,
    "sequence": sequence,
    "validate": validate,
}

INPUT_ERRORS = (ParseError, InvalidParameterError, ValidationError)
MISMATCH_ERRORS = (MethodMismatchError, UnsupportedGraphError, CapExceededError, EmptyPolynomialError)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--system", help="System document: inline JSON or a path to a JSON file")
    common.add_argument("--family", choices=["pyrene_chain", "auxiliary"], help="Built-in family")
    common.add_argument("--n", type=int, help="Family parameter")
    common.add_argument("--kind", choices=["forcing", "antiforcing"], default="forcing")
    common.add_argument("--method", choices=["brute", "oracle", "recurrence", "closed"], default="brute")
    common.add_argument("--format", choices=["json", "csv"], default="json")
    common.add_argument("--out", help="Write output to this file instead of stdout")
    common.add_argument("--max-n", type=int, dest="max_n", help="Largest n for sequence and validate")
    common.add_argument("--caps", help="Settings overrides, e.g. oracle_max_n=5,brute_forcing_max_n=2")
    common.add_argument("--verbose", "-v", action="count", default=0, help="-v for INFO, -vv for DEBUG")

    parser = argparse.ArgumentParser(
        prog="hexforce",
        description="Forcing and anti-forcing polynomials of pyrene chains",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("generate", parents=[common], help="Cells and graph statistics")
    sub.add_parser("matchings", parents=[common], help="List every perfect matching")
    sub.add_parser("polynomial", parents=[common], help="Forcing or anti-forcing polynomial")
    sub.add_parser("spectrum", parents=[common], help="Spectrum with multiplicities")
    seq = sub.add_parser("sequence", parents=[common], help="phi / idf / af_sum table")
    seq.add_argument("--sequence", choices=["phi", "idf", "af_sum"], default="phi")
    val = sub.add_parser("validate", parents=[common], help="Run every cross-check")
    val.add_argument(
        "--forcing-seed",
        dest="forcing_seed",
        help="Replace the F(H_1, x) seed of the forcing recurrence, coefficients c0,c1,...",
    )
    return parser


def parse_caps(text: Optional[str]) -> dict[str, str]:
    """``key=value,key=value`` into a dict of Settings overrides"""
    if not text:
        return {}
    overrides: dict[str, str] = {}
    for item in text.split(","):
        key, sep, value = item.partition("=")
        key = key.strip()
        if not sep or not key:
            raise InvalidParameterError(f"Malformed cap '{item}', expected key=value")
        if key not in Settings.model_fields:
            raise InvalidParameterError(f"Unknown cap '{key}'")
        overrides[key] = value.strip()
    return overrides


def parse_seed(text: Optional[str]) -> Optional[list[int]]:
    if text is None:
        return None
    try:
        return [int(c) for c in text.split(",")]
    except ValueError as e:
        raise InvalidParameterError(f"Malformed --forcing-seed '{text}'") from e


def resolve_settings(caps: Optional[str]) -> Settings:
    overrides = parse_caps(caps)
    if not overrides:
        return get_settings()
    return Settings(**overrides)


def configure_logging(settings: Settings, verbose: int) -> None:
    if verbose >= 2:
        level = logging.DEBUG
    elif verbose == 1:
        level = logging.INFO
    else:
        level = getattr(logging, settings.log_level.upper(), logging.WARNING)
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )


def execute(args: argparse.Namespace) -> int:
    settings = resolve_settings(args.caps)
    configure_logging(settings, args.verbose)
    config = RunConfig(
        command=args.command,
        system=args.system,
        family=args.family,
        n=args.n,
        kind=args.kind,
        method=args.method,
        sequence=getattr(args, "sequence", "phi"),
        format=args.format,
        out=args.out,
        max_n=args.max_n,
        forcing_seed=parse_seed(getattr(args, "forcing_seed", None)),
    )
    command = COMMANDS[config.command]
    report = command.run(config, settings)

    if config.format == "csv":
        header, rows = command.csv_rows(report)
        text = to_csv(header, rows)
    else:
        text = to_json(report)
    write_output(text, config.out)

    if config.command == "validate" and not report.passed:
        print(f"error: failed checks: {', '.join(report.failures)}", file=sys.stderr)
        return EXIT_VALIDATION_FAILED
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return execute(args)
    except INPUT_ERRORS as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except MISMATCH_ERRORS as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_METHOD_MISMATCH
