"""Command line entry point: verify, derive spacetime, contract, catalog dump.

Exit codes: 0 when no case fails, 1 when a case fails (or a contraction
diverges), 2 for configuration and index errors.
"""
import argparse
import json
import logging
import sys
from typing import List, Optional, Sequence

from pydantic import ValidationError

from .catalog import dump_catalog
from .deformations import IndexConstraintError, UnknownDeformationError, parse_indices
from .runner import (
    ConfigurationError,
    contraction_summary,
    emit_spacetime_tables,
    load_config,
    merge_overrides,
    render_contraction_text,
    render_json,
    render_tables_text,
    render_text,
    run,
)
from .schemas import RunConfig
from .series import DivergenceError
from .settings import get_settings

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_FAIL, EXIT_CONFIG = 0, 1, 2


def _indices_arg(text: str):
    if text in ("canonical", "all"):
        return text
    return parse_indices(text)


def _add_selection(parser: argparse.ArgumentParser, *, checks: bool = True):
    parser.add_argument("--config", help="JSON run configuration; flags override its values")
    parser.add_argument("--deformation", action="append", dest="deformations",
                        help="deformation id, repeatable (default: all eight)")
    parser.add_argument("--indices", help="'canonical', 'all', or k=..,l=..,i=..")
    parser.add_argument("--order", type=int, help="truncation order N")
    parser.add_argument("--format", choices=("json", "text"), help="output format")
    parser.add_argument("--out", help="write to this path instead of stdout")
    if checks:
        parser.add_argument("--checks", help="comma separated check names")
        parser.add_argument("--workers", type=int, help="worker processes")
        parser.add_argument("--timings", action="store_true", default=None, help="record wall time per case")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="twistdeform",
                                     description="Exact verification of twisted Poincare Hopf algebras.")
    commands = parser.add_subparsers(dest="command", required=True)

    verify = commands.add_parser("verify", help="run the selected checks and print a report")
    _add_selection(verify)

    derive = commands.add_parser("derive", help="derive structures from a twist")
    derived = derive.add_subparsers(dest="target", required=True)
    _add_selection(derived.add_parser("spacetime", help="star commutator tables"), checks=False)

    contract = commands.add_parser("contract", help="nonrelativistic contraction of one deformation")
    contract.add_argument("--deformation", required=True)
    contract.add_argument("--indices", help="k=..,l=..,i=.. (default canonical)")
    contract.add_argument("--order", type=int)
    contract.add_argument("--format", choices=("json", "text"), default="json", help="output format")
    contract.add_argument("--out")

    catalog = commands.add_parser("catalog", help="printed closed forms")
    entries = catalog.add_subparsers(dest="target", required=True)
    dump = entries.add_parser("dump", help="every catalog entry as JSON")
    dump.add_argument("--order", type=int)
    dump.add_argument("--out")
    return parser


def _config(args: argparse.Namespace) -> RunConfig:
    config = load_config(args.config) if args.config else RunConfig()
    checks = getattr(args, "checks", None)
    return merge_overrides(
        config,
        deformations=args.deformations,
        indices=_indices_arg(args.indices) if args.indices else None,
        order=args.order,
        format=args.format,
        checks=[c.strip() for c in checks.split(",") if c.strip()] if checks else None,
        workers=getattr(args, "workers", None),
        record_timings=getattr(args, "timings", None),
    )


def _emit(text: str, out: Optional[str]):
    if out:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _verify(args) -> int:
    config = _config(args)
    report = run(config)
    _emit(render_json(report) if config.format == "json" else render_text(report), args.out)
    return report.exit_code


def _spacetime(args) -> int:
    config = _config(args)
    tables = emit_spacetime_tables(config)
    if config.format == "json":
        text = json.dumps([table.model_dump() for table in tables], indent=2) + "\n"
    else:
        text = render_tables_text(tables)
    _emit(text, args.out)
    return EXIT_OK


def _contract(args) -> int:
    indices = parse_indices(args.indices) if args.indices else None
    summary = contraction_summary(args.deformation, indices, args.order)
    _emit(render_json(summary) if args.format == "json" else render_contraction_text(summary), args.out)
    return EXIT_OK


def _catalog(args) -> int:
    order = args.order or get_settings().order
    _emit(json.dumps(dump_catalog(order), indent=2) + "\n", args.out)
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        settings = get_settings()
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    logging.basicConfig(level=getattr(logging, settings.log_level, logging.WARNING),
                        format="%(levelname)s %(name)s: %(message)s")
    handlers = {"verify": _verify, "derive": _spacetime, "contract": _contract, "catalog": _catalog}
    try:
        return handlers[args.command](args)
    except (ConfigurationError, IndexConstraintError, UnknownDeformationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except ValidationError as exc:
        print(f"error: {exc.errors()[0].get('msg', 'invalid configuration')}", file=sys.stderr)
        return EXIT_CONFIG
    except DivergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


def entrypoint(argv: Optional[List[str]] = None):
    sys.exit(main(argv))
