"""Command-line entry point: tempograph run | validate | stats | table | convert-timeml"""
import argparse
import json
import logging
import sys

from pydantic import ValidationError as PydanticValidationError

from app.application.dtos.request.run_config import FusionMode, RunConfig
from app.application.dtos.response.run_report import EXIT_FATAL, EXIT_OK, EXIT_SKIPPED
from app.core.container import Container
from app.core.exceptions import ApplicationError, DomainException, InfrastructureError
from app.core.settings import settings
from app.domain.entities.temporal_graph import GraphVariant
from app.domain.services.interval_algebra import GENERATION_WIDTH, SOUNDNESS_WIDTH
from app.infrastructure.observability import configure_logging


logger = logging.getLogger("tempograph.cli")


def _print_json(payload: dict) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True))


def _add_run_parser(sub) -> None:
    p = sub.add_parser("run", help="construct graphs and fuse them for every example")
    p.add_argument("--dataset", required=True, help="dataset JSONL file")
    p.add_argument("--annotations", default=None, help="directory of tg-annot/1 JSON files")
    p.add_argument("--variant", choices=[v.value for v in GraphVariant], default=settings.variant)
    p.add_argument("--mode", choices=[m.value for m in FusionMode], default=settings.mode)
    p.add_argument("--merge3", action="store_true", default=settings.merge3,
                   help="collapse relations to before/after/overlap")
    p.add_argument("--padded", action="store_true", help="space-padded delimiters")
    p.add_argument("--workers", type=int, default=settings.workers)
    p.add_argument("--budget", type=int, default=settings.context_char_budget,
                   help="truncate contexts to this many characters")
    p.add_argument("--table", default=settings.composition_table_path, help="composition table file")
    p.add_argument("--shots", default=None, help="dataset JSONL with prompt demonstrations (prompt mode)")
    p.add_argument("--unfused", action="store_true", help="prompts without graph markers")
    p.add_argument("--out", required=True, help="output directory")


def _run(args: argparse.Namespace) -> int:
    config = RunConfig(
        dataset_path=args.dataset,
        out_dir=args.out,
        annotations_dir=args.annotations,
        variant=GraphVariant(args.variant),
        mode=FusionMode(args.mode),
        merge3=args.merge3,
        padded=args.padded,
        workers=args.workers,
        context_char_budget=args.budget,
        composition_table_path=args.table,
        shots_path=args.shots,
        fused_prompt=not args.unfused,
    )
    report = Container.get_run_pipeline_use_case(config).execute(config)
    print(
        f"{report.processed} processed, {report.passthrough} passthrough, "
        f"{report.skipped} skipped of {report.total}; wrote {args.out}"
    )
    return report.exit_code


def _validate(args: argparse.Namespace) -> int:
    report = Container.get_validate_annotations_use_case(args.annotations).execute()
    for finding in report.findings:
        span = f" [{finding.char_start}, {finding.char_end})" if finding.char_start is not None else ""
        print(f"{finding.example_id}: {finding.kind}{span}: {finding.message}")
    print(f"{report.documents} documents, {len(report.findings)} findings")
    return EXIT_OK if report.is_valid else EXIT_SKIPPED


def _stats(args: argparse.Namespace) -> int:
    report = Container.get_compute_stats_use_case(args.out).execute()
    _print_json(report.model_dump())
    return EXIT_SKIPPED if report.matches_report is False else EXIT_OK


def _table(args: argparse.Namespace) -> int:
    report = Container.get_regenerate_table_use_case(args.table).execute(
        width=args.width,
        soundness_width=args.soundness_width,
        write_path=args.write,
    )
    if not args.write:
        sys.stdout.write(report.table_text)
    for line in report.reference_differences:
        print(f"published rule kept: {line}", file=sys.stderr)
    if report.counterexamples:
        return EXIT_FATAL
    return EXIT_OK if report.matches_packaged else EXIT_SKIPPED


def _convert(args: argparse.Namespace) -> int:
    report = Container.get_convert_timeml_use_case(args.out).execute(args.inputs)
    _print_json(report.model_dump())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tempograph", description="Temporal graph construction and fusion.")
    sub = parser.add_subparsers(dest="command", required=True)

    _add_run_parser(sub)

    p = sub.add_parser("validate", help="check stored annotations without running the pipeline")
    p.add_argument("--annotations", required=True)

    p = sub.add_parser("stats", help="recount graph statistics of a run")
    p.add_argument("--out", required=True, help="output directory of a run")

    p = sub.add_parser("table", help="regenerate the composition table")
    p.add_argument("--width", type=int, default=GENERATION_WIDTH)
    p.add_argument("--soundness-width", type=int, default=SOUNDNESS_WIDTH)
    p.add_argument("--write", default=None, help="write the table here instead of stdout")
    p.add_argument("--table", default=None, help="table to compare against (default: packaged)")

    p = sub.add_parser("convert-timeml", help="convert TimeML files to tg-annot/1 annotations")
    p.add_argument("inputs", nargs="+", help="TimeML files or directories")
    p.add_argument("--out", required=True, help="annotation directory")
    return parser


COMMANDS = {
    "run": _run,
    "validate": _validate,
    "stats": _stats,
    "table": _table,
    "convert-timeml": _convert,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging(settings.log)
    try:
        return COMMANDS[args.command](args)
    except PydanticValidationError as e:
        print(f"ERROR: invalid options: {e}", file=sys.stderr)
        return EXIT_FATAL
    except (InfrastructureError, DomainException, ApplicationError) as e:
        logger.debug("Command failed", exc_info=True)
        print(f"ERROR: {e}", file=sys.stderr)
        return EXIT_FATAL


if __name__ == "__main__":
    raise SystemExit(main())
