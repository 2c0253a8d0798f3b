"""
Command-line interface for xx_entropy

    python -m interfaces.cli compute --h 0 -L 100
    python -m interfaces.cli scan --lengths 100,200,400 --fields 0,1 --format json
    python -m interfaces.cli validate --level full

Results go to stdout (or --out); logs go to stderr. Exit codes: 0 success,
1 domain error, 2 computational error, 3 validation failure.
"""
import argparse
import csv
import json
import sys
from pathlib import Path
from typing import List, Optional

from app_config import config, load_config, apply_config
from core.entropy import EntropyKind
from core.model import ModelParams
from interfaces.runner import ScanSpec, OUTPUT_KINDS, run_compute, run_scan, run_validate, render
from utils import (
    get_logger, set_global_level, EntropyError, ValidationFailure,
    parse_number_list, safe_json_dumps
)


logger = get_logger(__name__, config.log_file, config.log_level)


def _emit(text: str, out: Optional[str]):
    if out:
        path = Path(out).expanduser()
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8", newline="\n")
        logger.info(f"Wrote {path}")
    else:
        sys.stdout.write(text)


def _emit_error(error: Exception, fmt: str):
    """error and error_type on stdout, as one JSON object or a two-line CSV"""
    record = {"error": str(error), "error_type": type(error).__name__}
    if fmt == "json":
        sys.stdout.write(json.dumps(record) + "\n")
    else:
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(record.keys())
        writer.writerow(record.values())


def _add_output_flags(parser: argparse.ArgumentParser):
    parser.add_argument("--format", choices=("csv", "json"), default="csv")
    parser.add_argument("--out", default=None, help="Write results here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="xx_entropy",
                                     description="Block entanglement entropy of the XX chain")
    parser.add_argument("--config", default=None, help="YAML configuration file")
    parser.add_argument("--log-level", default=None)
    sub = parser.add_subparsers(dest="command", required=True)

    compute = sub.add_parser("compute", help="Single (L, h, alpha) point")
    compute.add_argument("--h", type=float, required=True, help="Transverse field, |h| <= 2")
    compute.add_argument("--length", "-L", type=int, required=True, help="Block length")
    compute.add_argument("--alpha", type=float, default=1.0)
    compute.add_argument("--kind", choices=("vn", "renyi", "tsallis"), default="vn")
    _add_output_flags(compute)

    scan = sub.add_parser("scan", help="Cartesian grid of points")
    scan.add_argument("--lengths", required=True, help="Comma separated block lengths")
    scan.add_argument("--fields", required=True, help="Comma separated fields in (-2, 2)")
    scan.add_argument("--alphas", default="1", help="Comma separated entropy indices")
    scan.add_argument("--kind", choices=("vn", "renyi", "tsallis"), default="vn")
    scan.add_argument("--outputs", default=",".join(sorted(OUTPUT_KINDS)),
                      help="Subset of exact,asymptotic,small_block,residual")
    scan.add_argument("--workers", type=int, default=None)
    _add_output_flags(scan)

    validate = sub.add_parser("validate", help="Run the invariant suites")
    validate.add_argument("--level", choices=("fast", "full"), default="fast")
    _add_output_flags(validate)
    return parser


def _command_compute(args) -> int:
    params = ModelParams(h=args.h, L=args.length)
    row = run_compute(params, args.alpha, EntropyKind.parse(args.kind))
    _emit(render([row], args.format), args.out)
    return 0


def _command_scan(args) -> int:
    spec = ScanSpec(
        lengths=parse_number_list(args.lengths, int),
        fields_h=parse_number_list(args.fields, float),
        alphas=parse_number_list(args.alphas, float),
        outputs=frozenset(parse_number_list(args.outputs, str)),
        kind=EntropyKind.parse(args.kind),
    )
    # buffered so a late failure never leaves half a file
    rows = list(run_scan(spec, workers=args.workers))
    _emit(render(rows, args.format), args.out)
    return 0


def _command_validate(args) -> int:
    report = run_validate(args.level)
    if args.format == "json":
        _emit(safe_json_dumps(report.to_dict()) + "\n", args.out)
    else:
        _emit(report.render() + "\n", args.out)
    if not report.passed:
        raise ValidationFailure(f"{len(report.failures)} check(s) failed: "
                                f"{[r.name for r in report.failures]}")
    return 0


_COMMANDS = {
    "compute": _command_compute,
    "scan": _command_scan,
    "validate": _command_validate,
}


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)

    try:
        if args.config:
            apply_config(load_config(args.config))
        if args.log_level:
            config.log_level = args.log_level
        set_global_level(config.log_level)

        return _COMMANDS[args.command](args)
    except EntropyError as e:
        logger.error(f"{type(e).__name__}: {e}")
        # a failed validation has already written its report
        if not isinstance(e, ValidationFailure):
            _emit_error(e, getattr(args, "format", "csv"))
        return e.exit_code
    except ValueError as e:
        # malformed number lists
        logger.error(f"Invalid argument: {e}")
        _emit_error(e, getattr(args, "format", "csv"))
        return 1


if __name__ == "__main__":
    sys.exit(main())
