"""
Command-line front end.

    arrangement-homotopy analyze corpus/two_share_line.json --max-degree 8
    arrangement-homotopy oracle free-lie --degrees 2,4 --max 10
    arrangement-homotopy selftest --max-degree 6
    arrangement-homotopy diagram corpus/case_b_three.json --output docs/assets

Exit codes: 0 success, 1 internal invariant breach or unexpected failure,
2 input or hypothesis violation.
"""
import argparse
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional

from .arrangement_file import load_arrangement
from .config import Settings
from .documentation_generator import DocumentationGenerator
from .errors import ArrangementError, HypothesisError, InvariantError, NonGeometricLatticeError
from .free_lie import free_lie_ranks
from .pipeline import ArrangementAnalyzer
from .report import build_report, to_json, to_text
from .report_exporter import ReportExporter
from .selftest import run_selftest

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_INPUT = 2
LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def _parse_degrees(text: str) -> List[int]:
    try:
        degrees = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"Degrees must be comma-separated integers, got '{text}'")
    if not degrees:
        raise argparse.ArgumentTypeError("At least one degree is required")
    return degrees


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="arrangement-homotopy",
        description="Rational homotopy of complements of complex subspace arrangements",
    )
    parser.add_argument("--log-level", default=None,
                        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
                        help="logging level (default: ARRANGEMENT_LOG_LEVEL or INFO)")
    commands = parser.add_subparsers(dest="command", required=True)

    analyze = commands.add_parser("analyze", help="classify an arrangement and report the evidence")
    analyze.add_argument("file", type=Path)
    analyze.add_argument("--max-degree", type=int, default=None, help="degree bound for homotopy ranks")
    analyze.add_argument("--format", choices=["json", "text"], default="json")
    analyze.add_argument("--export", type=Path, default=None, help="also write the report as .xlsx or .pdf")

    oracle = commands.add_parser("oracle", help="reference tables")
    oracle_kinds = oracle.add_subparsers(dest="kind", required=True)
    free_lie = oracle_kinds.add_parser("free-lie", help="ranks of a free graded Lie algebra")
    free_lie.add_argument("--degrees", type=_parse_degrees, required=True, help="generator degrees, e.g. 2,4")
    free_lie.add_argument("--max", type=int, required=True, dest="max_degree")
    free_lie.add_argument("--format", choices=["json", "text"], default="text")

    selftest = commands.add_parser("selftest", help="run the identity checks over the corpus")
    selftest.add_argument("--max-degree", type=int, default=None)
    selftest.add_argument("--corpus", type=Path, default=None)

    diagram = commands.add_parser("diagram", help="write the Hasse diagram of the intersection lattice")
    diagram.add_argument("file", type=Path)
    diagram.add_argument("--output", type=Path, default=Path("docs/assets"))
    return parser


def cmd_analyze(args, settings: Settings) -> int:
    arrangement = load_arrangement(args.file)
    result = ArrangementAnalyzer(settings).analyze(arrangement, args.max_degree)
    report = build_report(result)
    sys.stdout.write(to_json(report) if args.format == "json" else to_text(report))
    if args.export is not None:
        suffix = args.export.suffix.lower()
        if suffix == ".xlsx":
            data = ReportExporter.to_excel(report)
        elif suffix == ".pdf":
            data = ReportExporter.to_pdf(report)
        else:
            raise ValueError(f"Unsupported export format '{suffix}', use .xlsx or .pdf")
        args.export.write_bytes(data.getvalue())
        logger.info(f"Exported report to {args.export}")
    return EXIT_OK


def cmd_oracle(args, settings: Settings) -> int:
    ranks = free_lie_ranks(args.degrees, args.max_degree)
    if args.format == "json":
        payload = {"degrees": list(ranks.degrees), "max_degree": ranks.max_degree,
                   "ranks": {str(k): v for k, v in ranks.table()}}
        sys.stdout.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")
    else:
        for k, v in ranks.table():
            sys.stdout.write(f"{k}\t{v}\n")
    return EXIT_OK


def cmd_selftest(args, settings: Settings) -> int:
    max_degree = args.max_degree if args.max_degree is not None else settings.selftest_degree
    if max_degree < 2:
        raise ValueError(f"Degree bound must be at least 2, got {max_degree}")
    summary = run_selftest(args.corpus or settings.corpus_dir, max_degree, settings=settings)
    sys.stdout.write(summary.to_text())
    return EXIT_OK if summary.passed else EXIT_INTERNAL


def cmd_diagram(args, settings: Settings) -> int:
    for path in DocumentationGenerator(args.output).diagram_for_file(args.file):
        sys.stdout.write(f"{path}\n")
    return EXIT_OK


COMMANDS = {"analyze": cmd_analyze, "oracle": cmd_oracle, "selftest": cmd_selftest, "diagram": cmd_diagram}


def main(argv: Optional[List[str]] = None) -> int:
    """Parse arguments, run one command and map failures to exit codes."""
    args = build_parser().parse_args(argv)
    try:
        settings = Settings.from_env()
    except HypothesisError as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_INPUT
    logging.basicConfig(level=args.log_level or settings.log_level, format=LOG_FORMAT, stream=sys.stderr)

    try:
        return COMMANDS[args.command](args, settings)
    except NonGeometricLatticeError as e:
        pair = f" (pair {', '.join(e.pair)})" if e.pair else ""
        logger.error(f"{e}{pair}")
        return EXIT_INPUT
    except InvariantError as e:
        logger.error(f"Internal invariant breach: {e}")
        return EXIT_INTERNAL
    except (HypothesisError, ValueError) as e:
        logger.error(str(e))
        return EXIT_INPUT
    except ArrangementError as e:
        logger.error(str(e))
        return EXIT_INTERNAL
    except Exception as e:
        logger.exception(f"Unexpected failure: {e}")
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
