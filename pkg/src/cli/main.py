"""Command-line entry point."""

import argparse
import logging
import sys
from typing import List, Optional

from ..application.commands import DEMOS, VERIFY_SUITES
from ..infrastructure.config import Config, get_config, set_config
from .dependencies import VERBS
from .error_handler import EXIT_ERROR, EXIT_OK, run_guarded
from .formatting import format_report
from .schemas import GlobalOptions

logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser with one subcommand per verb."""
    parser = argparse.ArgumentParser(
        prog="steinberg",
        description="Steinberg algebras of graph groupoids and Leavitt path algebras over B",
    )
    parser.add_argument(
        "--max-carrier", type=int, help="carrier-size bound for exhaustive searches"
    )
    parser.add_argument("--max-vertices", type=int, help="vertex bound for H&S enumeration")
    parser.add_argument("--seed", type=int, help="seed for randomized property runs")
    parser.add_argument(
        "--format", dest="output_format", choices=("text", "machine"), default="text"
    )
    verbs = parser.add_subparsers(dest="verb", required=True)

    analyze = verbs.add_parser("analyze", help="structure report and simpleness verdicts")
    analyze.add_argument("graph")

    closure = verbs.add_parser("closure", help="hereditary saturated closure of vertices")
    closure.add_argument("graph")
    closure.add_argument("vertices", nargs="*")

    cycles = verbs.add_parser("cycles", help="cycles and their exits")
    cycles.add_argument("graph")

    evaluate = verbs.add_parser("eval", help="substitute a cycle into a Laurent polynomial")
    evaluate.add_argument("graph")
    evaluate.add_argument("polynomial")
    evaluate.add_argument("cycle")

    eq = verbs.add_parser("eq", help="decide equality of two elements")
    eq.add_argument("graph")
    eq.add_argument("left")
    eq.add_argument("right")

    image = verbs.add_parser("image", help="canonical image of an element in A_B(G_E)")
    image.add_argument("graph")
    image.add_argument("expression")

    congruences = verbs.add_parser("congruences", help="congruences of a finite algebra")
    congruences.add_argument("algebra")

    verify = verbs.add_parser("verify", help="run verification suites")
    verify.add_argument("suite", nargs="?", default="all", help=", ".join(VERIFY_SUITES + ("all",)))

    demo = verbs.add_parser("demo", help="run a worked example")
    demo.add_argument("name", help=", ".join(DEMOS))
    return parser


def configure(options: GlobalOptions) -> Config:
    """Apply flag overrides to the settings and set up logging."""
    config = get_config()
    overrides = options.config_overrides()
    if overrides:
        config = config.model_copy(update=overrides)
        set_config(config)
    logging.basicConfig(
        level=config.LOG_LEVEL,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
    )
    return config


def main(argv: Optional[List[str]] = None) -> int:
    """Parse arguments, run one verb and print its report.

    Returns:
        int: 0 on success, 1 on usage or parse errors (and failed
        verification suites), 2 on out-of-scope queries.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_OK
    values = vars(args)

    def run() -> int:
        options = GlobalOptions(
            max_carrier=values.pop("max_carrier"),
            max_vertices=values.pop("max_vertices"),
            seed=values.pop("seed"),
            output_format=values.pop("output_format"),
        )
        config = configure(options)
        verb = values.pop("verb")
        schema, handler = VERBS[verb]
        command = schema(**values).to_command()
        logger.info(f"running {verb}")
        report = handler(config, command)
        sys.stdout.write(format_report(report, options.output_format))
        return report.exit_code

    return run_guarded(run)


if __name__ == "__main__":
    sys.exit(main())
