"""Command-line entry point of the verification toolkit.

Examples:
    calderon-verify verify causality --scenario hyperboloid --a 2 --rays 1000 --seed 42
    calderon-verify compare dn --scenario hyperboloid --levels 3
    calderon-verify compare sts --levels 3
    calderon-verify witness --scenario hyperboloid --Rc 1.0
    calderon-verify figures --output output
    calderon-verify run --config run.json --suite all
    calderon-verify schema

Exit codes: 0 when every executed suite passes, 1 on a failed verdict, 2 on an
invalid configuration, a toolkit error or missing input files.

Environment:
    CALDERON_OUTPUT_DIR  overrides the output directory of the config file
    CALDERON_LOG_LEVEL   log level (default WARNING)
"""

import argparse
import json
import logging
import os
import sys
from collections.abc import Sequence
from pathlib import Path
from typing import Any

from dotenv import load_dotenv
from pydantic import ValidationError

from src.errors import CalderonError
from src.models.run_config import RunConfig
from src.repositories.report_repository import ReportRepository
from src.services.figures import emit_figures
from src.services.runner import run

logger = logging.getLogger("calderon_verify")

EXIT_OK = 0
EXIT_VERDICT = 1
EXIT_CONFIG = 2


def _common_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", type=Path, help="JSON run configuration")
    parser.add_argument("--scenario", choices=["hyperboloid", "kruskal", "flrw"])
    parser.add_argument("--a", type=float, help="hyperboloid width parameter")
    parser.add_argument("--n", type=int, help="spatial dimension of the hyperboloid scenario")
    parser.add_argument("--rays", type=int, help="rays per reachability scan")
    parser.add_argument("--seed", type=int, help="seed of every random draw")
    parser.add_argument("--workers", type=int, help="threads for ray integration")
    parser.add_argument("--levels", type=int, help="grid refinement levels")
    parser.add_argument("--nx", type=int, help="spatial nodes of the coarsest strip grid")
    parser.add_argument("--Rc", dest="R_c", type=float, help="de Sitter patch curvature radius")
    parser.add_argument("--output", help="output directory")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="calderon-verify",
        description="Numerical verification of Lorentzian Calderon counterexamples.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    verify = commands.add_parser("verify", help="causal confinement checks")
    verify.add_argument("suite", choices=["causality"])
    _common_options(verify)

    compare = commands.add_parser("compare", help="boundary-data comparison of g and g'")
    compare.add_argument("mode", choices=["dn", "sts"])
    _common_options(compare)

    witness = commands.add_parser("witness", help="curvature non-isometry witness")
    _common_options(witness)

    figures = commands.add_parser("figures", help="CSV tables for plotting from a saved report")
    _common_options(figures)

    full = commands.add_parser("run", help="run the suites of a configuration")
    full.add_argument(
        "--suite",
        action="append",
        choices=["causality", "waves", "witness", "figures", "all"],
        help="suite to run (repeatable)",
    )
    _common_options(full)

    commands.add_parser("schema", help="print the JSON schema of the run configuration")
    return parser


def _set(data: dict[str, Any], section: str | None, key: str, value: Any) -> None:
    if value is None:
        return
    if section is None:
        data[key] = value
    else:
        data.setdefault(section, {})[key] = value


def resolve_config(args: argparse.Namespace) -> RunConfig:
    """Config file, then CALDERON_OUTPUT_DIR, then command-line flags.

    Raises:
        ValidationError: the merged configuration is invalid
        FileNotFoundError: the config file does not exist
    """
    data: dict[str, Any] = {}
    if args.config is not None:
        data = json.loads(args.config.read_text(encoding="utf-8"))
    _set(data, None, "output_dir", os.getenv("CALDERON_OUTPUT_DIR"))
    _set(data, None, "scenario", args.scenario)
    _set(data, "geometry", "a", args.a)
    _set(data, "geometry", "n", args.n)
    _set(data, "rays", "n_points", args.rays)
    _set(data, "rays", "seed", args.seed)
    _set(data, "rays", "workers", args.workers)
    _set(data, "grid", "levels", args.levels)
    _set(data, "grid", "nx", args.nx)
    _set(data, "bump", "R_c", args.R_c)
    _set(data, None, "output_dir", args.output)

    suites = {
        "verify": ["causality"],
        "compare": ["waves"],
        "witness": ["witness"],
        "figures": ["figures"],
    }.get(args.command, getattr(args, "suite", None))
    _set(data, None, "suites", suites)
    return RunConfig.model_validate(data)


def _summary(config: RunConfig, passed: bool, files: Sequence[str]) -> str:
    return json.dumps(
        {
            "scenario": config.scenario,
            "suites": config.selected_suites,
            "passed": passed,
            "files": list(files),
        }
    )


def _execute(args: argparse.Namespace) -> int:
    if args.command == "schema":
        print(json.dumps(RunConfig.model_json_schema(), indent=2))
        return EXIT_OK

    config = resolve_config(args)
    repository = ReportRepository(config.output_dir)
    if args.command == "figures":
        files = emit_figures(config, repository)
        print(_summary(config, True, files))
        return EXIT_OK

    modes = [args.mode] if args.command == "compare" else ["dn", "sts"]
    report = run(config, repository, wave_modes=modes)
    print(_summary(config, report.passed, [str(repository.report_path), *report.figures]))
    return EXIT_OK if report.passed else EXIT_VERDICT


def main(argv: Sequence[str] | None = None) -> int:
    """Parse arguments, run the command and map the outcome onto an exit code."""
    load_dotenv()
    logging.basicConfig(
        level=os.getenv("CALDERON_LOG_LEVEL", "WARNING").upper(),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    args = build_parser().parse_args(argv)
    try:
        return _execute(args)
    except ValidationError as exc:
        print(f"invalid configuration:\n{exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (CalderonError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
