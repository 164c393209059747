"""
Command-line surface.

Every command returns a CommandResult; `main` prints its report as JSON on standard
output and returns the exit code. Diagnostics go to standard error through the logger.

Exit codes: 0 success / property holds, 1 property violated or zero-probability collapse,
2 input error.
"""
import argparse
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable, Dict, Optional, Sequence

from config.config import Config
from desargues.engine import desargues_check
from desargues.generators import generate
from desargues.measurement import run_experiment_pair
from desargues.paper_example import PaperExampleResult, run_paper_example
from lattices.boolean_lattice import (
    GroundSet,
    antecedent,
    antecedent_negated,
    circuit_fig2_eval,
    circuit_fig3_eval,
    consequent,
    consequent_negated,
    derive,
)
from lattices.boolean_scan import exhaustive_scan
from utils.exceptions import (
    DegenerateConfigError,
    DesarguesError,
    InputError,
    InvalidConfigError,
    PreconditionError,
    UsageError,
    ZeroProbabilityOutcome,
)
from utils.logger import Logger, logger
from utils.serialization import (
    boolean_input_from_json,
    boolean_input_to_json,
    config_from_json,
    config_report_to_json,
    config_to_json,
    dumps,
    experiment_pair_to_json,
    load_json,
    projector_to_json,
    scan_report_to_json,
    state_from_json,
    subset_to_json,
    tolerances_to_json,
)

EXIT_OK = 0
EXIT_VIOLATED = 1
EXIT_INPUT = 2

INPUT_ERRORS = (InputError, PreconditionError, InvalidConfigError, DegenerateConfigError)


@dataclass
class CommandResult:
    exit_code: int
    report: Dict[str, Any]


def cmd_boolean_check(config_file: str) -> CommandResult:
    """Antecedent, consequent and both circuit outputs for one Boolean input."""
    data = boolean_input_from_json(load_json(config_file))
    derived = derive(data)
    ante, cons = antecedent(derived), consequent(derived)
    fig2, fig3 = circuit_fig2_eval(data), circuit_fig3_eval(data)
    report: Dict[str, Any] = {"input": boolean_input_to_json(data)}
    for n in range(3):
        report[f"C{n + 1}"] = subset_to_json(derived.c[n])
        report[f"frakB{n + 1}"] = subset_to_json(derived.frak_b[n])
    report.update({
        "antecedent": ante,
        "consequent": cons,
        "antecedent_negated": antecedent_negated(derived),
        "consequent_negated": consequent_negated(derived),
        "circuit_fig2": subset_to_json(fig2),
        "circuit_fig3": subset_to_json(fig3),
        "circuit_fig2_equals_C3": fig2 == derived.c[2],
        "circuit_fig3_equals_frakB3": fig3 == derived.frak_b[2],
        "implication_holds": (not ante) or cons,
    })
    if ante and not cons:
        logger.error("Boolean Desargues implication violated")
        return CommandResult(EXIT_VIOLATED, report)
    return CommandResult(EXIT_OK, report)


def cmd_boolean_scan(n: int, parallel: int = 1) -> CommandResult:
    """Exhaustive scan over a ground set labelled 1..n."""
    if n < 1:
        raise PreconditionError(f"Ground set size must be positive, got {n}")
    if parallel < 1:
        raise InputError(f"--parallel must be at least 1, got {parallel}")
    ground = GroundSet(n, tuple(str(i + 1) for i in range(n)))
    report = exhaustive_scan(ground, workers=parallel)
    code = EXIT_VIOLATED if report.violations else EXIT_OK
    return CommandResult(code, scan_report_to_json(report))


def cmd_desargues_check(config_file: str) -> CommandResult:
    config = config_from_json(load_json(config_file))
    report = desargues_check(config)
    document = {"d": config.ambient_dim, **config_report_to_json(report)}
    return CommandResult(EXIT_OK if report.equivalence_ok else EXIT_VIOLATED, document)


def cmd_generate(kind: str, seed: int, dim: int, out: Optional[str] = None) -> CommandResult:
    """
    Write a seeded configuration; without --out the configuration itself is the report.
    """
    if kind not in ("desarguesian", "generic"):
        raise InputError(f"Unknown --kind {kind!r}")
    if dim < 3:
        raise PreconditionError(f"--dim must be at least 3, got {dim}")
    config = generate(kind, seed, dim)
    document = config_to_json(config)
    if out is None:
        return CommandResult(EXIT_OK, document)
    try:
        Path(out).write_text(dumps(document, pretty=True) + "\n", encoding="utf-8")
    except OSError as e:
        logger.error(f"Cannot write {out}: {e}")
        raise InputError(f"Cannot write {out}: {e}") from e
    logger.info(f"Wrote {kind} configuration (seed={seed}, d={dim}) to {out}")
    return CommandResult(EXIT_OK, {"kind": kind, "seed": seed, "d": dim, "out": str(out)})


def cmd_experiment(config_file: str, state_file: str) -> CommandResult:
    config = config_from_json(load_json(config_file))
    state = state_from_json(load_json(state_file))
    pair = run_experiment_pair(config, state)
    return CommandResult(EXIT_OK, experiment_pair_to_json(pair))


def _paper_report(result: PaperExampleResult) -> Dict[str, Any]:
    return {
        "all_passed": result.all_passed,
        "checks": [
            {"name": c.name, "status": "PASS" if c.passed else "FAIL", "detail": c.detail}
            for c in result.checks
        ],
        "projectors": {label: projector_to_json(p) for label, p in result.projectors.items()},
        "experiment": experiment_pair_to_json(result.pair) if result.pair is not None else None,
    }


def cmd_paper_example(runner: Callable[[], PaperExampleResult] = run_paper_example) -> CommandResult:
    result = runner()
    return CommandResult(EXIT_OK if result.all_passed else EXIT_VIOLATED, _paper_report(result))


def _check_table(report: Dict[str, Any]) -> str:
    width = max(len(c["name"]) for c in report["checks"])
    lines = [f"{c['status']:<4}  {c['name']:<{width}}  {c['detail']}".rstrip() for c in report["checks"]]
    return "\n".join(lines)


class JsonArgumentParser(argparse.ArgumentParser):
    """Raises UsageError instead of exiting so usage mistakes get a JSON report too."""

    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=("json", "pretty"), default=argparse.SUPPRESS,
                        help=f"Report format (default: {Config.OUTPUT_FORMAT})")
    common.add_argument("--log-level", default=argparse.SUPPRESS,
                        help=f"Console log level (default: {Config.LOG_LEVEL})")

    parser = JsonArgumentParser(
        prog="desargues",
        description="Desargues property in Boolean algebra and in the lattice of subspaces of C^d.",
        parents=[common],
    )
    parser.add_argument("--tolerances", action="store_true", help="Print the tolerance table and exit")
    sub = parser.add_subparsers(dest="command")

    p = sub.add_parser("boolean-check", parents=[common], help="Check one Boolean input file")
    p.add_argument("config_file")

    p = sub.add_parser("boolean-scan", parents=[common], help="Exhaustive scan over n <= 4 elements")
    p.add_argument("n", type=int)
    p.add_argument("--parallel", type=int, default=Config.SCAN_WORKERS, help="Worker processes")

    p = sub.add_parser("desargues-check", parents=[common], help="Check a configuration file")
    p.add_argument("config_file")

    p = sub.add_parser("generate", parents=[common], help="Write a seeded configuration")
    p.add_argument("--kind", choices=("desarguesian", "generic"), required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--out", default=None)

    p = sub.add_parser("experiment", parents=[common], help="Run both measurement experiments")
    p.add_argument("config_file")
    p.add_argument("state_file")

    sub.add_parser("paper-example", parents=[common], help="Recompute the worked H(5) example")
    return parser


def _dispatch(args: argparse.Namespace) -> CommandResult:
    if args.command == "boolean-check":
        return cmd_boolean_check(args.config_file)
    if args.command == "boolean-scan":
        return cmd_boolean_scan(args.n, args.parallel)
    if args.command == "desargues-check":
        return cmd_desargues_check(args.config_file)
    if args.command == "generate":
        return cmd_generate(args.kind, args.seed, args.dim, args.out)
    if args.command == "experiment":
        return cmd_experiment(args.config_file, args.state_file)
    return cmd_paper_example()


def _error_result(code: int, error: Exception) -> CommandResult:
    report: Dict[str, Any] = {"error": type(error).__name__, "message": str(error)}
    if isinstance(error, ZeroProbabilityOutcome):
        report["stage"] = error.stage
    if isinstance(error, InvalidConfigError):
        report["invariant"] = error.invariant
    if isinstance(error, DegenerateConfigError):
        report["index"] = error.index
    return CommandResult(code, report)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv) if argv is not None else None)
    except UsageError as e:
        logger.error(str(e))
        print(dumps(_error_result(EXIT_INPUT, e).report))
        return EXIT_INPUT
    except SystemExit as e:
        return EXIT_INPUT if e.code else EXIT_OK

    pretty = getattr(args, "output", Config.OUTPUT_FORMAT) == "pretty"
    if hasattr(args, "log_level"):
        Logger.set_console_level(args.log_level)

    if args.tolerances:
        print(dumps(tolerances_to_json(), pretty=pretty))
        return EXIT_OK
    if args.command is None:
        parser.print_usage(sys.stderr)
        logger.error("No command given")
        print(dumps(_error_result(EXIT_INPUT, UsageError("No command given")).report, pretty=pretty))
        return EXIT_INPUT

    logger.info(f"Running {args.command}")
    try:
        result = _dispatch(args)
    except INPUT_ERRORS as e:
        logger.error(f"{args.command}: {e}")
        result = _error_result(EXIT_INPUT, e)
    except ZeroProbabilityOutcome as e:
        logger.error(f"{args.command}: {e}")
        result = _error_result(EXIT_VIOLATED, e)
    except DesarguesError as e:
        logger.error(f"{args.command}: internal failure: {e}")
        result = _error_result(EXIT_VIOLATED, e)

    if pretty and args.command == "paper-example" and "checks" in result.report:
        print(_check_table(result.report))
    print(dumps(result.report, pretty=pretty))
    return result.exit_code
