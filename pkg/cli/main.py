"""Command-line front door: run, verify, simulate and exact-dist"""

import argparse
import json
import logging
from logging.handlers import QueueListener
from multiprocessing import Queue
import sys
from typing import Any, Callable, Sequence

from cli.instance_file import InstanceFile, load_instance
from cli.output import render
from cli.runner import exact_dist, policies_of, run_instance
from cli.suites import SUITES, load_suite_config, run_suite
from common.errors import CapacityError, MechanismError
from common.settings import DEFAULT_LOG_DIR, DEFAULT_SUITE_CONFIG, OUTPUT_FORMATS, RunSettings
from common.transcript import MechanismTranscript
from common.verdict import Verdict
from logger import init_logger, worker_configurer
from sim.trials import TrialReport, exact_distribution, run_trials

EXIT_PASS: int = 0
EXIT_PROPERTY_FAILURE: int = 1
EXIT_USAGE: int = 2


def build_parser() -> argparse.ArgumentParser:
    """
    Builds the argument parser with one subcommand per action

    Returns
    -------
    parser : argparse.ArgumentParser
        The parser
    """
    common: argparse.ArgumentParser = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=OUTPUT_FORMATS,
        default="json",
        help="json for machines, table for humans (default=json)",
    )
    common.add_argument("--seed", type=int, help="master seed; never read from the environment")
    common.add_argument("--workers", type=int, default=1, help="worker processes (default=1)")
    common.add_argument("--quiet", action="store_true", help="only show warnings on the console")
    common.add_argument(
        "--log-dir", default=DEFAULT_LOG_DIR, help=f"log file directory (default={DEFAULT_LOG_DIR})"
    )

    parser: argparse.ArgumentParser = argparse.ArgumentParser(
        prog="derand", description="De-randomized mechanisms driven by modular arithmetic games"
    )
    commands = parser.add_subparsers(dest="command", required=True)

    run: argparse.ArgumentParser = commands.add_parser(
        "run", parents=[common], help="execute an instance file and print its transcript"
    )
    run.add_argument("file", help="JSON instance file")
    run.add_argument(
        "--strict-draw",
        action="store_true",
        help="realize probabilistic serial with the literal sigma/N draw",
    )

    verify: argparse.ArgumentParser = commands.add_parser(
        "verify", parents=[common], help="run a property suite"
    )
    verify.add_argument("suite", choices=[*SUITES, "all"])
    verify.add_argument("--n", type=int, help="size override for the suite")
    verify.add_argument("--samples", type=int, help="sample count override for the suite")
    verify.add_argument("--trials", type=int, help="Monte Carlo trials for the sim suite")
    verify.add_argument(
        "--config",
        default=DEFAULT_SUITE_CONFIG,
        help=f"YAML suite defaults (default={DEFAULT_SUITE_CONFIG})",
    )

    simulate: argparse.ArgumentParser = commands.add_parser(
        "simulate", parents=[common], help="Monte Carlo trials of an instance file"
    )
    simulate.add_argument("file", help="JSON instance file")
    simulate.add_argument("--trials", type=int, help="trial count (default: file, then 100000)")

    exact: argparse.ArgumentParser = commands.add_parser(
        "exact-dist", parents=[common], help="exact law of the embedded game and the outcome"
    )
    exact.add_argument("file", help="JSON instance file")
    return parser


def _settings(args: argparse.Namespace, instance: InstanceFile | None = None) -> RunSettings:
    settings: RunSettings = RunSettings(
        output_format=args.format,
        strict_draw=getattr(args, "strict_draw", False),
        log_dir=args.log_dir,
        suite_config_path=getattr(args, "config", DEFAULT_SUITE_CONFIG),
    )
    settings.workers = args.workers
    if args.seed is not None:
        settings.seed = args.seed
    elif instance is not None and instance.seed is not None:
        settings.seed = instance.seed
    trials: int | None = getattr(args, "trials", None)
    if trials is not None:
        settings.trials = trials
    elif instance is not None and instance.trials is not None:
        settings.trials = instance.trials
    return settings


def _run(args: argparse.Namespace, _: "Queue[str]") -> tuple[Any, int]:
    instance: InstanceFile = load_instance(args.file)
    settings: RunSettings = _settings(args, instance)
    transcript: MechanismTranscript = run_instance(instance, settings.strict_draw)
    document: dict[str, Any] = transcript.to_json()
    return {"outcome": document["outcome"], "transcript": document}, EXIT_PASS


def _verify(args: argparse.Namespace, _: "Queue[str]") -> tuple[Any, int]:
    settings: RunSettings = _settings(args)
    overrides: dict[str, int] = {
        key: value
        for key, value in (("n", args.n), ("samples", args.samples), ("trials", args.trials))
        if value is not None
    }
    verdicts: list[Verdict] = run_suite(
        args.suite,
        load_suite_config(settings.suite_config_path),
        settings.seed,
        overrides,
        settings.workers,
        progress=not args.quiet,
    )
    failed: list[str] = [verdict.name for verdict in verdicts if not verdict.passed]
    if failed:
        logging.warning("Failing properties: %s", ", ".join(failed))
    return verdicts, EXIT_PROPERTY_FAILURE if failed else EXIT_PASS


def _simulate(args: argparse.Namespace, log_queue: "Queue[str]") -> tuple[Any, int]:
    instance: InstanceFile = load_instance(args.file)
    settings: RunSettings = _settings(args, instance)
    reference: dict[str, Any] | None
    try:
        reference = exact_distribution(instance.mechanism_id, instance.payload, policies_of(instance))
    except CapacityError as ex:
        logging.warning("No exact reference: %s", ex)
        reference = None
    report: TrialReport = run_trials(
        instance.mechanism_id,
        instance.payload,
        policies_of(instance),
        settings.trials,
        settings.seed,
        settings.workers,
        reference,
        log_queue,
    )
    return report.to_json(), EXIT_PASS


def _exact(args: argparse.Namespace, _: "Queue[str]") -> tuple[Any, int]:
    return exact_dist(load_instance(args.file)), EXIT_PASS


COMMANDS: dict[str, Callable[[argparse.Namespace, "Queue[str]"], tuple[Any, int]]] = {
    "run": _run,
    "verify": _verify,
    "simulate": _simulate,
    "exact-dist": _exact,
}


def main(argv: Sequence[str] | None = None) -> int:
    """
    Parses the command line, runs the command and prints its result

    Parameters
    ----------
    argv : Sequence[str] | None
        Arguments without the program name; sys.argv when None

    Returns
    -------
    int
        0 on success, 1 if a property failed, 2 on a usage or parse error
    """
    parser: argparse.ArgumentParser = build_parser()
    try:
        args: argparse.Namespace = parser.parse_args(argv)
    except SystemExit as ex:
        return EXIT_PASS if ex.code == 0 else EXIT_USAGE

    log_queue: "Queue[str]" = Queue()
    listener: QueueListener = init_logger(
        log_queue, args.log_dir, logging.WARNING if args.quiet else logging.INFO
    )
    listener.start()
    worker_configurer(log_queue)
    try:
        document: Any
        code: int
        document, code = COMMANDS[args.command](args, log_queue)
    except (MechanismError, json.JSONDecodeError, OSError, ValueError) as ex:
        logging.error("%s failed: %s", args.command, ex)
        print(f"error: {ex}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        logging.getLogger().handlers.clear()
        listener.stop()

    print(render(document, args.format))
    return code
