import logging
import time
from argparse import ArgumentParser
from functools import partial
from pathlib import Path

from ..analysis import (
    admits_agreement,
    admits_strong_agreement,
    branching_violations,
    is_safe,
    is_strongly_safe,
)
from ..composition import compose
from ..io import load, serialize, to_dot, write_fixtures
from ..log.root_logger import get_logger
from ..models import AgreementProperty, Msca, SynthesisKind, TieBreak
from ..models._dataclasses import SerializedNamespace
from ..synthesis import ExplicitForbidden, synthesize
from ..utils.common import PROJECT, elapsed_ms
from ..utils.exceptions import MscaError
from .functions import CliFormatter, get_metadata, has_flag, state_list, store_true

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_EMPTY = 1
EXIT_INVALID = 2

CHECKS = {
    "safe": is_safe,
    "strongly_safe": is_strongly_safe,
    "admits_agreement": admits_agreement,
    "admits_strong_agreement": admits_strong_agreement,
}


def build_parser() -> ArgumentParser:
    # ============= Core Setup ================
    arg_parser = ArgumentParser(
        prog=PROJECT,
        description="Compose modal service contract automata and synthesize their controllers.",
        formatter_class=CliFormatter,
    )
    subparsers = arg_parser.add_subparsers(dest="command", help="All Command Options.")
    ap_true = store_true(arg_parser.add_argument)
    # =================================================

    # ============= `Metadata` Flags ================
    ap_true("--author", help=f"Print the author of '{PROJECT}'.")
    ap_true("--license", help=f"Print the license of '{PROJECT}'.")
    ap_true("--version", help=f"Print '{PROJECT}' version.")
    # =================================================

    # ============= Logging Flags ================
    ap_true("-v", "--verbose", help="Log engine iterations and timings at debug level.")
    arg_parser.add_argument(
        "--log-file",
        nargs="?",
        const="",
        default=None,
        metavar="PATH",
        help="Also log to a rotating file (the user log directory when no PATH is given).",
    )
    # =================================================

    compose_cmd = subparsers.add_parser(
        "compose",
        description="Compose automata given as JSON files, in order.",
        formatter_class=CliFormatter,
        help="Compose automata.",
    )
    compose_cmd.add_argument("inputs", nargs="+", type=Path, metavar="IN.json")
    compose_cmd.add_argument("-o", "--output", type=Path, help="Write the result here instead of stdout.")

    synth_cmd = subparsers.add_parser(
        "synth",
        description="Synthesize the most permissive controller, the orchestration or the choreography.",
        formatter_class=CliFormatter,
        help="Synthesize a controller.",
    )
    synth_cmd.add_argument("input", type=Path, metavar="IN.json")
    synth_cmd.add_argument("--kind", type=SynthesisKind, choices=list(SynthesisKind), required=True)
    synth_cmd.add_argument(
        "--property",
        type=AgreementProperty,
        choices=list(AgreementProperty),
        default=None,
        help="Property enforced by the most permissive controller (default: agreement).",
    )
    synth_cmd.add_argument(
        "--forbidden",
        type=state_list,
        default=None,
        metavar="q1;q2;...",
        help="States to avoid, labels separated by ',' and states by ';'. Excludes --property.",
    )
    synth_cmd.add_argument("--tiebreak", type=TieBreak, choices=list(TieBreak), default=TieBreak.LEXMIN)
    synth_cmd.add_argument("-o", "--output", type=Path, help="Write the result here instead of stdout.")

    check_cmd = subparsers.add_parser(
        "check",
        description="Decide a property of an automaton.",
        formatter_class=CliFormatter,
        help="Check agreement, safety or the branching condition.",
    )
    check_cmd.add_argument("input", type=Path, metavar="IN.json")
    checks = check_cmd.add_mutually_exclusive_group(required=True)
    cp_true = store_true(checks.add_argument)
    cp_true("--safe", help="Every accepted run is free of lone requests.")
    cp_true("--strongly-safe", help="Every accepted run is free of lone requests and offers.")
    cp_true("--admits-agreement", help="Some accepted run is free of lone requests.")
    cp_true("--admits-strong-agreement", help="Some accepted run is free of lone requests and offers.")
    cp_true("--branching", help="Print the matches breaking the branching condition.")

    info_cmd = subparsers.add_parser(
        "info",
        description="Print the size, flavor and alphabets of an automaton.",
        formatter_class=CliFormatter,
        help="Summarize an automaton.",
    )
    info_cmd.add_argument("input", type=Path, metavar="IN.json")

    export_cmd = subparsers.add_parser(
        "export",
        description="Export an automaton for visualization.",
        formatter_class=CliFormatter,
        help="Export to DOT.",
    )
    export_cmd.add_argument("input", type=Path, metavar="IN.json")
    store_true(export_cmd.add_argument)("--dot", help="Graphviz DOT (the only format).")
    export_cmd.add_argument("-o", "--output", type=Path, help="Write the result here instead of stdout.")

    fixtures_cmd = subparsers.add_parser(
        "fixtures",
        description="Write the bundled hotel-reservation principals as JSON.",
        formatter_class=CliFormatter,
        help="Write bundled fixtures.",
    )
    fixtures_cmd.add_argument("--dir", type=Path, required=True, dest="directory")

    return arg_parser


def _emit(text: str, output: Path | None):
    if output is None:
        print(text, end="" if text.endswith("\n") else "\n")
        return
    output.parent.mkdir(parents=True, exist_ok=True)
    output.write_text(text, encoding="utf-8")
    logger.info("wrote %s", output)


def _compose(args) -> int:
    operands = [load(path) for path in args.inputs]
    started = time.perf_counter()
    composed = compose(operands)
    logger.info(
        "composition: %d states, %d transitions in %s",
        len(composed.states),
        len(composed.transitions),
        elapsed_ms(started, time.perf_counter()),
    )
    _emit(serialize(composed), args.output)
    return EXIT_OK


def _synth(args, arg_parser: ArgumentParser) -> int:
    kind = args.kind
    if args.forbidden is not None and args.property is not None:
        arg_parser.error("--forbidden and --property are mutually exclusive")
    if kind is not SynthesisKind.MPC and (args.forbidden is not None or args.property is not None):
        arg_parser.error(f"--forbidden and --property only apply to --kind {SynthesisKind.MPC}")

    prop = ExplicitForbidden(args.forbidden) if args.forbidden is not None else args.property
    a = load(args.input)

    started = time.perf_counter()
    result = synthesize(
        a,
        kind,
        prop=prop or AgreementProperty.AGREEMENT,
        selector=args.tiebreak,
    )
    logger.info(
        "%s: %d iterations, %d bad states in %s",
        kind,
        result.iterations,
        len(result.bad_states),
        elapsed_ms(started, time.perf_counter()),
    )

    if result.is_empty:
        logger.warning("%s of %s is empty", kind, args.input)
        return EXIT_EMPTY
    _emit(serialize(result.controller), args.output)
    return EXIT_OK


def _check(args) -> int:
    a = load(args.input)
    if args.branching:
        for t in sorted(branching_violations(a)):
            print(t)
        return EXIT_OK
    for name, check in CHECKS.items():
        if has_flag(args, name):
            print(str(check(a)).lower())
    return EXIT_OK


def _info(args) -> int:
    a: Msca = load(args.input)
    for line in a.describe().lines():
        print(line)
    return EXIT_OK


def _export(args) -> int:
    a = load(args.input)
    _emit(to_dot(a, name=a.name or PROJECT), args.output)
    return EXIT_OK


def _fixtures(args) -> int:
    for path in write_fixtures(args.directory):
        logger.info("wrote %s", path)
    return EXIT_OK


def _dispatch(args, arg_parser: ArgumentParser) -> int:
    match args.command:
        case "compose":
            return _compose(args)
        case "synth":
            return _synth(args, arg_parser)
        case "check":
            return _check(args)
        case "info":
            return _info(args)
        case "export":
            return _export(args)
        case "fixtures":
            return _fixtures(args)
    arg_parser.print_help()
    return EXIT_INVALID


def run(argv: list[str] | None = None) -> int:
    """
    Parse `argv` and run one command; returns the exit code.

    0 on success, 1 when a synthesis result is empty, 2 on invalid input or
    arguments. Results go to stdout or `-o` files, diagnostics to stderr.
    """
    arg_parser = build_parser()
    try:
        parsed_args = arg_parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_INVALID

    args = SerializedNamespace(module="ArgsNamespace", **parsed_args.__dict__)
    get_logger(
        stream_only=args.log_file is None,
        verbose=bool(args.verbose),
        log_file=args.log_file or None,
    )

    metadata = get_metadata()
    arg_has_flag = partial(has_flag, args)
    shown = [v for k, v in metadata.items() if arg_has_flag(k)]
    if shown:
        for value in shown:
            print(value)
        return EXIT_OK

    try:
        return _dispatch(args, arg_parser)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_INVALID
    except MscaError as exc:
        logger.error("%s: %s", type(exc).__name__, exc)
        return EXIT_INVALID
    except OSError as exc:
        logger.error("%s", exc)
        return EXIT_INVALID
