"""
Command line front end.

    python cli.py normalize a^4
    python cli.py nf-check t^2a^2t^-2a^-1
    python cli.py verify --suite all --radius 10

Exit codes: 0 success or accept, 1 reject or failed check, 2 usage error.
"""
import argparse
import json
import logging
import sys
from typing import Optional, Sequence

import cayley_oracle
import experiments
from automata import CounterAutomaton, accepts, counter_to_pda, dump_machine, load_machine, machine_to_json
from cayley_oracle import bfs_ball, dump_ball, sphere_sizes
from group_core import EMPTY_WORD_TEXT, eval_word, free_reduce, parse_word, show_word
from machine_zoo import build_nf_acceptor, zoo, zoo_entry
from normal_form import enumerate_nf, geodesic_length, is_normal_form, normalize
from verification import SUITES, run_suites

logger = logging.getLogger(__name__)


def _machine_word(text: str, alphabet: frozenset) -> str:
    """raw symbols when every character is a machine symbol, else the a/A/t/T grammar"""
    if text == EMPTY_WORD_TEXT:
        return ""
    if set(text) <= alphabet:
        return text
    return "".join(letter.value for letter in parse_word(text))


def _print_json(data):
    print(json.dumps(data, ensure_ascii=False, separators=(",", ":")))


def _verdict(accepted: bool) -> int:
    print("accept" if accepted else "reject")
    return 0 if accepted else 1


def _cmd_eval(args) -> int:
    _print_json(eval_word(parse_word(args.word)).to_json())
    return 0


def _cmd_reduce(args) -> int:
    print(show_word(free_reduce(parse_word(args.word))))
    return 0


def _cmd_normalize(args) -> int:
    print(show_word(normalize(parse_word(args.word))))
    return 0


def _cmd_nf_check(args) -> int:
    return _verdict(is_normal_form(parse_word(args.word)))


def _cmd_length(args) -> int:
    print(geodesic_length(eval_word(parse_word(args.word))))
    return 0


def _cmd_ball(args) -> int:
    ball = bfs_ball(args.radius)
    if args.out:
        dump_ball(ball, args.out)
    print(f"radius {ball.radius}: {len(ball.distances)} elements")
    return 0


def _cmd_spheres(args) -> int:
    for n, size in enumerate(sphere_sizes(args.radius)):
        print(f"{n} {size}")
    return 0


def _cmd_enumerate_nf(args) -> int:
    for word in enumerate_nf(args.max_len):
        print(show_word(word))
    return 0


def _cmd_accept(args) -> int:
    machine = load_machine(args.machine)
    return _verdict(accepts(machine, _machine_word(args.word, machine.alphabet)))


def _cmd_build_nf_acceptor(args) -> int:
    machine = build_nf_acceptor()
    dump_machine(machine, args.out)
    print(f"{len(machine.states)} states, {len(machine.transitions)} transitions")
    return 0


def _cmd_counter_to_pda(args) -> int:
    machine = load_machine(args.in_path)
    if not isinstance(machine, CounterAutomaton):
        raise ValueError(f"{args.in_path} holds a pushdown automaton, not a counter machine")
    pda = counter_to_pda(machine)
    dump_machine(pda, args.out)
    print(f"{len(pda.states)} states, {len(pda.transitions)} transitions")
    return 0


def _cmd_zoo(args) -> int:
    if args.list:
        for name, entry in zoo().items():
            print(f"{name}: {entry.description}")
        return 0
    entry = zoo_entry(args.emit)
    if args.out:
        dump_machine(entry.machine, args.out)
    else:
        print(json.dumps(machine_to_json(entry.machine), indent=2, ensure_ascii=False))
    return 0


def _cmd_thue_morse(args) -> int:
    print(experiments.thue_morse(args.i))
    return 0


def _cmd_t_encode(args) -> int:
    encoding = experiments.t_encode(parse_word(args.word))
    print("(" + ",".join(str(value) for value in encoding.values) + ")")
    return 0


def _print_report(data: dict, as_json: bool):
    if as_json:
        _print_json(data)
        return
    for key, value in data.items():
        print(f"{key}: {value}")


def _cmd_swap_demo(args) -> int:
    report = experiments.swap_experiment(args.i, args.s, args.window)
    _print_report(report.to_json(), args.json)
    return 0 if report.geodesic_base and not report.variants_geodesic else 1


def _cmd_palindrome_demo(args) -> int:
    report = experiments.palindrome_swap_demo(args.i)
    _print_report(report.to_json(), args.json)
    return 0 if report.accepted and not report.variants_accepted else 1


def _cmd_verify(args) -> int:
    results = run_suites(args.suite, args.radius)
    for result in results:
        if args.json:
            _print_json(result.to_json())
            continue
        status = "passed" if result.passed else "FAILED"
        print(f"{result.name}: {status} ({result.checked} checked)")
        for failure in result.failures:
            print(f"  {failure}")
    return 0 if all(result.passed for result in results) else 1


def _add_word(parser: argparse.ArgumentParser):
    parser.add_argument("word", help='word such as "ta^2t^-1a", ε for the empty word')


def build_argparser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cli.py",
        description="Normal forms, geodesics and counter automata for BS(1,2) = <a, t | t a t^-1 = a^2>.",
    )
    parser.add_argument("--verbose", action="store_true", help="log progress to stderr")
    parser.add_argument(
        "--threads", type=int, default=None,
        help="worker processes for ball building and swap checks (default BS12_WORKERS)",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    for name, handler, text in (
        ("eval", _cmd_eval, "group element of a word as JSON"),
        ("reduce", _cmd_reduce, "free reduction"),
        ("normalize", _cmd_normalize, "normal form of a word"),
        ("nf-check", _cmd_nf_check, "accept if the word is a normal form"),
        ("length", _cmd_length, "geodesic length of the word's element"),
        ("t-encode", _cmd_t_encode, "t-encoding of a word without a^-1"),
    ):
        command = commands.add_parser(name, help=text)
        _add_word(command)
        command.set_defaults(handler=handler)

    command = commands.add_parser("ball", help="breadth first ball of the Cayley graph")
    command.add_argument("--radius", type=int, required=True)
    command.add_argument("--out", help="write one line per element: num dexp texp distance")
    command.set_defaults(handler=_cmd_ball)

    command = commands.add_parser("spheres", help="sphere sizes 0..radius")
    command.add_argument("--radius", type=int, required=True)
    command.set_defaults(handler=_cmd_spheres)

    command = commands.add_parser("enumerate-nf", help="normal forms in shortlex order")
    command.add_argument("--max-len", type=int, required=True)
    command.set_defaults(handler=_cmd_enumerate_nf)

    command = commands.add_parser("accept", help="run a machine file on a word")
    command.add_argument("--machine", required=True)
    command.add_argument("--word", required=True)
    command.set_defaults(handler=_cmd_accept)

    command = commands.add_parser("build-nf-acceptor", help="write the normal form acceptor")
    command.add_argument("--out", required=True)
    command.set_defaults(handler=_cmd_build_nf_acceptor)

    command = commands.add_parser("counter-to-pda", help="compile a one-counter machine file")
    command.add_argument("--in", dest="in_path", required=True)
    command.add_argument("--out", required=True)
    command.set_defaults(handler=_cmd_counter_to_pda)

    command = commands.add_parser("zoo", help="named example machines")
    choice = command.add_mutually_exclusive_group(required=True)
    choice.add_argument("--list", action="store_true")
    choice.add_argument("--emit", metavar="NAME")
    command.add_argument("--out", help="machine file to write instead of stdout")
    command.set_defaults(handler=_cmd_zoo)

    command = commands.add_parser("thue-morse", help="f^i(a)")
    command.add_argument("--i", type=int, required=True)
    command.set_defaults(handler=_cmd_thue_morse)

    command = commands.add_parser("swap-demo", help="front swaps of a Thue-Morse mesa word")
    command.add_argument("--i", type=int, required=True)
    command.add_argument("--s", type=int, default=10)
    command.add_argument("--window", type=int, default=3, help="swaps within 2 * window + 1 values")
    command.add_argument("--json", action="store_true")
    command.set_defaults(handler=_cmd_swap_demo)

    command = commands.add_parser("palindrome-demo", help="front swaps of w w^R")
    command.add_argument("--i", type=int, required=True)
    command.add_argument("--json", action="store_true")
    command.set_defaults(handler=_cmd_palindrome_demo)

    command = commands.add_parser("verify", help="run cross-check suites")
    command.add_argument("--suite", default="all", choices=["all", *SUITES])
    command.add_argument("--radius", type=int, default=10)
    command.add_argument("--json", action="store_true")
    command.set_defaults(handler=_cmd_verify)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_argparser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_request:
        return int(exit_request.code or 0)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    if args.threads is not None:
        cayley_oracle.WORKERS = args.threads
        experiments.WORKERS = args.threads
    try:
        return args.handler(args)
    except ValueError as error:
        print(f"error: {error}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
