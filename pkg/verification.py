"""
Exhaustive cross-checks run by ``cli.py verify``: each suite compares two
independent computations of the same thing over every case up to a bound.
"""
import logging
import os
import random
from dataclasses import dataclass, field
from itertools import product
from typing import Callable

from automata import (
    CounterAutomaton,
    ConcatOrder,
    concat,
    counter_to_pda,
    intersect_regular,
    language_upto,
    machine_language,
    pda_language_upto,
    random_machine,
    union,
)
from cayley_oracle import bfs_ball, nf_sphere_sizes
from experiments import has_square, swap_experiment, t_decode, t_encode, thue_morse
from group_core import LETTER_ORDER, Letter, Word, eval_word, format_word, parse_word, word_symbols
from machine_zoo import GROUP_SYMBOLS, build_nf_acceptor, zoo
from normal_form import enumerate_nf, is_normal_form
from rewriting import (
    RunDirection,
    RunForm,
    apply_no11,
    classify_type,
    decode_run,
    encode_run,
    format_entries,
    levels,
    push_one_run,
)

logger = logging.getLogger(__name__)

NF_VERIFY_LENGTH = int(os.environ.get("BS12_NF_VERIFY_LENGTH", "8"))
ZOO_VERIFY_LENGTH = int(os.environ.get("BS12_ZOO_VERIFY_LENGTH", "12"))
REWRITE_VERIFY_LENGTH = int(os.environ.get("BS12_REWRITE_VERIFY_LENGTH", "10"))
CLOSURE_TRIALS = 100
CLOSURE_LENGTH = 6
DEFAULT_RADIUS = 10

# kept short: a failing suite reports its first mismatches only
_MAX_FAILURES = 20


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, message: str):
        if len(self.failures) < _MAX_FAILURES:
            self.failures.append(message)

    def to_json(self) -> dict:
        return {
            "suite": self.name,
            "passed": self.passed,
            "checked": self.checked,
            "failures": list(self.failures),
        }


def all_words(max_len: int, letters=LETTER_ORDER):
    for length in range(max_len + 1):
        yield from product(letters, repeat=length)


def all_strings(alphabet, max_len: int):
    for length in range(max_len + 1):
        for symbols in product(sorted(alphabet), repeat=length):
            yield "".join(symbols)


def relator_suite(radius: int = DEFAULT_RADIUS) -> SuiteResult:
    result = SuiteResult("relator")
    relator, square = parse_word("tat^-1"), parse_word("a^2")
    short = list(all_words(4))
    for u in short:
        for v in short:
            result.checked += 1
            if eval_word(u + relator + v) != eval_word(u + square + v):
                result.fail(f"u={format_word(u)} v={format_word(v)}")
    return result


def nf_trichotomy_suite(radius: int = DEFAULT_RADIUS) -> SuiteResult:
    """normal forms up to length radius biject onto the ball, length = distance"""
    result = SuiteResult("nf-trichotomy")
    ball = bfs_ball(radius)
    seen: dict = {}
    for word in enumerate_nf(radius):
        result.checked += 1
        g = eval_word(word)
        if g in seen:
            result.fail(f"{format_word(word)} and {format_word(seen[g])} both evaluate to {g}")
        seen[g] = word
        distance = ball.distances.get(g)
        if distance != len(word):
            result.fail(f"{format_word(word)} has length {len(word)}, distance {distance}")
    for g in ball.distances:
        if g not in seen:
            result.fail(f"no normal form of length <= {radius} for {g}")
    return result


def nf_acceptor_suite(radius: int = DEFAULT_RADIUS, max_len: int = None) -> SuiteResult:
    result = SuiteResult("nf-acceptor")
    max_len = NF_VERIFY_LENGTH if max_len is None else max_len
    accepted = language_upto(build_nf_acceptor(), GROUP_SYMBOLS, max_len)
    for word in all_words(max_len):
        result.checked += 1
        if (word_symbols(word) in accepted) != is_normal_form(word):
            result.fail(f"acceptor and normal form disagree on {format_word(word) or 'ε'}")
    return result


def _compare_languages(result: SuiteResult, label: str, expected: frozenset, actual: frozenset, total: int):
    result.checked += total
    for word in sorted(expected ^ actual)[:_MAX_FAILURES]:
        result.fail(f"{label}: {word or 'ε'} in {'source' if word in expected else 'result'} only")


def counter_to_pda_suite(radius: int = DEFAULT_RADIUS, max_len: int = None, zoo_len: int = 10) -> SuiteResult:
    result = SuiteResult("counter-to-pda")
    max_len = NF_VERIFY_LENGTH if max_len is None else max_len
    cases = [
        (name, entry.machine, entry.alphabet, zoo_len)
        for name, entry in zoo().items()
        if isinstance(entry.machine, CounterAutomaton) and entry.machine.k == 1
    ]
    cases.append(("nf_acceptor", build_nf_acceptor(), GROUP_SYMBOLS, max_len))
    for label, machine, alphabet, length in cases:
        compiled = counter_to_pda(machine)
        _compare_languages(
            result, label,
            language_upto(machine, alphabet, length),
            pda_language_upto(compiled, alphabet, length),
            sum(len(alphabet) ** n for n in range(length + 1)),
        )
    return result


def zoo_suite(radius: int = DEFAULT_RADIUS, max_len: int = None) -> SuiteResult:
    result = SuiteResult("zoo")
    max_len = ZOO_VERIFY_LENGTH if max_len is None else max_len
    for name, entry in zoo().items():
        accepted = machine_language(entry.machine, entry.alphabet, max_len)
        for word in all_strings(entry.alphabet, max_len):
            result.checked += 1
            if (word in accepted) != entry.predicate(word):
                result.fail(f"{name} disagrees with its predicate on {word or 'ε'}")
    return result


def closure_suite(radius: int = DEFAULT_RADIUS, trials: int = CLOSURE_TRIALS, seed: int = 0) -> SuiteResult:
    """union, regular intersection and both concatenations against set semantics"""
    result = SuiteResult("closure")
    rng = random.Random(seed)
    alphabet = ("a", "b")
    n = CLOSURE_LENGTH
    total = sum(len(alphabet) ** length for length in range(n + 1))
    for trial in range(trials):
        m1 = random_machine(rng, alphabet, k=1)
        m2 = random_machine(rng, alphabet, k=1)
        regular = random_machine(rng, alphabet, k=0)
        first, second = language_upto(m1, alphabet, n), language_upto(m2, alphabet, n)
        finite = language_upto(regular, alphabet, n)
        _compare_languages(
            result, f"union #{trial}", first | second, language_upto(union(m1, m2), alphabet, n), total
        )
        _compare_languages(
            result, f"intersect #{trial}", first & finite,
            language_upto(intersect_regular(m1, regular), alphabet, n), total,
        )
        for order, pairs in (
            (ConcatOrder.CL, ((x, y) for x in first for y in finite)),
            (ConcatOrder.LC, ((y, x) for x in first for y in finite)),
        ):
            expected = frozenset(left + right for left, right in pairs if len(left + right) <= n)
            _compare_languages(
                result, f"concat {order.value} #{trial}", expected,
                language_upto(concat(m1, regular, order), alphabet, n), total,
            )
    return result


def reduced_words(max_len: int):
    """freely reduced words up to max_len, shortest first"""
    yield ()
    frontier: list[Word] = [()]
    for _ in range(max_len):
        frontier = [
            word + (letter,)
            for word in frontier
            for letter in LETTER_ORDER
            if not word or word[-1] is not letter.inverse
        ]
        yield from frontier


def _is_one_run(word: Word) -> bool:
    try:
        return decode_run(encode_run(word)) == word
    except ValueError:
        return False


def _mixes_signs(word: Word) -> bool:
    signs: dict[int, set] = {}
    for height, sign in levels(word):
        signs.setdefault(height, set()).add(sign)
    return any(len(found) == 2 for found in signs.values())


def rewriting_suite(
    radius: int = DEFAULT_RADIUS, max_len: int = REWRITE_VERIFY_LENGTH, max_entries: int = 7
) -> SuiteResult:
    result = SuiteResult("rewriting")
    for word in reduced_words(max_len):
        try:
            run = encode_run(word)
        except ValueError:
            run = None
        if run is not None:
            result.checked += 1
            if decode_run(run) != word:
                result.fail(f"{format_word(word)} decodes back as {format_word(decode_run(run))}")
        if classify_type(word) is None:
            continue
        result.checked += 1
        pushed = push_one_run(word)
        expected_len = len(pushed) < len(word) if _mixes_signs(word) else len(pushed) == len(word)
        if eval_word(pushed) != eval_word(word) or not expected_len:
            result.fail(f"pushing {format_word(word)} gives {format_word(pushed)}")
        elif not _is_one_run(pushed):
            result.fail(f"pushed word {format_word(pushed)} is not one run")
    for count in range(1, max_entries + 1):
        for entries in product(range(-3, 4), repeat=count):
            if any(entries[i] * entries[i + 1] == -1 for i in range(count - 1)):
                continue
            for direction in RunDirection:
                run = RunForm(0, direction, entries, 0)
                rewritten = apply_no11(run)
                before, after = decode_run(run), decode_run(rewritten)
                result.checked += 1
                if eval_word(after) != eval_word(before) or len(after) > len(before):
                    result.fail(f"no-11 rewrite of {direction.value}-run {format_entries(entries)}")
    return result


def thue_morse_suite(radius: int = DEFAULT_RADIUS) -> SuiteResult:
    result = SuiteResult("thue-morse")
    for i, expected in ((1, "abc"), (2, "abcacb"), (3, "abcacbabcbac")):
        result.checked += 1
        if thue_morse(i) != expected:
            result.fail(f"f^{i}(a) = {thue_morse(i)}, expected {expected}")
    for i in range(11):
        result.checked += 1
        if has_square(thue_morse(i)):
            result.fail(f"f^{i}(a) has a square")
    return result


def t_encoding_suite(radius: int = DEFAULT_RADIUS, trials: int = 1000, seed: int = 0) -> SuiteResult:
    result = SuiteResult("t-encoding")
    example = parse_word("at^2a^2ta^3t^4at^-9at^2at^-1")
    result.checked += 1
    if t_encode(example).values != (0, 2, 0, 1, 0, 0, 4, -9, 2, -1):
        result.fail(f"worked example encodes as {t_encode(example)}")
    rng = random.Random(seed)
    for _ in range(trials):
        word = _random_t_word(rng)
        result.checked += 1
        if t_decode(t_encode(word)) != word:
            result.fail(f"{format_word(word)} does not survive encode and decode")
    return result


def _random_t_word(rng: random.Random) -> Word:
    word: list[Letter] = []
    for _ in range(rng.randint(0, 6)):
        step = rng.choice((Letter.T_POS, Letter.T_NEG))
        word.extend([step] * rng.randint(0, 4))
        word.append(Letter.A_POS)
    step = rng.choice((Letter.T_POS, Letter.T_NEG))
    word.extend([step] * rng.randint(0, 4))
    return tuple(word)


def swap_suite(radius: int = DEFAULT_RADIUS) -> SuiteResult:
    result = SuiteResult("swap")
    for i, s in ((2, 4), (3, 10)):
        report = swap_experiment(i, s, 3)
        result.checked += 1 + report.variants_differing
        if not report.geodesic_base:
            result.fail(f"mesa word for i={i}, s={s} is not geodesic")
        for encoding in report.variants_geodesic:
            result.fail(f"swap variant {encoding} for i={i}, s={s} stays geodesic")
    return result


def growth_suite(radius: int = DEFAULT_RADIUS) -> SuiteResult:
    result = SuiteResult("growth")
    from_bfs = bfs_ball(radius).sizes()
    from_nf = nf_sphere_sizes(radius)
    for n, (bfs_count, nf_count) in enumerate(zip(from_bfs, from_nf)):
        result.checked += 1
        if bfs_count != nf_count:
            result.fail(f"sphere {n}: {bfs_count} elements, {nf_count} normal forms")
    for n, anchor in enumerate((1, 4, 12)[: radius + 1]):
        if from_bfs[n] != anchor:
            result.fail(f"sphere {n} has {from_bfs[n]} elements, expected {anchor}")
    return result


SUITES: dict[str, Callable[..., SuiteResult]] = {
    "relator": relator_suite,
    "rewriting": rewriting_suite,
    "nf-trichotomy": nf_trichotomy_suite,
    "nf-acceptor": nf_acceptor_suite,
    "counter-to-pda": counter_to_pda_suite,
    "zoo": zoo_suite,
    "closure": closure_suite,
    "thue-morse": thue_morse_suite,
    "t-encoding": t_encoding_suite,
    "swap": swap_suite,
    "growth": growth_suite,
}


def run_suites(name: str, radius: int = DEFAULT_RADIUS) -> list[SuiteResult]:
    """
    :param name: a key of SUITES, or "all"
    :param radius: ball radius of the suites that build one
    :return: one result per suite run
    """
    if name == "all":
        names = list(SUITES)
    elif name in SUITES:
        names = [name]
    else:
        raise ValueError(f"Unknown suite {name!r}, expected one of {['all', *SUITES]}")
    results = []
    for suite in names:
        logger.info("running suite %s", suite)
        results.append(SUITES[suite](radius))
        logger.info("suite %s: %s", suite, "passed" if results[-1].passed else "FAILED")
    return results
