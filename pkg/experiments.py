"""
Word combinatorics behind the non-counter arguments: square-free Thue-Morse
words, adjacent block swaps near the front of a word, t-encodings, and mesa
words (geodesics of BS(1,2) that carry one a on every s-th level of the
sheet) whose front swaps all stop being geodesic.
"""
import logging
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterator, Optional, Sequence, TypeVar

from automata import accept_pda
from group_core import Letter, Word, a_power, t_power
from machine_zoo import pda_ww_reverse
from normal_form import normalize

logger = logging.getLogger(__name__)

THUE_MORSE_MAX = int(os.environ.get("BS12_THUE_MORSE_MAX", "20"))
WORKERS = int(os.environ.get("BS12_WORKERS", "0"))

THUE_MORSE_RULES = {"a": "abc", "b": "ac", "c": "b"}
# Thue-Morse symbol -> multiple of the spacing s in the t-encoding of u
SYMBOL_SPACING = {"a": 1, "b": 2, "c": 3}

Seq = TypeVar("Seq", str, tuple)


def thue_morse(i: int) -> str:
    """f^i(a) for f(a) = abc, f(b) = ac, f(c) = b"""
    if i < 0 or i > THUE_MORSE_MAX:
        raise ValueError(f"Thue-Morse index {i} outside 0..{THUE_MORSE_MAX} (BS12_THUE_MORSE_MAX)")
    word = "a"
    for _ in range(i):
        word = "".join(THUE_MORSE_RULES[symbol] for symbol in word)
    return word


def has_square(s: Sequence) -> bool:
    """
    whether s has a factor ww with w non empty: for each half length, look
    for a run of half equal symbols at that distance
    """
    for half in range(1, len(s) // 2 + 1):
        run = 0
        for index in range(len(s) - half):
            run = run + 1 if s[index] == s[index + half] else 0
            if run >= half:
                return True
    return False


def _swaps(w: Seq, limit: int) -> Iterator[Seq]:
    limit = min(limit, len(w))
    for start in range(limit - 1):
        for middle in range(start + 1, limit):
            for end in range(middle + 1, limit + 1):
                yield w[:start] + w[middle:end] + w[start:middle] + w[end:]


def iter_swap_variants(w: Seq, s: int) -> Iterator[Seq]:
    """
    u y x z for every w = u x y z with |uxy| <= 2s + 1 and x, y non empty, in
    order of the decomposition (|u|, |x|, |y|)
    """
    if s < 1:
        raise ValueError("swap length must be positive")
    return _swaps(w, 2 * s + 1)


def swap_variants(w: Seq, s: int) -> set:
    return set(iter_swap_variants(w, s))


def swap_witness(accepts: Callable[[Seq], bool], w: Seq, s: int) -> Optional[Seq]:
    """the first swap variant of w that accepts still takes, None if there is none"""
    for variant in iter_swap_variants(w, s):
        if accepts(variant):
            return variant
    return None


@dataclass(frozen=True)
class TEncoding:
    values: tuple[int, ...]

    def __post_init__(self):
        if not self.values:
            raise ValueError("a t-encoding has at least one value")

    def __str__(self):
        return "".join(str(v) if v >= 0 else f"({v})" for v in self.values)


def t_encode(w: Sequence[Letter]) -> TEncoding:
    """
    the t-powers n_1, ..., n_k with w = t^n_1 a t^n_2 ... a t^n_k
    :param w: word without a^-1 whose t-blocks do not mix t and t^-1
    :return: encoding with one more value than w has letters a
    """
    values = [0]
    block_sign = 0
    for letter in w:
        if letter is Letter.A_NEG:
            raise ValueError("t-encodings are defined for words without a^-1")
        if letter is Letter.A_POS:
            values.append(0)
            block_sign = 0
        elif block_sign and letter.sign != block_sign:
            raise ValueError("t-block mixes t and t^-1")
        else:
            values[-1] += letter.sign
            block_sign = letter.sign
    return TEncoding(tuple(values))


def t_decode(e: TEncoding) -> Word:
    word = t_power(e.values[0])
    for value in e.values[1:]:
        word += (Letter.A_POS,) + t_power(value)
    return word


def _sheet_slots(u: Sequence[Letter], s: int) -> list[int]:
    """a-exponents between consecutive t^s blocks of t^s a^e_1 t^s ... a^e_c-1 t^s"""
    values = t_encode(u).values
    if any(value <= 0 or value % s for value in values):
        raise ValueError(f"word is not built from blocks t^{s} separated by single letters a")
    slots: list[int] = []
    for index, value in enumerate(values):
        if index:
            slots.append(1)
        slots.extend([0] * (value // s - 1))
    return slots


def build_reverse_v(u: Sequence[Letter], s: int) -> Word:
    """
    the descending half of a mesa: read u's slots backwards, put an a exactly
    where u has none, and step down by t^-s instead of up by t^s
    :param u: t^s a^e_1 t^s ... a^e_k t^s with every e_i in {0, 1}
    :param s: block spacing
    :return: v with t_exponent(v) == -t_exponent(u)
    """
    if s < 1:
        raise ValueError("spacing must be positive")
    word = t_power(-s)
    for slot in reversed(_sheet_slots(u, s)):
        word += a_power(1 - slot) + t_power(-s)
    return word


def mesa_word(u: Sequence[Letter], s: int) -> Word:
    """u a^2 v; pushed to one run it has a^2 on top and a single a on every s-th level below"""
    u = tuple(u)
    if Letter.A_POS not in u:
        raise ValueError("u needs at least one letter a")
    return u + a_power(2) + build_reverse_v(u, s)


def sheet_levels(w: Sequence[Letter]) -> dict[int, int]:
    """number of letters a^+-1 read at each height"""
    height = 0
    counts: Counter = Counter()
    for letter in w:
        if letter.is_t:
            height += letter.sign
        else:
            counts[height] += 1
    return dict(sorted(counts.items()))


def thue_morse_sheet(i: int, s: int) -> Word:
    """u for thue_morse(i): symbols a, b, c become t-encoding values s, 2s, 3s"""
    return t_decode(TEncoding(tuple(SYMBOL_SPACING[symbol] * s for symbol in thue_morse(i))))


def _is_geodesic(word: Word) -> bool:
    return len(normalize(word)) == len(word)


def _variant_task(args):
    """Top-level worker (must be importable for ProcessPoolExecutor on Windows)."""
    values, tail = args
    word = t_decode(TEncoding(values)) + tail
    return values, _is_geodesic(word)


@dataclass
class SwapReport:
    i: int
    s: int
    window: int
    word_length: int
    geodesic_base: bool
    variants_total: int
    variants_differing: int
    variants_geodesic: list[str] = field(default_factory=list)
    levels: dict[int, int] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "i": self.i,
            "s": self.s,
            "window": self.window,
            "word_length": self.word_length,
            "geodesic_base": self.geodesic_base,
            "variants_total": self.variants_total,
            "variants_differing": self.variants_differing,
            "variants_geodesic": list(self.variants_geodesic),
            "levels": [[height, count] for height, count in self.levels.items()],
        }


def swap_experiment(i: int, s: int, swap_len: int, workers: Optional[int] = None) -> SwapReport:
    """
    swap blocks at the front of the t-encoding of a Thue-Morse mesa word and
    check which results are still geodesic
    :param i: Thue-Morse index
    :param s: block spacing
    :param swap_len: swaps stay within the first 2 * swap_len + 1 values
    :param workers: processes checking variants, BS12_WORKERS by default
    :return: report; variants_geodesic lists the t-encodings of differing
        variants that stayed geodesic
    """
    u = thue_morse_sheet(i, s)
    w = mesa_word(u, s)
    values = t_encode(u).values
    tail = w[len(u) :]
    window = min(2 * swap_len + 1, len(values))
    variants = list(_swaps(values, window))
    differing = [variant for variant in variants if variant != values]
    tasks = [(variant, tail) for variant in differing]
    workers = WORKERS if workers is None else workers
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            results = list(executor.map(_variant_task, tasks))
    else:
        results = [_variant_task(task) for task in tasks]
    geodesic = [str(TEncoding(variant)) for variant, stays in results if stays]
    logger.info(
        "swap experiment i=%d s=%d: %d variants, %d differing, %d geodesic",
        i, s, len(variants), len(differing), len(geodesic),
    )
    return SwapReport(
        i=i,
        s=s,
        window=window,
        word_length=len(w),
        geodesic_base=_is_geodesic(w),
        variants_total=len(variants),
        variants_differing=len(differing),
        variants_geodesic=geodesic,
        levels=sheet_levels(normalize(w)),
    )


@dataclass
class PalindromeReport:
    i: int
    word: str
    accepted: bool
    variants_total: int
    variants_differing: int
    variants_accepted: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "i": self.i,
            "word": self.word,
            "accepted": self.accepted,
            "variants_total": self.variants_total,
            "variants_differing": self.variants_differing,
            "variants_accepted": list(self.variants_accepted),
        }


def palindrome_swap_demo(i: int) -> PalindromeReport:
    """
    w w^R for w = thue_morse(i) is accepted by the w w^R pushdown automaton;
    every swap inside the first half that changes the word is rejected
    """
    half = thue_morse(i)
    machine = pda_ww_reverse()
    word = half + half[::-1]
    variants = list(_swaps(half, len(half)))
    differing = [variant + half[::-1] for variant in variants if variant != half]
    accepted = [variant for variant in differing if accept_pda(machine, variant)]
    return PalindromeReport(
        i=i,
        word=word,
        accepted=accept_pda(machine, word),
        variants_total=len(variants),
        variants_differing=len(differing),
        variants_accepted=accepted,
    )
