"""
The normal form language: one geodesic word per element of BS(1,2).

Membership is decided by reading a word as a sequence of a-slots separated
by t-steps and matching it against the four run families of nf_tables (plus
the seven powers a^-3 .. a^3). The normal form of an element is synthesised
by generating candidates (the run entries are the signed-digit expansion of
an integer fixed by the element, topped by one of the privileged patterns)
and keeping the ones that are normal forms of that element; exactly one must
survive.
"""
import logging
from functools import lru_cache
from typing import Iterator, Optional, Sequence

from group_core import GroupElement, Letter, Word, a_power, eval_word, word_key
from nf_tables import (
    Family,
    NfTables,
    end_entry,
    family_word,
    load_tables,
    needs_nonzero_end,
    outer_admissible,
    outer_powers,
)
from rewriting import WordType, classify_type

logger = logging.getLogger(__name__)

E_WORDS: frozenset[Word] = frozenset(a_power(n) for n in range(-3, 4))
_SPARSE_DIGITS = (0, 1, -1)


def _slots(word: Sequence[Letter]) -> Optional[tuple[list[int], list[int]]]:
    """a-exponent of every slot between t-steps, or None if a slot mixes signs"""
    slots = [0]
    steps = []
    for letter in word:
        if letter.is_t:
            steps.append(letter.sign)
            slots.append(0)
        elif slots[-1] * letter.sign < 0:
            return None
        else:
            slots[-1] += letter.sign
    return slots, steps


def _blocks(steps: list[int]) -> list[tuple[int, int]]:
    blocks: list[tuple[int, int]] = []
    for step in steps:
        if blocks and blocks[-1][0] == step:
            blocks[-1] = (step, blocks[-1][1] + 1)
        else:
            blocks.append((step, 1))
    return blocks


def _family_shape(family: Family, blocks: list[tuple[int, int]]) -> Optional[tuple[int, int, int]]:
    """(lead, run length, trail) when the t-steps fit the family's shape"""
    signs = tuple(sign for sign, _ in blocks)
    sizes = [size for _, size in blocks]
    if family is Family.X:
        if signs == (1, -1):
            return sizes[0], sizes[1], 0
        if signs == (1, -1, 1):
            return sizes[0], sizes[1], sizes[2]
    elif family is Family.N:
        if signs == (-1,):
            return 0, sizes[0], 0
        if signs == (-1, 1):
            return 0, sizes[0], sizes[1]
    elif family is Family.P:
        if signs == (1,):
            return 0, sizes[0], 0
        if signs == (-1, 1):
            return sizes[0], sizes[1], 0
    else:
        if signs == (1, -1):
            return 0, sizes[0], sizes[1]
        if signs == (-1, 1, -1):
            return sizes[0], sizes[1], sizes[2]
    return None


def long_run_allowed(tables: NfTables, family: Family, entries: Sequence[int]) -> bool:
    """
    a run with at least three t-letters: privileged pattern at its end, only
    0 and +-1 elsewhere, no two adjacent non zero entries outside the
    privileged pair
    """
    if family.n_run:
        end, rest, sparse = entries[:3], entries[3:], entries[1:]
    else:
        end, rest, sparse = entries[-3:], entries[:-3], entries[:-1]
    if tuple(end) not in tables.patterns(family):
        return False
    if any(entry not in _SPARSE_DIGITS for entry in rest):
        return False
    return not any(left and right for left, right in zip(sparse, sparse[1:]))


def is_normal_form(word: Sequence[Letter], tables: Optional[NfTables] = None) -> bool:
    """
    membership in the normal form language
    :param word: any word
    :param tables: short-run tables, the packaged ones by default
    :return: True if word is the normal form of its element
    """
    word = tuple(word)
    parsed = _slots(word)
    if parsed is None:
        return False
    slots, steps = parsed
    if not steps:
        return word in E_WORDS
    tables = tables or load_tables()
    blocks = _blocks(steps)
    for family in Family:
        shape = _family_shape(family, blocks)
        if shape is None:
            continue
        lead, length, trail = shape
        if not outer_admissible(family, length, lead, trail):
            continue
        entries = slots[lead : lead + length + 1]
        if any(slots[:lead]) or any(slots[lead + length + 1 :]):
            continue
        if needs_nonzero_end(family, lead, trail) and end_entry(family, entries) == 0:
            continue
        if length < 3:
            if word in tables.short_table(family):
                return True
        elif long_run_allowed(tables, family, entries):
            return True
    return False


def nf_type(word: Sequence[Letter]) -> Optional[WordType]:
    """which of the ten types a normal form word has, None for other words"""
    if not is_normal_form(word):
        return None
    return classify_type(word)


@lru_cache(maxsize=None)
def _short_index() -> dict[GroupElement, tuple[Word, ...]]:
    index: dict[GroupElement, tuple[Word, ...]] = {}
    for word in sorted(E_WORDS | load_tables().short_words(), key=word_key):
        element = eval_word(word)
        index[element] = index.get(element, ()) + (word,)
    return index


def naf_digits(value: int) -> list[int]:
    """non adjacent form of value, least significant digit first"""
    digits = []
    while value:
        if value & 1:
            digit = 2 - (value & 3)
            value -= digit
        else:
            digit = 0
        digits.append(digit)
        value >>= 1
    return digits


def _lengths_near(value: int) -> range:
    # a privileged top entry of size 2 or 3 puts |value| between 2^l and 2^(l+2)
    bits = abs(value).bit_length()
    return range(max(3, bits - 3), bits + 2)


def _long_candidates(tables: NfTables, family: Family, value: int, length: int, lead: int, trail: int):
    if length < 3 or not outer_admissible(family, length, lead, trail):
        return
    for pattern in tables.patterns(family):
        top = pattern if family.n_run else pattern[::-1]
        rest = value - (top[0] << length) - (top[1] << (length - 1)) - (top[2] << (length - 2))
        digits = naf_digits(rest)
        if len(digits) > length - 2:
            continue
        little = digits + [0] * (length - 2 - len(digits)) + [top[2], top[1], top[0]]
        entries = tuple(reversed(little)) if family.n_run else tuple(little)
        yield family_word(family, entries, lead, trail)


def _candidates(tables: NfTables, g: GroupElement) -> Iterator[Word]:
    num, dexp, texp = g.num, g.dexp, g.texp
    if texp <= 0:
        for trail in {0, texp + dexp}:
            shift = trail - texp - dexp
            if trail < 0 or shift < 0:
                continue
            value = num << shift
            for length in _lengths_near(value):
                yield from _long_candidates(
                    tables, Family.X, value, length, length - trail + texp, trail
                )
        for trail, length in {(0, -texp), (dexp + texp, dexp)}:
            if trail >= 0 and length >= dexp:
                yield from _long_candidates(
                    tables, Family.N, num << (length - dexp), length, 0, trail
                )
    else:
        # the leading t^-k always equals the denominator exponent
        yield from _long_candidates(tables, Family.P, num, texp + dexp, dexp, 0)
        for length in _lengths_near(num):
            yield from _long_candidates(
                tables, Family.PX, num, length, dexp, length - texp - dexp
            )


def nf_of_element(g: GroupElement) -> Word:
    """
    the unique normal form word of an element
    :param g: canonical element
    :return: normal form word, a geodesic for g
    """
    tables = load_tables()
    found = set(_short_index().get(g, ()))
    for word in _candidates(tables, g):
        if is_normal_form(word, tables) and eval_word(word) == g:
            found.add(word)
    if len(found) != 1:
        raise RuntimeError(f"{len(found)} normal form candidates for element {g}")
    return found.pop()


def normalize(word: Sequence[Letter]) -> Word:
    return nf_of_element(eval_word(word))


def geodesic_length(g: GroupElement) -> int:
    return len(nf_of_element(g))


def _sparse_tails(length: int, budget: int, after_nonzero: bool, nonzero_last: bool):
    """
    digit strings over 0, +-1 without adjacent non zero digits, weight at most
    budget; the first digit sits next to the privileged pattern
    """
    if length == 0:
        yield ()
        return
    for digit in _SPARSE_DIGITS:
        if digit and (after_nonzero or budget < 1):
            continue
        if length == 1 and nonzero_last and not digit:
            continue
        for rest in _sparse_tails(length - 1, budget - abs(digit), bool(digit), nonzero_last):
            yield (digit,) + rest


def _long_words(tables: NfTables, family: Family, max_len: int) -> Iterator[Word]:
    for length in range(3, max_len + 1):
        for lead, trail in outer_powers(family, length):
            budget = max_len - length - lead - trail
            if budget < 0:
                continue
            nonzero_end = needs_nonzero_end(family, lead, trail)
            for pattern in tables.patterns(family):
                weight = sum(abs(entry) for entry in pattern)
                if weight > budget:
                    continue
                boundary = pattern[2] if family.n_run else pattern[0]
                for tail in _sparse_tails(length - 2, budget - weight, bool(boundary), nonzero_end):
                    entries = pattern + tail if family.n_run else tail[::-1] + pattern
                    yield family_word(family, entries, lead, trail)


def enumerate_nf(max_len: int) -> Iterator[Word]:
    """
    every normal form word of length at most max_len, built from the family
    grammars, once each, in shortlex order (a < A < t < T)
    """
    tables = load_tables()
    words = {word for word in E_WORDS | tables.short_words() if len(word) <= max_len}
    for family in Family:
        words.update(_long_words(tables, family, max_len))
    logger.debug("enumerated %d normal forms up to length %d", len(words), max_len)
    yield from sorted(words, key=word_key)
