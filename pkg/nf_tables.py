"""
Run families of the normal form and the finite tables for short runs.

A normal form word with t-letters is one of four run families:

    X   t^k  a^e_l t^-1 ... t^-1 a^e_0  t^m     k > 0, l >= k + m
    N        a^e_l t^-1 ... t^-1 a^e_0  t^k     0 <= k <= l
    P   t^-k a^e_0 t ... t a^e_l                0 <= k < l
    PX  t^-k a^e_0 t ... t a^e_l        t^-m    m > 0, k + m < l

(e_0 != 0 whenever the outer power on its side is non trivial). Runs with one
or two t-letters are listed word by word in nf_tables.txt; longer runs are
described by the three-entry patterns allowed at their privileged end.
"""
import os
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import product
from typing import Sequence

from group_core import Letter, Word, a_power, parse_word, t_power

TABLES_PATH = os.environ.get(
    "BS12_NF_TABLES", os.path.join(os.path.dirname(__file__), "nf_tables.txt")
)

Pattern = tuple[int, ...]


class Family(Enum):
    X = "X"
    N = "N"
    P = "P"
    PX = "PX"

    @property
    def n_run(self) -> bool:
        return self in (Family.X, Family.N)

    @property
    def run_letter(self) -> Letter:
        return Letter.T_NEG if self.n_run else Letter.T_POS


_WORD_SECTIONS = {
    "L1": "l1",
    "L2": "l2",
    "L3": "l3",
    "L4": "l4",
    "L1'": "l1_prime",
    "L2'": "l2_prime",
    "L3'": "l3_prime",
    "L4'": "l4_prime",
}
_PATTERN_SECTIONS = {
    "PREFIX_X": "prefix_x",
    "PREFIX_N": "prefix_n",
    "SUFFIX_P": "suffix_p",
    "SUFFIX_PX": "suffix_px",
}


@dataclass(frozen=True)
class NfTables:
    l1: frozenset[Word]
    l2: frozenset[Word]
    l3: frozenset[Word]
    l4: frozenset[Word]
    l1_prime: frozenset[Word]
    l2_prime: frozenset[Word]
    l3_prime: frozenset[Word]
    l4_prime: frozenset[Word]
    prefix_x: frozenset[Pattern]
    prefix_n: frozenset[Pattern]
    suffix_p: frozenset[Pattern]
    suffix_px: frozenset[Pattern]

    def short_table(self, family: Family) -> frozenset[Word]:
        return {
            Family.X: self.l1,
            Family.N: self.l2,
            Family.P: self.l3,
            Family.PX: self.l4,
        }[family]

    def patterns(self, family: Family) -> frozenset[Pattern]:
        """
        run patterns of a run with at least three t-letters, as written:
        the first three entries of an N-run, the last three of a P-run
        """
        return {
            Family.X: self.prefix_x,
            Family.N: self.prefix_n,
            Family.P: self.suffix_p,
            Family.PX: self.suffix_px,
        }[family]

    def truncated_patterns(self, family: Family) -> frozenset[Pattern]:
        """patterns allowed for a run with a single t-letter"""
        if family.n_run:
            return frozenset(pattern[:2] for pattern in self.patterns(family))
        return frozenset(pattern[1:] for pattern in self.patterns(family))

    def short_words(self) -> frozenset[Word]:
        return self.l1 | self.l2 | self.l3 | self.l4

    def three_letter_words(self) -> frozenset[Word]:
        return self.l1_prime | self.l2_prime | self.l3_prime | self.l4_prime


def parse_tables(text: str) -> NfTables:
    """
    parse the line oriented tables format
    :param text: content of a tables file
    :return: parsed tables
    """
    sections: dict[str, set] = {
        field: set() for field in (*_WORD_SECTIONS.values(), *_PATTERN_SECTIONS.values())
    }
    current = None
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("[") and line.endswith("]"):
            name = line[1:-1]
            current = _WORD_SECTIONS.get(name) or _PATTERN_SECTIONS.get(name)
            if current is None:
                raise ValueError(f"Unknown section {line} on line {number}")
            continue
        if current is None:
            raise ValueError(f"Entry outside of any section on line {number}")
        if current in _PATTERN_SECTIONS.values():
            try:
                pattern = tuple(int(value) for value in line.split())
            except ValueError:
                raise ValueError(f"Malformed pattern {line!r} on line {number}") from None
            if len(pattern) != 3:
                raise ValueError(f"Pattern {line!r} on line {number} needs three entries")
            sections[current].add(pattern)
        else:
            sections[current].add(parse_word(line))
    return NfTables(**{field: frozenset(values) for field, values in sections.items()})


@lru_cache(maxsize=None)
def load_tables(path: str = TABLES_PATH) -> NfTables:
    with open(path, encoding="utf-8") as tables_file:
        return parse_tables(tables_file.read())


def family_word(family: Family, entries: Sequence[int], lead: int = 0, trail: int = 0) -> Word:
    """
    assemble a one-run word
    :param family: run family
    :param entries: run entries as written
    :param lead: size of the leading t-power (t^lead for X, t^-lead for P and PX)
    :param trail: size of the trailing t-power (t^trail for X and N, t^-trail for PX)
    :return: the word
    """
    word = t_power(lead if family is Family.X else -lead)
    for index, entry in enumerate(entries):
        if index:
            word += (family.run_letter,)
        word += a_power(entry)
    return word + t_power(-trail if family is Family.PX else trail)


def outer_admissible(family: Family, length: int, lead: int, trail: int) -> bool:
    """whether t-powers of sizes lead and trail may surround a run of this length"""
    if lead < 0 or trail < 0:
        return False
    if family is Family.X:
        return lead >= 1 and length >= lead + trail
    if family is Family.N:
        return lead == 0 and trail <= length
    if family is Family.P:
        return trail == 0 and lead < length
    return trail >= 1 and lead + trail < length


def outer_powers(family: Family, length: int):
    """
    yield every admissible (lead, trail) pair for a run with length t-letters
    """
    if family is Family.X:
        for lead in range(1, length + 1):
            for trail in range(length - lead + 1):
                yield lead, trail
    elif family is Family.N:
        for trail in range(length + 1):
            yield 0, trail
    elif family is Family.P:
        for lead in range(length):
            yield lead, 0
    else:
        for trail in range(1, length):
            for lead in range(length - trail):
                yield lead, trail


def needs_nonzero_end(family: Family, lead: int, trail: int) -> bool:
    """whether e_0 must be non zero for these outer powers"""
    return bool(trail if family.n_run else lead)


def end_entry(family: Family, entries: Sequence[int]) -> int:
    """e_0: last entry of an N-run, first of a P-run"""
    return entries[-1] if family.n_run else entries[0]


def derive_short_words(tables: NfTables, family: Family) -> frozenset[Word]:
    """
    rebuild the short-run table of a family from its run patterns
    :param tables: tables holding the patterns
    :param family: run family
    :return: all normal form words of the family whose run has one or two t-letters
    """
    words = set()
    for length, allowed in ((1, tables.truncated_patterns(family)), (2, tables.patterns(family))):
        for entries, (lead, trail) in product(sorted(allowed), list(outer_powers(family, length))):
            if needs_nonzero_end(family, lead, trail) and end_entry(family, entries) == 0:
                continue
            words.add(family_word(family, entries, lead, trail))
    return frozenset(words)
