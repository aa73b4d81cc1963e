"""
Exact arithmetic in BS(1,2) = <a, t | t a t^-1 = a^2>.

An element is stored through the faithful representation Z[1/2] x| Z: the
pair (q, n) with q = num / 2^dexp and n the t-exponent, multiplied by
(q1, n1)(q2, n2) = (q1 + 2^n1 q2, n1 + n2). The generator a is (1, 0) and t
is (0, 1). Words are tuples of Letter and are written in the text grammar
``a``, ``A``, ``t``, ``T``, ``a^<int>``, ``t^<int>`` (``A`` is a^-1, ``T`` is
t^-1).
"""
import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence


class Letter(Enum):
    A_POS = "a"
    A_NEG = "A"
    T_POS = "t"
    T_NEG = "T"

    def __repr__(self):
        return self.value

    @property
    def inverse(self) -> "Letter":
        return _INVERSES[self]

    @property
    def is_t(self) -> bool:
        return self in (Letter.T_POS, Letter.T_NEG)

    @property
    def sign(self) -> int:
        return 1 if self in (Letter.A_POS, Letter.T_POS) else -1


_INVERSES = {
    Letter.A_POS: Letter.A_NEG,
    Letter.A_NEG: Letter.A_POS,
    Letter.T_POS: Letter.T_NEG,
    Letter.T_NEG: Letter.T_POS,
}

Word = tuple[Letter, ...]

# shortlex tie-break a < A < t < T
LETTER_ORDER: tuple[Letter, ...] = (
    Letter.A_POS,
    Letter.A_NEG,
    Letter.T_POS,
    Letter.T_NEG,
)
_LETTER_RANK = {letter: rank for rank, letter in enumerate(LETTER_ORDER)}

EMPTY_WORD_TEXT = "ε"

_TOKEN = re.compile(r"([aAtT])(?:\^([+-]?\d+))?")


@dataclass(frozen=True)
class GroupElement:
    """
    element num / 2^dexp * t^texp of Z[1/2] x| Z, built canonical by
    canonical(): dexp == 0 or num odd
    """

    num: int = 0
    dexp: int = 0
    texp: int = 0

    def __post_init__(self):
        if self.dexp < 0:
            raise ValueError(f"negative denominator exponent {self.dexp}")

    def __str__(self):
        if self.dexp:
            return f"({self.num}/2^{self.dexp}, {self.texp})"
        return f"({self.num}, {self.texp})"

    def to_json(self) -> dict:
        return {"num": str(self.num), "dexp": self.dexp, "texp": self.texp}

    @classmethod
    def from_json(cls, data: dict) -> "GroupElement":
        try:
            return canonical(int(data["num"]), int(data["dexp"]), int(data["texp"]))
        except KeyError as missing:
            raise ValueError(f"Missing element field {missing}") from None


IDENTITY = GroupElement()


def canonical(num: int, dexp: int, texp: int, p: int = 2) -> GroupElement:
    """
    reduce num / p^dexp to lowest terms; a negative dexp is folded into num
    """
    if num == 0:
        return GroupElement(0, 0, texp)
    if dexp < 0:
        return GroupElement(num * p**-dexp, 0, texp)
    if p == 2:
        shift = min((num & -num).bit_length() - 1, dexp)
        return GroupElement(num >> shift, dexp - shift, texp)
    while dexp > 0 and num % p == 0:
        num //= p
        dexp -= 1
    return GroupElement(num, dexp, texp)


def multiply(g: GroupElement, h: GroupElement, p: int = 2) -> GroupElement:
    # q_g + p^texp_g * q_h over the common denominator p^dexp
    shift = h.dexp - g.texp
    dexp = max(g.dexp, shift)
    num = g.num * p ** (dexp - g.dexp) + h.num * p ** (dexp - shift)
    return canonical(num, dexp, g.texp + h.texp, p)


def inverse(g: GroupElement) -> GroupElement:
    """
    (q, n)^-1 = (-q / 2^n, -n)
    :param g: canonical element
    :return: canonical inverse
    """
    return canonical(-g.num, g.dexp + g.texp, -g.texp)


GENERATORS: dict[Letter, GroupElement] = {
    Letter.A_POS: GroupElement(1, 0, 0),
    Letter.A_NEG: GroupElement(-1, 0, 0),
    Letter.T_POS: GroupElement(0, 0, 1),
    Letter.T_NEG: GroupElement(0, 0, -1),
}


def eval_word(word: Iterable[Letter], p: int = 2) -> GroupElement:
    """
    evaluate a word; the a-letter read at height h contributes +-p^h
    :param word: letters
    :param p: base of the relator t a t^-1 = a^p
    :return: canonical element
    """
    height = 0
    contributions: list[tuple[int, int]] = []
    for letter in word:
        if letter.is_t:
            height += letter.sign
        else:
            contributions.append((height, letter.sign))
    if not contributions:
        return GroupElement(0, 0, height)
    low = min(0, min(level for level, _ in contributions))
    num = sum(sign * p ** (level - low) for level, sign in contributions)
    return canonical(num, -low, height, p)


def free_reduce(word: Iterable[Letter]) -> Word:
    stack: list[Letter] = []
    for letter in word:
        if stack and stack[-1] is letter.inverse:
            stack.pop()
        else:
            stack.append(letter)
    return tuple(stack)


def t_exponent(word: Iterable[Letter]) -> int:
    return sum(letter.sign for letter in word if letter.is_t)


def a_power(exponent: int) -> Word:
    letter = Letter.A_POS if exponent >= 0 else Letter.A_NEG
    return (letter,) * abs(exponent)


def t_power(exponent: int) -> Word:
    letter = Letter.T_POS if exponent >= 0 else Letter.T_NEG
    return (letter,) * abs(exponent)


def x_word(j: int, entries: Sequence[int]) -> Word:
    """
    assemble t^k a^j t^-1 a^entries[k-1] ... t^-1 a^entries[0], k = len(entries)
    """
    word = t_power(len(entries)) + a_power(j)
    for entry in reversed(entries):
        word += (Letter.T_NEG,) + a_power(entry)
    return word


def x_word_value(j: int, entries: Sequence[int]) -> int:
    """
    the N with x_word(j, entries) = a^N, namely 2^k j + sum 2^i entries[i]
    :param j: exponent of the top a-block
    :param entries: (e_0, ..., e_{k-1}), k >= 1
    :return: N
    """
    if not entries:
        raise ValueError("an X word needs at least one t^-1")
    return (j << len(entries)) + sum(entry << i for i, entry in enumerate(entries))


def parse_word(text: str) -> Word:
    """
    parse a word such as "ta^2t^-1a" or "a^2 t^-2"
    :param text: word in the a/A/t/T grammar, whitespace is ignored
    :return: letters with exponents expanded
    """
    compact = "".join(text.split())
    if compact == EMPTY_WORD_TEXT:
        return ()
    letters: list[Letter] = []
    position = 0
    while position < len(compact):
        match = _TOKEN.match(compact, position)
        if match is None:
            raise ValueError(
                f"Unknown token {compact[position:]!r} at position {position}"
            )
        base, exponent = match.group(1), match.group(2)
        if exponent is None:
            letters.append(Letter(base))
        elif base.isupper():
            raise ValueError(f"Exponent on inverse letter {match.group(0)!r}")
        elif base == "a":
            letters.extend(a_power(int(exponent)))
        else:
            letters.extend(t_power(int(exponent)))
        position = match.end()
    return tuple(letters)


def format_word(word: Sequence[Letter]) -> str:
    """
    power notation, "ta^2t^-1a"; the empty word formats as ""
    """
    pieces = []
    index = 0
    while index < len(word):
        letter = word[index]
        run = 1
        while index + run < len(word) and word[index + run] is letter:
            run += 1
        base = "a" if letter in (Letter.A_POS, Letter.A_NEG) else "t"
        exponent = run * letter.sign
        pieces.append(base if exponent == 1 else f"{base}^{exponent}")
        index += run
    return "".join(pieces)


def show_word(word: Sequence[Letter]) -> str:
    return format_word(word) or EMPTY_WORD_TEXT


def word_symbols(word: Sequence[Letter]) -> str:
    """one character per letter, the alphabet used by the automata"""
    return "".join(letter.value for letter in word)


def word_key(word: Sequence[Letter]) -> tuple:
    """shortlex order with a < A < t < T"""
    return len(word), tuple(_LETTER_RANK[letter] for letter in word)
