"""
Runs, the ten geodesic word types and the length non-increasing rewrites.

A run is an alternating block a^e t^-1 a^e ... (N-run) or a^e t a^e ... (P-run);
its entries are the a-exponents as written, so an N-run with r letters t^-1
has r + 1 entries. Pushing a-letters across a zero t-exponent subword keeps
both the group element and the length (a u = u a), which is how any typed
word is brought to at most one non trivial run.
"""
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence

from group_core import Letter, Word, a_power, t_exponent, t_power
from nf_tables import Family, NfTables, load_tables


class RunDirection(Enum):
    N = "N"
    P = "P"

    @property
    def run_letter(self) -> Letter:
        return Letter.T_NEG if self is RunDirection.N else Letter.T_POS


class WordType(Enum):
    E = "E"
    X = "X"
    N = "N"
    XN = "XN"
    NP_LE = "NP_LE"
    XNP = "XNP"
    P = "P"
    PX = "PX"
    NP_GT = "NP_GT"
    NPX = "NPX"


# run family whose privileged-end patterns constrain a run inside each type
CONTEXT_FAMILY: dict[WordType, Family] = {
    WordType.X: Family.X,
    WordType.XN: Family.X,
    WordType.XNP: Family.X,
    WordType.N: Family.N,
    WordType.NP_LE: Family.N,
    WordType.P: Family.P,
    WordType.NP_GT: Family.P,
    WordType.PX: Family.PX,
    WordType.NPX: Family.PX,
}


@dataclass(frozen=True)
class RunForm:
    pre_t: int
    direction: RunDirection
    entries: tuple[int, ...]
    post_t: int = 0

    def to_json(self) -> dict:
        return {
            "pre_t": self.pre_t,
            "dir": self.direction.value,
            "entries": list(self.entries),
            "post_t": self.post_t,
        }

    @classmethod
    def from_json(cls, data: dict) -> "RunForm":
        try:
            return cls(
                pre_t=int(data["pre_t"]),
                direction=RunDirection(data["dir"]),
                entries=tuple(int(entry) for entry in data["entries"]),
                post_t=int(data["post_t"]),
            )
        except KeyError as missing:
            raise ValueError(f"Missing run field {missing}") from None


def format_entries(entries: Sequence[int]) -> str:
    """(2, 0, -1) -> "20(-1)" """
    return "".join(str(entry) if entry >= 0 else f"({entry})" for entry in entries)


def t_blocks(word: Sequence[Letter]) -> tuple[RunDirection, ...]:
    """shape of the t-letters: P for a block of t, N for a block of t^-1"""
    shape: list[RunDirection] = []
    for letter in word:
        if letter.is_t:
            block = RunDirection.P if letter is Letter.T_POS else RunDirection.N
            if not shape or shape[-1] is not block:
                shape.append(block)
    return tuple(shape)


def classify_type(word: Sequence[Letter]) -> Optional[WordType]:
    """
    type of a freely reduced word, None for shapes outside the ten types
    :param word: freely reduced word
    :return: word type or None
    """
    shape = t_blocks(word)
    texp = t_exponent(word)
    n, p = RunDirection.N, RunDirection.P
    if not shape:
        return WordType.E
    if shape == (n,):
        return WordType.N
    if shape == (p,):
        return WordType.P
    if shape == (p, n):
        if texp == 0:
            return WordType.X
        return WordType.XN if texp < 0 else WordType.PX
    if shape == (n, p):
        return WordType.NP_LE if texp <= 0 else WordType.NP_GT
    if shape == (p, n, p) and texp <= 0:
        return WordType.XNP
    if shape == (n, p, n) and texp > 0:
        return WordType.NPX
    return None


def levels(word: Sequence[Letter]) -> list[tuple[int, int]]:
    """(height, sign) of every a-letter, height being the t-exponent read so far"""
    height = 0
    found = []
    for letter in word:
        if letter.is_t:
            height += letter.sign
        else:
            found.append((height, letter.sign))
    return found


def _chunk_exponent(chunk: Sequence[Letter]) -> int:
    if Letter.A_POS in chunk and Letter.A_NEG in chunk:
        raise ValueError("run entry mixes a and a^-1")
    return sum(letter.sign for letter in chunk)


def _split_run(word: Word, first: int, last: int, direction: RunDirection) -> Optional[RunForm]:
    run_letter = direction.run_letter
    outer = run_letter.inverse
    head, tail = word[:first], word[last + 1 :]
    outer_head = _leading(head, outer)
    run_head = len(head) - outer_head
    if any(letter is not run_letter for letter in head[outer_head:]):
        return None
    run_tail = _leading(tail, run_letter)
    if any(letter is not outer for letter in tail[run_tail:]):
        return None
    region = (run_letter,) * run_head + word[first : last + 1] + (run_letter,) * run_tail
    entries = []
    chunk: list[Letter] = []
    for letter in region:
        if letter is run_letter:
            entries.append(_chunk_exponent(chunk))
            chunk = []
        elif letter.is_t:
            return None
        else:
            chunk.append(letter)
    entries.append(_chunk_exponent(chunk))
    outer_tail = len(tail) - run_tail
    sign = outer.sign
    return RunForm(sign * outer_head, direction, tuple(entries), sign * outer_tail)


def _leading(word: Word, letter: Letter) -> int:
    count = 0
    while count < len(word) and word[count] is letter:
        count += 1
    return count


def encode_run(word: Sequence[Letter]) -> RunForm:
    """
    split a one-run word into t^pre_t (run) t^post_t; letters of the run's own
    direction at either end belong to the run
    :param word: word with at most one run
    :return: run form
    """
    word = tuple(word)
    a_positions = [index for index, letter in enumerate(word) if not letter.is_t]
    if not a_positions:
        return RunForm(t_exponent(word), RunDirection.N, (0,), 0)
    first, last = a_positions[0], a_positions[-1]
    inner = {letter for letter in word[first : last + 1] if letter.is_t}
    if inner == {Letter.T_POS, Letter.T_NEG}:
        raise ValueError("word has more than one run")
    if inner == {Letter.T_NEG}:
        candidates = (RunDirection.N,)
    elif inner == {Letter.T_POS}:
        candidates = (RunDirection.P,)
    elif t_exponent(word) <= 0:
        candidates = (RunDirection.N, RunDirection.P)
    else:
        candidates = (RunDirection.P, RunDirection.N)
    for direction in candidates:
        form = _split_run(word, first, last, direction)
        if form is not None:
            return form
    raise ValueError("word is not of shape t^p (run) t^q")


def decode_run(run: RunForm) -> Word:
    word = t_power(run.pre_t)
    for index, entry in enumerate(run.entries or (0,)):
        if index:
            word += (run.direction.run_letter,)
        word += a_power(entry)
    return word + t_power(run.post_t)


def push_one_run(word: Sequence[Letter]) -> Word:
    """
    move every a-letter to the same height on a monotone t-path, which keeps
    the element (only heights of a-letters matter); letters meeting on one
    level are merged into a single power, so the length is kept unless a level
    held both a and a^-1
    :param word: word of one of the ten types
    :return: equal word, no longer than word, with at most one non trivial run
    """
    word = tuple(word)
    if classify_type(word) is None:
        raise ValueError("word is not of one of the ten types")
    height = top = bottom = 0
    by_level: dict[int, int] = {}
    for letter in word:
        if letter.is_t:
            height += letter.sign
            top, bottom = max(top, height), min(bottom, height)
        else:
            by_level[height] = by_level.get(height, 0) + letter.sign
    texp = height

    down_first = top + (top - bottom) + (texp - bottom)
    up_first = -bottom + (top - bottom) + (top - texp)
    if down_first <= up_first:
        pushed = t_power(top)
        for level in range(top, bottom - 1, -1):
            pushed += a_power(by_level.get(level, 0))
            if level > bottom:
                pushed += (Letter.T_NEG,)
        return pushed + t_power(texp - bottom)
    pushed = t_power(bottom)
    for level in range(bottom, top + 1):
        pushed += a_power(by_level.get(level, 0))
        if level < top:
            pushed += (Letter.T_POS,)
    return pushed + t_power(texp - top)


def apply_no11(run: RunForm) -> RunForm:
    """
    i11 -> (i+1)0(-1) and i(-1)(-1) -> (i-1)01, right to left on an N-run;
    11i -> (-1)0(i+1) and (-1)(-1)i -> 10(i-1), left to right on a P-run.
    The pair at the privileged end is left alone.
    """
    entries = list(run.entries)
    if run.direction is RunDirection.N:
        for start in range(len(entries) - 3, -1, -1):
            pair = (entries[start + 1], entries[start + 2])
            if pair in ((1, 1), (-1, -1)):
                step = pair[0]
                entries[start] += step
                entries[start + 1] = 0
                entries[start + 2] = -step
    else:
        for start in range(len(entries) - 2):
            pair = (entries[start], entries[start + 1])
            if pair in ((1, 1), (-1, -1)):
                step = pair[0]
                entries[start] = -step
                entries[start + 1] = 0
                entries[start + 2] += step
    return RunForm(run.pre_t, run.direction, tuple(entries), run.post_t)


def apply_no_minus11(run: RunForm) -> RunForm:
    """
    remove every 1(-1) and (-1)1 adjacency; each move shortens the run by one
    letter: 1(-1) -> 01 and (-1)1 -> 0(-1) on an N-run, the mirror on a P-run
    """
    entries = list(run.entries)
    changed = True
    while changed:
        changed = False
        for index in range(len(entries) - 1):
            high, low = (index, index + 1) if run.direction is RunDirection.N else (index + 1, index)
            if entries[high] * entries[low] == -1:
                entries[low] = entries[high]
                entries[high] = 0
                changed = True
    return RunForm(run.pre_t, run.direction, tuple(entries), run.post_t)


def run_violations(
    run: RunForm, context: WordType, tables: Optional[NfTables] = None
) -> list[str]:
    """
    every constraint a geodesic run of the given word type violates
    :param run: run to inspect
    :param context: type of the word the run lives in
    :param tables: run patterns, the packaged tables by default
    :return: human readable violations, empty when none
    """
    entries = run.entries
    n_run = run.direction is RunDirection.N
    privileged = 0 if n_run else len(entries) - 1
    privileged_pair = (0, 1) if n_run else (len(entries) - 2, len(entries) - 1)
    violations = []
    for index, entry in enumerate(entries):
        if abs(entry) >= 6:
            violations.append(f"entry {entry} at position {index} has |i| >= 6")
        elif abs(entry) >= 2 and index != privileged:
            violations.append(f"entry {entry} at position {index} off the privileged end")
    for index in range(len(entries) - 1):
        pair = (entries[index], entries[index + 1])
        if pair in ((1, -1), (-1, 1)):
            violations.append(f"{format_entries(pair)} adjacency")
        elif pair in ((1, 1), (-1, -1)) and (index, index + 1) != privileged_pair:
            violations.append(f"{format_entries(pair)} adjacency at position {index}")

    family = CONTEXT_FAMILY.get(context)
    if family is None or len(entries) < 2:
        return violations
    if family.n_run != n_run:
        violations.append(f"{run.direction.value}-run in a word of type {context.value}")
        return violations
    tables = tables or load_tables()
    if len(entries) == 2:
        allowed, end = tables.truncated_patterns(family), tuple(entries)
    else:
        allowed = tables.patterns(family)
        end = tuple(entries[:3]) if n_run else tuple(entries[-3:])
    if end not in allowed:
        side = "prefix" if n_run else "suffix"
        violations.append(f"{side} {format_entries(end)} forbidden")
    return violations
