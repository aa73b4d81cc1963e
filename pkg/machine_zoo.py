"""
Named machines for classic counter and context-free languages, and the
one-counter acceptor of the normal form language.

Every zoo language takes n, m >= 0, so the empty word belongs to all of them
except where the predicate says otherwise.
"""
import logging
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Optional

from automata import (
    CounterAutomaton,
    Machine,
    Pda,
    PdaTransition,
    Transition,
    finite_acceptor,
    union,
)
from group_core import LETTER_ORDER, Letter, word_symbols
from nf_tables import Family, NfTables, load_tables
from normal_form import E_WORDS

logger = logging.getLogger(__name__)

BINARY = ("a", "b")
TERNARY = ("a", "b", "c")
GROUP_SYMBOLS = tuple(letter.value for letter in LETTER_ORDER)


@dataclass(frozen=True)
class ZooEntry:
    name: str
    machine: Machine
    alphabet: tuple[str, ...]
    predicate: Callable[[str], bool]
    description: str


def _blocks(pattern: str, word: str) -> Optional[list[int]]:
    match = re.fullmatch(pattern, word)
    return None if match is None else [len(group) for group in match.groups()]


def is_anbnan(word: str) -> bool:
    sizes = _blocks("(a*)(b*)(a*)", word)
    return sizes is not None and sizes[0] == sizes[1] == sizes[2]


def is_ambmanbn(word: str) -> bool:
    sizes = _blocks("(a*)(b*)(a*)(b*)", word)
    return sizes is not None and sizes[0] == sizes[1] and sizes[2] == sizes[3]


def is_anbn(word: str) -> bool:
    sizes = _blocks("(a*)(b*)", word)
    return sizes is not None and sizes[0] == sizes[1]


def is_ww_reverse(word: str) -> bool:
    return len(word) % 2 == 0 and word == word[::-1]


def is_anbncm(word: str) -> bool:
    sizes = _blocks("(a*)(b*)(c*)", word)
    return sizes is not None and sizes[0] == sizes[1]


def is_ambncn(word: str) -> bool:
    sizes = _blocks("(a*)(b*)(c*)", word)
    return sizes is not None and sizes[1] == sizes[2]


def _counter(k: int, states: str, accepts: str, edges, alphabet: Iterable[str]) -> CounterAutomaton:
    return CounterAutomaton(
        k,
        tuple(states.split()),
        states.split()[0],
        frozenset(accepts.split()),
        tuple(Transition(source, letter, delta, target) for source, letter, delta, target in edges),
        frozenset(alphabet),
    )


def _pda(states: str, accepts: str, edges, alphabet: Iterable[str]) -> Pda:
    return Pda(
        tuple(states.split()),
        states.split()[0],
        frozenset(accepts.split()),
        tuple(PdaTransition(*edge) for edge in edges),
        frozenset(alphabet),
    )


def z2_anbnan() -> CounterAutomaton:
    """a^n b^n a^n: the first counter matches a's against b's, the second b's against a's"""
    return _counter(
        2, "s0 s1 s2", "s0 s2",
        [
            ("s0", "a", (1, 0), "s0"),
            ("s0", "b", (-1, 1), "s1"),
            ("s1", "b", (-1, 1), "s1"),
            ("s1", "a", (0, -1), "s2"),
            ("s2", "a", (0, -1), "s2"),
        ],
        BINARY,
    )


def z2_ambmanbn() -> CounterAutomaton:
    return _counter(
        2, "q0 q1 q2 q3", "q0 q1 q3",
        [
            ("q0", "a", (1, 0), "q0"),
            ("q0", "b", (-1, 0), "q1"),
            ("q1", "b", (-1, 0), "q1"),
            ("q1", "a", (0, 1), "q2"),
            ("q2", "a", (0, 1), "q2"),
            ("q2", "b", (0, -1), "q3"),
            ("q3", "b", (0, -1), "q3"),
        ],
        BINARY,
    )


def pda_anbn() -> Pda:
    return _pda(
        "s0 s1 s2 s3", "s3",
        [
            ("s0", None, None, "$", "s1"),
            ("s1", "a", None, "x", "s1"),
            ("s1", "b", "x", None, "s2"),
            ("s2", "b", "x", None, "s2"),
            ("s1", None, "$", None, "s3"),
            ("s2", None, "$", None, "s3"),
        ],
        BINARY,
    )


def pda_ambmanbn() -> Pda:
    """two a^n b^n blocks, the bottom marker is checked between them"""
    return _pda(
        "s0 s1 s2 s3 s4 s5 s6", "s3 s6",
        [
            ("s0", None, None, "$", "s1"),
            ("s1", "a", None, "x", "s1"),
            ("s1", "b", "x", None, "s2"),
            ("s2", "b", "x", None, "s2"),
            ("s1", None, "$", "$", "s3"),
            ("s2", None, "$", "$", "s3"),
            ("s3", "a", None, "x", "s4"),
            ("s4", "a", None, "x", "s4"),
            ("s4", "b", "x", None, "s5"),
            ("s5", "b", "x", None, "s5"),
            ("s5", None, "$", None, "s6"),
        ],
        BINARY,
    )


def pda_ww_reverse() -> Pda:
    """
    push the first half, guess the middle, pop the second half against it
    """
    edges = [("s0", None, None, "$", "s1"), ("s1", None, None, None, "s2")]
    for symbol in TERNARY:
        edges.append(("s1", symbol, None, symbol, "s1"))
        edges.append(("s2", symbol, symbol, None, "s2"))
    edges.append(("s2", None, "$", None, "s3"))
    return _pda("s0 s1 s2 s3", "s3", edges, TERNARY)


def c1_anbn() -> CounterAutomaton:
    return _counter(
        1, "s0 s1", "s0 s1",
        [
            ("s0", "a", (1,), "s0"),
            ("s0", "b", (-1,), "s1"),
            ("s1", "b", (-1,), "s1"),
        ],
        BINARY,
    )


def c1_anbncm() -> CounterAutomaton:
    return _counter(
        1, "s0 s1 s2", "s0 s1 s2",
        [
            ("s0", "a", (1,), "s0"),
            ("s0", "b", (-1,), "s1"),
            ("s1", "b", (-1,), "s1"),
            ("s0", "c", (0,), "s2"),
            ("s1", "c", (0,), "s2"),
            ("s2", "c", (0,), "s2"),
        ],
        TERNARY,
    )


def c1_ambncn() -> CounterAutomaton:
    return _counter(
        1, "s0 s1 s2", "s0 s1 s2",
        [
            ("s0", "a", (0,), "s0"),
            ("s0", "b", (1,), "s1"),
            ("s1", "b", (1,), "s1"),
            ("s0", "c", (-1,), "s2"),
            ("s1", "c", (-1,), "s2"),
            ("s2", "c", (-1,), "s2"),
        ],
        TERNARY,
    )


def c1_epsilon() -> CounterAutomaton:
    return _counter(1, "s0", "s0", [], BINARY)


@lru_cache(maxsize=None)
def zoo() -> dict[str, ZooEntry]:
    entries = [
        ZooEntry("z2_anbnan", z2_anbnan(), BINARY, is_anbnan,
                 "a^n b^n a^n, two counters, not context-free"),
        ZooEntry("z2_ambmanbn", z2_ambmanbn(), BINARY, is_ambmanbn,
                 "a^m b^m a^n b^n, two counters"),
        ZooEntry("pda_anbn", pda_anbn(), BINARY, is_anbn, "a^n b^n, pushdown"),
        ZooEntry("pda_ambmanbn", pda_ambmanbn(), BINARY, is_ambmanbn,
                 "a^m b^m a^n b^n, pushdown"),
        ZooEntry("pda_ww_reverse", pda_ww_reverse(), TERNARY, is_ww_reverse,
                 "w w^R, pushdown, not counter"),
        ZooEntry("c1_anbn", c1_anbn(), BINARY, is_anbn, "a^n b^n, one counter"),
        ZooEntry("c1_anbncm", c1_anbncm(), TERNARY, is_anbncm, "a^n b^n c^m, one counter"),
        ZooEntry("c1_ambncn", c1_ambncn(), TERNARY, is_ambncn, "a^m b^n c^n, one counter"),
        ZooEntry("c1_epsilon", c1_epsilon(), BINARY, lambda word: word == "",
                 "only the empty word"),
    ]
    return {entry.name: entry for entry in entries}


def zoo_entry(name: str) -> ZooEntry:
    try:
        return zoo()[name]
    except KeyError:
        raise ValueError(f"Unknown machine {name!r}, expected one of {sorted(zoo())}") from None


class _MachineBuilder:
    """
    states and edges of one acceptor family; states are created on first use,
    so paths through the same named node share it like a trie
    """

    def __init__(self, start: str):
        self.start = start
        self.states: list[str] = []
        self._known: set[str] = set()
        self.transitions: list[Transition] = []
        self._edges: set[Transition] = set()
        self.accepts: set[str] = set()
        self.node(start)

    def node(self, name: str, accepting: bool = False) -> str:
        if name not in self._known:
            self._known.add(name)
            self.states.append(name)
        if accepting:
            self.accepts.add(name)
        return name

    def edge(self, source: str, symbol: str, target: str, *deltas: int):
        for delta in deltas or (0,):
            transition = Transition(source, symbol, (delta,), target)
            if transition not in self._edges:
                self._edges.add(transition)
                self.transitions.append(transition)

    def a_edges(self, source: str, target: str, *deltas: int):
        self.edge(source, Letter.A_POS.value, target, *deltas)
        self.edge(source, Letter.A_NEG.value, target, *deltas)

    def build(self) -> CounterAutomaton:
        return CounterAutomaton(
            1, tuple(self.states), self.start, frozenset(self.accepts),
            tuple(self.transitions), frozenset(GROUP_SYMBOLS),
        )


def _a_symbols(entry: int) -> str:
    return word_symbols((Letter.A_POS if entry > 0 else Letter.A_NEG,) * abs(entry))


def _n_long(tables: NfTables, family: Family) -> CounterAutomaton:
    """
    runs t^k R t^m with an N-run of l >= 3 letters t^-1; every t^-1 either
    cancels one outer t (-1) or not (0), so a zero counter means k + m <= l
    """
    t, big_t = Letter.T_POS.value, Letter.T_NEG.value
    builder = _MachineBuilder("start")
    root = "start"
    if family is Family.X:
        root = builder.node("lead")
        builder.edge("start", t, root, 1)
        builder.edge(root, t, root, 1)
    sparse_zero, sparse_one = builder.node("v0", True), builder.node("v1", True)
    single = builder.node("s1", True)
    trail = builder.node("trail", True)
    for pattern in sorted(tables.patterns(family)):
        node = root
        symbols = big_t.join(_a_symbols(entry) for entry in pattern)
        for index, symbol in enumerate(symbols):
            child = builder.node(f"{root}/{symbols[: index + 1]}")
            if symbol == big_t:
                builder.edge(node, symbol, child, -1, 0)
            else:
                builder.edge(node, symbol, child)
            node = child
        builder.edge(node, big_t, sparse_one if pattern[2] else sparse_zero, -1, 0)
    builder.a_edges(sparse_zero, single)
    builder.edge(sparse_zero, big_t, sparse_zero, -1, 0)
    builder.edge(sparse_one, big_t, sparse_zero, -1, 0)
    builder.edge(single, big_t, sparse_one, -1, 0)
    builder.edge(single, t, trail, 1)
    builder.edge(trail, t, trail, 1)
    return builder.build()


def _p_long(tables: NfTables, family: Family) -> CounterAutomaton:
    """
    runs t^-k R t^-m with a P-run of l >= 3 letters t; outer t^-1 count -1,
    run letters t count +1 or 0 except the last one, so a zero counter means
    k + m < l
    """
    t, big_t = Letter.T_POS.value, Letter.T_NEG.value
    builder = _MachineBuilder("p0")
    lead = builder.node("lead")
    builder.edge("p0", big_t, lead, -1)
    builder.edge(lead, big_t, lead, -1)
    zero, single, after_single = builder.node("q0"), builder.node("w1"), builder.node("q1")
    suffix_zero, suffix_one = builder.node("suffix0"), builder.node("suffix1")
    builder.a_edges("p0", single)
    builder.a_edges(lead, single)
    builder.a_edges(zero, single)
    for source, target in (
        ("p0", zero), ("p0", suffix_zero), (zero, zero), (zero, suffix_zero),
        (single, after_single), (single, suffix_one),
        (after_single, zero), (after_single, suffix_zero),
    ):
        builder.edge(source, t, target, 1, 0)
    trail = None
    if family is Family.PX:
        trail = builder.node("trail", True)
        builder.edge(trail, big_t, trail, -1)
    for root in (suffix_zero, suffix_one):
        for pattern in sorted(tables.patterns(family)):
            if root == suffix_one and pattern[0]:
                continue
            symbols = t.join(_a_symbols(entry) for entry in pattern)
            node = root
            seen_t = 0
            for index, symbol in enumerate(symbols):
                child = builder.node(f"{root}/{symbols[: index + 1]}")
                if symbol == t:
                    seen_t += 1
                    builder.edge(node, symbol, child, *((1, 0) if seen_t == 1 else (0,)))
                else:
                    builder.edge(node, symbol, child)
                node = child
            if trail is None:
                builder.node(node, True)
            else:
                builder.edge(node, big_t, trail, -1)
    return builder.build()


def _short_acceptor(tables: NfTables) -> CounterAutomaton:
    words = E_WORDS | tables.short_words() | tables.three_letter_words()
    return finite_acceptor((word_symbols(word) for word in words), GROUP_SYMBOLS, k=1)


@lru_cache(maxsize=None)
def build_nf_acceptor() -> CounterAutomaton:
    """
    one-counter machine for the normal form language: the finite set of
    normal forms with at most two letters t^+-1 in their run, united with one
    machine per run family for longer runs
    :return: machine with k = 1 over a, A, t, T
    """
    tables = load_tables()
    machine = _short_acceptor(tables)
    for part in (
        _n_long(tables, Family.X),
        _n_long(tables, Family.N),
        _p_long(tables, Family.P),
        _p_long(tables, Family.PX),
    ):
        machine = union(machine, part)
    logger.info(
        "normal form acceptor: %d states, %d transitions",
        len(machine.states), len(machine.transitions),
    )
    return machine
