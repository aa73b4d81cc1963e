"""
Blind counter automata, pushdown automata and the constructions between them.

A CounterAutomaton with k counters (a Z^k-automaton) accepts w when some path
from the start state spells w, ends in an accept state and has total counter
change zero; counters are never tested along the way. k = 0 is a plain NFA.
A Pda starts with an empty stack and accepts by final state.

Symbols are one character strings (the letters "a", "A", "t", "T" for words
of BS(1,2), anything else for the zoo languages); None labels an epsilon move.
"""
import json
import logging
import os
import random
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Iterable, Optional, Sequence, Union

from group_core import Letter, word_symbols

logger = logging.getLogger(__name__)

PDA_MAX_CONFIGS = int(os.environ.get("BS12_PDA_MAX_CONFIGS", "200000"))

STACK_ONE = "1"
BOTTOM_POS = "$+"
BOTTOM_NEG = "$-"


@dataclass(frozen=True)
class Transition:
    source: str
    letter: Optional[str]
    delta: tuple[int, ...]
    target: str


@dataclass(frozen=True)
class CounterAutomaton:
    k: int
    states: tuple[str, ...]
    start: str
    accepts: frozenset[str]
    transitions: tuple[Transition, ...]
    alphabet: frozenset[str] = field(default=frozenset())

    def __post_init__(self):
        known = set(self.states)
        if self.start not in known or not self.accepts <= known:
            raise ValueError("start and accept states must be states of the machine")
        for transition in self.transitions:
            if transition.source not in known or transition.target not in known:
                raise ValueError(f"transition {transition} leaves the state set")
            if len(transition.delta) != self.k:
                raise ValueError(f"transition {transition} needs a delta of length {self.k}")
        if not self.alphabet:
            letters = {t.letter for t in self.transitions if t.letter is not None}
            object.__setattr__(self, "alphabet", frozenset(letters))

    @cached_property
    def outgoing(self) -> dict[str, tuple[Transition, ...]]:
        table: dict[str, list[Transition]] = {state: [] for state in self.states}
        for transition in self.transitions:
            table[transition.source].append(transition)
        return {state: tuple(edges) for state, edges in table.items()}

    @cached_property
    def epsilon_count(self) -> int:
        return sum(1 for t in self.transitions if t.letter is None)

    @cached_property
    def max_delta(self) -> int:
        return max((abs(d) for t in self.transitions for d in t.delta), default=0)

    def counter_bound(self, length: int) -> int:
        """largest counter value a path reading length symbols can reach with acyclic epsilon moves"""
        return (length + 1) * (self.epsilon_count + 1) * max(1, self.max_delta)


@dataclass(frozen=True)
class PdaTransition:
    source: str
    letter: Optional[str]
    pop: Optional[str]
    push: Optional[str]
    target: str


@dataclass(frozen=True)
class Pda:
    states: tuple[str, ...]
    start: str
    accepts: frozenset[str]
    transitions: tuple[PdaTransition, ...]
    alphabet: frozenset[str] = field(default=frozenset())

    def __post_init__(self):
        known = set(self.states)
        if self.start not in known or not self.accepts <= known:
            raise ValueError("start and accept states must be states of the machine")
        for transition in self.transitions:
            if transition.source not in known or transition.target not in known:
                raise ValueError(f"transition {transition} leaves the state set")
        if not self.alphabet:
            letters = {t.letter for t in self.transitions if t.letter is not None}
            object.__setattr__(self, "alphabet", frozenset(letters))

    @cached_property
    def outgoing(self) -> dict[str, tuple[PdaTransition, ...]]:
        table: dict[str, list[PdaTransition]] = {state: [] for state in self.states}
        for transition in self.transitions:
            table[transition.source].append(transition)
        return {state: tuple(edges) for state, edges in table.items()}

    @cached_property
    def stack_alphabet(self) -> frozenset[str]:
        symbols = set()
        for transition in self.transitions:
            symbols.update(s for s in (transition.pop, transition.push) if s is not None)
        return frozenset(symbols)

    def height_bound(self, length: int) -> int:
        epsilon_pushes = sum(
            1 for t in self.transitions if t.letter is None and t.push is not None
        )
        return (length + 1) * (epsilon_pushes + 1)


Machine = Union[CounterAutomaton, Pda]
CounterConfig = tuple[str, tuple[int, ...]]
PdaConfig = tuple[str, tuple[str, ...]]


def as_symbols(word: Union[str, Sequence[Letter]]) -> str:
    """a symbol string, or a word of BS(1,2) written with one symbol per letter"""
    if isinstance(word, str):
        return word
    return word_symbols(word)


def _check_alphabet(machine: Machine, symbols: str):
    stray = set(symbols) - machine.alphabet
    if stray:
        raise ValueError(f"symbols {sorted(stray)} are not in the machine alphabet")


def _counter_closure(m: CounterAutomaton, configs: Iterable[CounterConfig], bound: int) -> frozenset:
    seen = set(configs)
    pending = list(seen)
    while pending:
        state, counters = pending.pop()
        for transition in m.outgoing[state]:
            if transition.letter is not None:
                continue
            moved = tuple(c + d for c, d in zip(counters, transition.delta))
            config = (transition.target, moved)
            if config not in seen and all(abs(c) <= bound for c in moved):
                seen.add(config)
                pending.append(config)
    return frozenset(seen)


def _counter_step(m: CounterAutomaton, configs: frozenset, symbol: str, bound: int) -> frozenset:
    moved = set()
    for state, counters in configs:
        for transition in m.outgoing[state]:
            if transition.letter == symbol:
                counters_after = tuple(c + d for c, d in zip(counters, transition.delta))
                if all(abs(c) <= bound for c in counters_after):
                    moved.add((transition.target, counters_after))
    return _counter_closure(m, moved, bound)


def _counter_accepting(m: CounterAutomaton, configs: frozenset) -> bool:
    return any(state in m.accepts and not any(counters) for state, counters in configs)


def accept_counter(m: CounterAutomaton, w: Union[str, Sequence[Letter]]) -> bool:
    """
    run a blind counter automaton on a word
    :param m: machine
    :param w: symbol string or word
    :return: True if some path spells w, ends accepting and nets every counter to zero
    """
    symbols = as_symbols(w)
    _check_alphabet(m, symbols)
    bound = m.counter_bound(len(symbols))
    configs = _counter_closure(m, [(m.start, (0,) * m.k)], bound)
    for symbol in symbols:
        configs = _counter_step(m, configs, symbol, bound)
        if not configs:
            return False
    return _counter_accepting(m, configs)


def language_upto(m: CounterAutomaton, alphabet: Iterable[str], n: int) -> frozenset[str]:
    """
    every accepted symbol string of length at most n, found by one walk over the
    prefix tree that abandons prefixes no path can read
    """
    alphabet = sorted(set(alphabet))
    _check_alphabet(m, "".join(alphabet))
    bound = m.counter_bound(n)
    accepted = set()

    def walk(prefix: str, configs: frozenset):
        if _counter_accepting(m, configs):
            accepted.add(prefix)
        if len(prefix) == n:
            return
        for symbol in alphabet:
            following = _counter_step(m, configs, symbol, bound)
            if following:
                walk(prefix + symbol, following)

    walk("", _counter_closure(m, [(m.start, (0,) * m.k)], bound))
    return frozenset(accepted)


def _pda_move(config: PdaConfig, transition: PdaTransition, height: int) -> Optional[PdaConfig]:
    stack = config[1]
    if transition.pop is not None:
        if not stack or stack[-1] != transition.pop:
            return None
        stack = stack[:-1]
    if transition.push is not None:
        if len(stack) >= height:
            return None
        stack = stack + (transition.push,)
    return transition.target, stack


def _pda_closure(p: Pda, configs: Iterable[PdaConfig], height: int) -> frozenset:
    seen = set(configs)
    pending = list(seen)
    while pending:
        config = pending.pop()
        for transition in p.outgoing[config[0]]:
            if transition.letter is not None:
                continue
            moved = _pda_move(config, transition, height)
            if moved is None or moved in seen:
                continue
            seen.add(moved)
            if len(seen) > PDA_MAX_CONFIGS:
                raise RuntimeError(f"more than {PDA_MAX_CONFIGS} pushdown configurations explored")
            pending.append(moved)
    return frozenset(seen)


def _pda_step(p: Pda, configs: frozenset, symbol: str, height: int) -> frozenset:
    moved = set()
    for config in configs:
        for transition in p.outgoing[config[0]]:
            if transition.letter == symbol:
                following = _pda_move(config, transition, height)
                if following is not None:
                    moved.add(following)
    return _pda_closure(p, moved, height)


def _pda_accepting(p: Pda, configs: frozenset) -> bool:
    return any(state in p.accepts for state, _ in configs)


def accept_pda(p: Pda, w: Union[str, Sequence[Letter]]) -> bool:
    """
    run a pushdown automaton on a word, by final state from an empty stack.
    Configurations are explored breadth first per input position with the
    stack height capped by (|w| + 1) * (epsilon pushes + 1).
    :param p: machine
    :param w: symbol string or word
    :return: True if some computation reads w and stops in an accept state
    """
    symbols = as_symbols(w)
    _check_alphabet(p, symbols)
    height = p.height_bound(len(symbols))
    configs = _pda_closure(p, [(p.start, ())], height)
    for symbol in symbols:
        configs = _pda_step(p, configs, symbol, height)
        if not configs:
            return False
    return _pda_accepting(p, configs)


def pda_language_upto(p: Pda, alphabet: Iterable[str], n: int) -> frozenset[str]:
    alphabet = sorted(set(alphabet))
    _check_alphabet(p, "".join(alphabet))
    height = p.height_bound(n)
    accepted = set()

    def walk(prefix: str, configs: frozenset):
        if _pda_accepting(p, configs):
            accepted.add(prefix)
        if len(prefix) == n:
            return
        for symbol in alphabet:
            following = _pda_step(p, configs, symbol, height)
            if following:
                walk(prefix + symbol, following)

    walk("", _pda_closure(p, [(p.start, ())], height))
    return frozenset(accepted)


def accepts(machine: Machine, w: Union[str, Sequence[Letter]]) -> bool:
    if isinstance(machine, Pda):
        return accept_pda(machine, w)
    return accept_counter(machine, w)


def machine_language(machine: Machine, alphabet: Iterable[str], n: int) -> frozenset[str]:
    if isinstance(machine, Pda):
        return pda_language_upto(machine, alphabet, n)
    return language_upto(machine, alphabet, n)


def normalize_deltas(m: CounterAutomaton) -> CounterAutomaton:
    """
    split every transition changing a counter by more than one into a chain of
    unit steps; the first step reads the letter, the others are epsilon moves
    through new states
    """
    states = list(m.states)
    transitions = []
    for index, transition in enumerate(m.transitions):
        size = max((abs(d) for d in transition.delta), default=0)
        if size <= 1:
            transitions.append(transition)
            continue
        chain = [transition.source]
        for step in range(1, size):
            chain.append(f"{transition.source}>{transition.target}#{index}.{step}")
        chain.append(transition.target)
        states.extend(chain[1:-1])
        for step in range(size):
            delta = tuple(
                (1 if d > 0 else -1) if step < abs(d) else 0 for d in transition.delta
            )
            letter = transition.letter if step == 0 else None
            transitions.append(Transition(chain[step], letter, delta, chain[step + 1]))
    return CounterAutomaton(
        m.k, tuple(states), m.start, m.accepts, tuple(transitions), m.alphabet
    )


def counter_to_pda(m: CounterAutomaton) -> Pda:
    """
    compile a one-counter machine into a pushdown automaton. The stack holds a
    bottom marker ($+ for a non negative counter, $- for a non positive one)
    under |counter| copies of 1; every state q has a copy +q and -q, epsilon
    moves swap the marker when the counter is zero, and the single accept
    state is reached by popping the marker.
    :param m: machine with k = 1
    :return: pushdown automaton with the same language
    """
    if m.k != 1:
        raise ValueError(f"only one-counter machines compile to a pushdown automaton, k = {m.k}")
    m = normalize_deltas(m)
    start, accept = "start", "accept"
    states = [start, accept]
    for state in m.states:
        states.extend((f"+{state}", f"-{state}"))
    transitions = [PdaTransition(start, None, None, BOTTOM_POS, f"+{m.start}")]
    for state in m.states:
        transitions.append(PdaTransition(f"+{state}", None, BOTTOM_POS, BOTTOM_NEG, f"-{state}"))
        transitions.append(PdaTransition(f"-{state}", None, BOTTOM_NEG, BOTTOM_POS, f"+{state}"))
    for transition in m.transitions:
        (delta,) = transition.delta
        for side in "+-":
            pop = push = None
            if delta and (delta > 0) == (side == "+"):
                push = STACK_ONE
            elif delta:
                pop = STACK_ONE
            transitions.append(
                PdaTransition(
                    f"{side}{transition.source}", transition.letter, pop, push,
                    f"{side}{transition.target}",
                )
            )
    for state in sorted(m.accepts):
        transitions.append(PdaTransition(f"+{state}", None, BOTTOM_POS, None, accept))
        transitions.append(PdaTransition(f"-{state}", None, BOTTOM_NEG, None, accept))
    return Pda(tuple(states), start, frozenset({accept}), tuple(transitions), m.alphabet)


def _relabel(m: CounterAutomaton, prefix: str, k: int) -> list[Transition]:
    padding = (0,) * (k - m.k)
    return [
        Transition(prefix + t.source, t.letter, t.delta + padding, prefix + t.target)
        for t in m.transitions
    ]


def union(m1: CounterAutomaton, m2: CounterAutomaton) -> CounterAutomaton:
    """
    new start state with epsilon moves to both machines; the machine with
    fewer counters is padded with zero components
    """
    k = max(m1.k, m2.k)
    start = "start"
    zero = (0,) * k
    states = (start,) + tuple(f"1:{s}" for s in m1.states) + tuple(f"2:{s}" for s in m2.states)
    transitions = [
        Transition(start, None, zero, f"1:{m1.start}"),
        Transition(start, None, zero, f"2:{m2.start}"),
        *_relabel(m1, "1:", k),
        *_relabel(m2, "2:", k),
    ]
    accepts = frozenset(f"1:{s}" for s in m1.accepts) | frozenset(f"2:{s}" for s in m2.accepts)
    return CounterAutomaton(k, states, start, accepts, tuple(transitions), m1.alphabet | m2.alphabet)


def intersect_regular(m: CounterAutomaton, n: CounterAutomaton) -> CounterAutomaton:
    """
    product with a finite automaton, restricted to pairs reachable from the
    pair of start states
    :param m: counter machine
    :param n: machine without counters
    :return: machine for L(m) & L(n)
    """
    if n.k != 0:
        raise ValueError("the second operand of intersect_regular must have no counters")
    zero = (0,) * m.k

    def name(pair):
        return f"({pair[0]},{pair[1]})"

    start = (m.start, n.start)
    seen = {start}
    order = [start]
    transitions = []
    index = 0
    while index < len(order):
        s, t = order[index]
        index += 1
        moves = []
        for left in m.outgoing[s]:
            if left.letter is None:
                moves.append((left.delta, (left.target, t), None))
                continue
            for right in n.outgoing[t]:
                if right.letter == left.letter:
                    moves.append((left.delta, (left.target, right.target), left.letter))
        for right in n.outgoing[t]:
            if right.letter is None:
                moves.append((zero, (s, right.target), None))
        for delta, pair, letter in moves:
            if pair not in seen:
                seen.add(pair)
                order.append(pair)
            transitions.append(Transition(name((s, t)), letter, delta, name(pair)))
    accepts = frozenset(name(p) for p in order if p[0] in m.accepts and p[1] in n.accepts)
    return CounterAutomaton(
        m.k, tuple(name(p) for p in order), name(start), accepts, tuple(transitions),
        m.alphabet | n.alphabet,
    )


class ConcatOrder(Enum):
    CL = "CL"  # counter language, then regular language
    LC = "LC"  # regular language, then counter language


def concat(m: CounterAutomaton, n: CounterAutomaton, order: ConcatOrder = ConcatOrder.CL) -> CounterAutomaton:
    """
    concatenation of a counter language with a regular one
    :param m: one operand
    :param n: the other operand, at most one of them has counters
    :param order: CL puts the counter machine's words first, LC puts them last
    :return: machine for the concatenation
    """
    if m.k and n.k:
        raise ValueError("concat needs one operand without counters")
    counter, regular = (n, m) if n.k else (m, n)
    first, second = (counter, regular) if order is ConcatOrder.CL else (regular, counter)
    k = counter.k
    states = tuple(f"1:{s}" for s in first.states) + tuple(f"2:{s}" for s in second.states)
    transitions = _relabel(first, "1:", k) + _relabel(second, "2:", k)
    transitions.extend(
        Transition(f"1:{s}", None, (0,) * k, f"2:{second.start}") for s in sorted(first.accepts)
    )
    return CounterAutomaton(
        k, states, f"1:{first.start}", frozenset(f"2:{s}" for s in second.accepts),
        tuple(transitions), m.alphabet | n.alphabet,
    )


def finite_acceptor(words: Iterable[str], alphabet: Iterable[str] = (), k: int = 0) -> CounterAutomaton:
    """
    trie accepting exactly a finite set of symbol strings, with k idle counters
    """
    zero = (0,) * k
    states = ["0"]
    children: dict[tuple[str, str], str] = {}
    transitions = []
    accepts = set()
    for word in sorted(set(words)):
        node = "0"
        for symbol in word:
            child = children.get((node, symbol))
            if child is None:
                child = str(len(states))
                states.append(child)
                children[(node, symbol)] = child
                transitions.append(Transition(node, symbol, zero, child))
            node = child
        accepts.add(node)
    return CounterAutomaton(
        k, tuple(states), "0", frozenset(accepts), tuple(transitions), frozenset(alphabet)
    )


def random_machine(
    rng: random.Random, alphabet: Sequence[str], k: int, n_states: int = 4, n_edges: int = 7
) -> CounterAutomaton:
    """
    small random machine for closure checks: letter moves change counters by
    -1, 0 or 1, epsilon moves leave them alone
    """
    states = tuple(f"q{i}" for i in range(n_states))
    letters = list(alphabet) + [None]
    transitions = []
    for _ in range(n_edges):
        letter = rng.choice(letters)
        delta = tuple(rng.choice((-1, 0, 1)) for _ in range(k))
        if letter is None:
            delta = (0,) * k
        transitions.append(Transition(rng.choice(states), letter, delta, rng.choice(states)))
    accepts = frozenset(s for s in states if rng.random() < 0.4) or frozenset({states[-1]})
    return CounterAutomaton(k, states, states[0], accepts, tuple(transitions), frozenset(alphabet))


def machine_to_json(machine: Machine) -> dict:
    data = {
        "states": list(machine.states),
        "start": machine.start,
        "accepts": sorted(machine.accepts),
        "alphabet": sorted(machine.alphabet),
    }
    if isinstance(machine, Pda):
        data["transitions"] = [
            {"from": t.source, "letter": t.letter, "pop": t.pop, "push": t.push, "to": t.target}
            for t in machine.transitions
        ]
    else:
        data["k"] = machine.k
        data["transitions"] = [
            {"from": t.source, "letter": t.letter, "delta": list(t.delta), "to": t.target}
            for t in machine.transitions
        ]
    return data


def machine_from_json(data: dict) -> Machine:
    """
    read a machine file body; files with a "k" field describe counter
    machines, the others pushdown automata
    """
    try:
        states = tuple(str(s) for s in data["states"])
        start = str(data["start"])
        accept_states = frozenset(str(s) for s in data["accepts"])
        alphabet = frozenset(str(s) for s in data.get("alphabet", ()))
        if "k" in data:
            transitions = tuple(
                Transition(t["from"], t["letter"], tuple(int(d) for d in t["delta"]), t["to"])
                for t in data["transitions"]
            )
            return CounterAutomaton(
                int(data["k"]), states, start, accept_states, transitions, alphabet
            )
        transitions = tuple(
            PdaTransition(t["from"], t["letter"], t.get("pop"), t.get("push"), t["to"])
            for t in data["transitions"]
        )
        return Pda(states, start, accept_states, transitions, alphabet)
    except KeyError as missing:
        raise ValueError(f"Missing machine field {missing}") from None
    except (TypeError, ValueError) as error:
        raise ValueError(f"Malformed machine file: {error}") from None


def load_machine(path: str) -> Machine:
    with open(path, encoding="utf-8") as machine_file:
        try:
            data = json.load(machine_file)
        except json.JSONDecodeError as error:
            raise ValueError(f"{path} is not a JSON machine file: {error}") from None
    return machine_from_json(data)


def dump_machine(machine: Machine, path: str):
    with open(path, "w", encoding="utf-8") as machine_file:
        json.dump(machine_to_json(machine), machine_file, indent=2, ensure_ascii=False)
        machine_file.write("\n")
    logger.info("wrote machine with %d states to %s", len(machine.states), path)
