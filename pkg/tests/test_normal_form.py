"""Non-regression and consistency tests for normal_form.

``normalize`` is exercised over a set of representative words; its structured
output is compared against a golden snapshot stored in
``golden_normal_forms.json``. The remaining tests check the normal form
language against breadth first search in the Cayley graph.

To update the golden file after an intentional behaviour change, run:

    python tests/generate_golden.py --write
"""

from itertools import product

import pytest

from cayley_oracle import bfs_ball
from group_core import LETTER_ORDER, GroupElement, eval_word, format_word, parse_word, word_key
from normal_form import (
    enumerate_nf,
    geodesic_length,
    is_normal_form,
    naf_digits,
    nf_of_element,
    nf_type,
    normalize,
)
from rewriting import WordType
from tests.snapshot_util import SNAPSHOT_WORDS, build_all_snapshots, changed_words, load_golden, snapshot_for_word

_GOLDEN = load_golden()


@pytest.mark.parametrize("word_str", SNAPSHOT_WORDS)
def test_normal_form_snapshot(word_str):
    assert word_str in _GOLDEN, (
        f"No golden snapshot for {word_str!r}. Run tests/generate_golden.py --write."
    )
    assert snapshot_for_word(word_str) == _GOLDEN[word_str]


def test_golden_file_is_current():
    assert changed_words(build_all_snapshots(), _GOLDEN) == []
    assert changed_words({"a": 1}, {"a": 2, "t": 3}) == ["a", "t"]


MEMBERSHIP_CASES = {
    "": True,
    "a^3": True,
    "a^-3": True,
    "a^4": False,
    "ta^2t^-1": True,
    "t^2a^2t^-2a": True,
    "t^2a^2t^-2a^-1": False,
    "tat^-1": False,
    "aa^-1": False,
    "t^-1at": True,
    "at": True,
    "tt^-1": False,
}


@pytest.mark.parametrize("text", list(MEMBERSHIP_CASES))
def test_is_normal_form(text):
    assert is_normal_form(parse_word(text)) is MEMBERSHIP_CASES[text]


def test_nf_type():
    assert nf_type(parse_word("ta^2t^-1")) is WordType.X
    assert nf_type(parse_word("t^-1at")) is WordType.NP_LE
    assert nf_type(parse_word("tat^-1")) is None


def test_naf_digits():
    assert naf_digits(0) == []
    assert naf_digits(7) == [-1, 0, 0, 1]
    assert naf_digits(-3) == [1, 0, -1]
    for value in range(-200, 201):
        digits = naf_digits(value)
        assert sum(digit << i for i, digit in enumerate(digits)) == value
        assert not any(left and right for left, right in zip(digits, digits[1:]))


def test_geodesic_length():
    assert geodesic_length(eval_word(parse_word("a^6"))) == 5
    assert geodesic_length(eval_word(parse_word("tat^-1"))) == 2


def test_normal_form_of_a_large_power():
    assert format_word(nf_of_element(GroupElement(1 << 40, 0, 0))) == "t^39a^2t^-39"


def test_enumeration_matches_membership():
    words = [
        word
        for length in range(5)
        for word in product(LETTER_ORDER, repeat=length)
        if is_normal_form(word)
    ]
    assert list(enumerate_nf(4)) == sorted(words, key=word_key)


def test_enumerated_words_are_their_own_normal_form():
    for word in enumerate_nf(6):
        assert nf_of_element(eval_word(word)) == word


def test_normal_forms_are_geodesics_in_the_ball():
    ball = bfs_ball(6)
    for g, distance in ball.distances.items():
        assert len(nf_of_element(g)) == distance


def test_normalize_is_idempotent():
    for text in ("a^11", "t^-3a^5t^2", "ta^-7t^-4at^2", "a^2ta^-1t^-2at"):
        word = normalize(parse_word(text))
        assert normalize(word) == word
        assert is_normal_form(word)
        assert eval_word(word) == eval_word(parse_word(text))
