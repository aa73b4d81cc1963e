"""Tests for rewriting: word types, run encoding and the run rewrites."""

from itertools import product

import pytest

from group_core import eval_word, format_word, parse_word
from rewriting import (
    RunDirection,
    RunForm,
    WordType,
    apply_no11,
    apply_no_minus11,
    classify_type,
    decode_run,
    encode_run,
    format_entries,
    levels,
    push_one_run,
    run_violations,
)
from verification import reduced_words

N, P = RunDirection.N, RunDirection.P

TYPE_CASES = {
    "": WordType.E,
    "a^3": WordType.E,
    "ta^2t^-1": WordType.X,
    "at^-1": WordType.N,
    "ta": WordType.P,
    "t^2a^2t^-1": WordType.PX,
    "ta^2t^-2": WordType.XN,
    "t^-1at": WordType.NP_LE,
    "t^-1at^2": WordType.NP_GT,
    "tat^-2at": WordType.XNP,
    "t^-1at^3at^-1": WordType.NPX,
    "tat^-1at": None,
    "t^-1at^2at^-1": None,
}


@pytest.mark.parametrize("text", list(TYPE_CASES))
def test_classify_type(text):
    assert classify_type(parse_word(text)) is TYPE_CASES[text]


def test_encode_run_example():
    word = parse_word("t^2a^2t^-1at^-2")
    run = encode_run(word)
    assert run == RunForm(2, N, (2, 1, 0, 0), 0)
    assert decode_run(run) == word


def test_encode_run_without_inner_t():
    run = encode_run(parse_word("t^-1at"))
    assert run == RunForm(0, N, (0, 1), 1)
    assert format_word(decode_run(run)) == "t^-1at"


def test_encode_run_p_direction():
    run = encode_run(parse_word("t^-1ata^-1t"))
    assert run.direction is P
    assert run.entries == (1, -1, 0)
    assert eval_word(decode_run(run)) == eval_word(parse_word("t^-1ata^-1t"))


def test_encode_run_rejects_two_runs():
    with pytest.raises(ValueError):
        encode_run(parse_word("atat^-1a"))


def test_run_form_json():
    run = RunForm(1, N, (2, 0, -1), 0)
    assert run.to_json() == {"pre_t": 1, "dir": "N", "entries": [2, 0, -1], "post_t": 0}
    assert RunForm.from_json(run.to_json()) == run
    with pytest.raises(ValueError):
        RunForm.from_json({"dir": "N"})


def test_format_entries():
    assert format_entries((2, 0, -1)) == "20(-1)"


def test_no11_on_n_run():
    run = RunForm(0, N, (0, 0, 1, 1), 0)
    rewritten = apply_no11(run)
    assert rewritten.entries == (0, 1, 0, -1)
    assert eval_word(decode_run(rewritten)) == eval_word(decode_run(run))


def test_no11_leaves_privileged_pair():
    assert apply_no11(RunForm(0, N, (1, 1, 0), 0)).entries == (1, 1, 0)
    assert apply_no11(RunForm(0, P, (0, 1, 1), 0)).entries == (0, 1, 1)


def test_no11_on_p_run():
    run = RunForm(0, P, (-1, -1, 0, 2), 0)
    rewritten = apply_no11(run)
    assert rewritten.entries == (1, 0, -1, 2)
    assert eval_word(decode_run(rewritten)) == eval_word(decode_run(run))


def test_no_minus11_shortens():
    for run, expected in (
        (RunForm(0, N, (0, 1, -1), 0), (0, 0, 1)),
        (RunForm(0, P, (-1, 1, 0), 0), (1, 0, 0)),
    ):
        rewritten = apply_no_minus11(run)
        assert rewritten.entries == expected
        assert eval_word(decode_run(rewritten)) == eval_word(decode_run(run))
        assert len(decode_run(rewritten)) == len(decode_run(run)) - 1


def test_push_one_run_keeps_element_and_length():
    for text in ("atat^-1", "tat^-2at", "t^-1at^3at^-1", "a^2ta^-1t^-2at"):
        word = parse_word(text)
        pushed = push_one_run(word)
        assert eval_word(pushed) == eval_word(word)
        assert len(pushed) == len(word)
        encode_run(pushed)
    assert format_word(push_one_run(parse_word("atat^-1"))) == "tat^-1a"


def test_push_one_run_rejects_untyped_words():
    with pytest.raises(ValueError):
        push_one_run(parse_word("tat^-1at"))


def test_levels():
    assert levels(parse_word("ta^2t^-1a^-1")) == [(1, 1), (1, 1), (0, -1)]


def test_run_violations():
    assert run_violations(RunForm(2, N, (2, 0, -1), 0), WordType.X) == ["prefix 20(-1) forbidden"]
    assert run_violations(RunForm(1, N, (2, 0, 0, 1), 0), WordType.X) == []
    assert "1(-1) adjacency" in run_violations(RunForm(0, N, (1, -1), 0), WordType.N)
    assert "entry 6 at position 0 has |i| >= 6" in run_violations(RunForm(0, N, (6, 0), 0), WordType.N)
    off_end = run_violations(RunForm(0, N, (0, 2, 0), 0), WordType.N)
    assert "entry 2 at position 1 off the privileged end" in off_end
    assert "P-run in a word of type X" in run_violations(RunForm(0, P, (0, 0, 1), 0), WordType.X)


@pytest.mark.parametrize("text,expected", [("atat^-1a^-1", "tat^-1"), ("ata^-1t^-1a^-1", "ta^-1t^-1")])
def test_push_one_run_merges_letters_on_one_level(text, expected):
    word = parse_word(text)
    pushed = push_one_run(word)
    assert format_word(pushed) == expected
    assert eval_word(pushed) == eval_word(word)
    assert decode_run(encode_run(pushed)) == pushed


def _mixes_signs(word):
    signs = {}
    for height, sign in levels(word):
        signs.setdefault(height, set()).add(sign)
    return any(len(found) == 2 for found in signs.values())


def test_one_run_words_survive_encoding():
    checked = 0
    for word in reduced_words(7):
        try:
            run = encode_run(word)
        except ValueError:
            continue
        checked += 1
        assert decode_run(run) == word, format_word(word)
    assert checked > 100


def test_push_one_run_on_all_typed_words():
    for word in reduced_words(7):
        if classify_type(word) is None:
            continue
        pushed = push_one_run(word)
        assert eval_word(pushed) == eval_word(word), format_word(word)
        if _mixes_signs(word):
            assert len(pushed) < len(word), format_word(word)
        else:
            assert len(pushed) == len(word), format_word(word)
        assert decode_run(encode_run(pushed)) == pushed, format_word(word)


def test_no11_on_all_small_runs():
    for count in range(1, 6):
        for entries in product(range(-3, 4), repeat=count):
            if any(entries[i] * entries[i + 1] == -1 for i in range(count - 1)):
                continue
            for direction in (N, P):
                run = RunForm(0, direction, entries, 0)
                before, after = decode_run(run), decode_run(apply_no11(run))
                assert eval_word(after) == eval_word(before), (direction, entries)
                assert len(after) <= len(before), (direction, entries)
