"""Tests for experiments: Thue-Morse words, swaps, t-encodings and mesa words."""

import random

import pytest

from experiments import (
    TEncoding,
    build_reverse_v,
    has_square,
    mesa_word,
    palindrome_swap_demo,
    sheet_levels,
    swap_experiment,
    swap_variants,
    swap_witness,
    t_decode,
    t_encode,
    thue_morse,
    thue_morse_sheet,
)
from group_core import Letter, a_power, format_word, parse_word, t_exponent, t_power
from normal_form import is_normal_form, normalize
from rewriting import push_one_run


def test_thue_morse_words():
    assert thue_morse(0) == "a"
    assert thue_morse(1) == "abc"
    assert thue_morse(2) == "abcacb"
    assert thue_morse(3) == "abcacbabcbac"
    assert [len(thue_morse(i)) for i in range(5)] == [1, 3, 6, 12, 24]


def test_thue_morse_is_square_free():
    for i in range(8):
        assert not has_square(thue_morse(i))


@pytest.mark.parametrize("i", [-1, 21])
def test_thue_morse_index_bounds(i):
    with pytest.raises(ValueError):
        thue_morse(i)


def test_has_square():
    assert has_square("aa")
    assert has_square("xabab")
    assert not has_square("abcacb")
    assert not has_square("")
    assert has_square((1, 2, 1, 2))


def test_swap_variants():
    assert swap_variants("ab", 1) == {"ba"}
    assert swap_variants("aa", 1) == {"aa"}
    assert swap_variants("abc", 1) == {"bac", "bca", "cab", "acb"}
    assert swap_variants((1, 2), 1) == {(2, 1)}
    assert all(variant.endswith("xyz") for variant in swap_variants("abcxyz", 1))
    with pytest.raises(ValueError):
        swap_variants("ab", 0)


def test_swap_witness():
    assert swap_witness(lambda variant: variant == "ba", "ab", 1) == "ba"
    assert swap_witness(lambda variant: False, "abc", 1) is None


def test_t_encode_example():
    word = parse_word("at^2a^2ta^3t^4at^-9at^2at^-1")
    encoding = t_encode(word)
    assert encoding.values == (0, 2, 0, 1, 0, 0, 4, -9, 2, -1)
    assert str(encoding) == "0201004(-9)2(-1)"
    assert t_decode(encoding) == word


def test_t_encode_single_a():
    assert t_encode((Letter.A_POS,)).values == (0, 0)
    assert t_encode(()).values == (0,)


@pytest.mark.parametrize("text", ["a^-1", "ta^-1", "tt^-1a"])
def test_t_encode_rejects(text):
    with pytest.raises(ValueError):
        t_encode(parse_word(text))


def test_t_encoding_survives_decoding():
    rng = random.Random(3)
    for _ in range(200):
        values = tuple(rng.randint(-5, 5) for _ in range(rng.randint(1, 6)))
        assert t_encode(t_decode(TEncoding(values))).values == values


def test_empty_encoding_rejected():
    with pytest.raises(ValueError):
        TEncoding(())


def test_reverse_v_of_thue_morse_three():
    v = build_reverse_v(thue_morse_sheet(3, 10), 10)
    assert t_encode(v).values == (
        -10, -10, -30, -20, -10, -20, -30, -20, -10, -30, -10, -20, -20,
    )


def test_reverse_v_of_single_a():
    assert build_reverse_v(parse_word("t^4at^4"), 4) == t_power(-8)


def test_reverse_v_inverts_the_t_exponent():
    for i, s in ((1, 3), (2, 4), (3, 5)):
        u = thue_morse_sheet(i, s)
        assert t_exponent(build_reverse_v(u, s)) == -t_exponent(u)


@pytest.mark.parametrize("text", ["at^4", "t^3at^4", "t^4a^2t^4"])
def test_reverse_v_rejects_other_shapes(text):
    with pytest.raises(ValueError):
        build_reverse_v(parse_word(text), 4)


def test_mesa_word_needs_an_a():
    with pytest.raises(ValueError):
        mesa_word(t_power(8), 4)


def test_mesa_word_is_geodesic():
    s = 4
    w = mesa_word(thue_morse_sheet(2, s), s)
    c = 12
    expected = t_power(s * c) + a_power(2) + t_power(-s)
    for _ in range(c - 1):
        expected += (Letter.A_POS,) + t_power(-s)
    pushed = push_one_run(w)
    assert pushed == expected
    assert is_normal_form(pushed)
    assert normalize(w) == pushed
    assert len(w) == len(pushed)


def test_mesa_sheet_levels():
    s = 4
    levels = sheet_levels(normalize(mesa_word(thue_morse_sheet(2, s), s)))
    assert levels == {**{height: 1 for height in range(4, 48, 4)}, 48: 2}


def test_swap_experiment():
    report = swap_experiment(2, 4, 3)
    assert report.geodesic_base
    assert report.window == 6
    assert report.word_length == len(mesa_word(thue_morse_sheet(2, 4), 4))
    assert report.variants_differing > 0
    assert report.variants_total >= report.variants_differing
    assert report.variants_geodesic == []
    assert report.to_json()["levels"][-1] == [48, 2]


def test_palindrome_swap_demo():
    report = palindrome_swap_demo(2)
    assert report.word == "abcacbbcacba"
    assert report.accepted
    assert report.variants_differing > 0
    assert report.variants_accepted == []
    assert palindrome_swap_demo(0).variants_total == 0


def test_mesa_word_text():
    assert format_word(mesa_word(parse_word("t^3at^3"), 3)) == "t^3at^3a^2t^-6"
