"""Small-bound runs of the cross-check suites behind ``cli.py verify``."""

import pytest

from group_core import free_reduce
from verification import (
    SUITES,
    SuiteResult,
    all_strings,
    all_words,
    closure_suite,
    counter_to_pda_suite,
    growth_suite,
    nf_acceptor_suite,
    nf_trichotomy_suite,
    reduced_words,
    relator_suite,
    rewriting_suite,
    run_suites,
    t_encoding_suite,
    thue_morse_suite,
    zoo_suite,
)


def _assert_passed(result: SuiteResult):
    assert result.passed, result.failures
    assert result.checked > 0


def test_relator_suite():
    _assert_passed(relator_suite())


def test_nf_trichotomy_suite():
    _assert_passed(nf_trichotomy_suite(6))


def test_nf_acceptor_suite():
    _assert_passed(nf_acceptor_suite(max_len=5))


def test_counter_to_pda_suite():
    result = counter_to_pda_suite(max_len=3, zoo_len=6)
    _assert_passed(result)
    assert result.checked > 2 * sum(3**n for n in range(7))


def test_rewriting_suite():
    _assert_passed(rewriting_suite(max_len=6, max_entries=4))


def test_reduced_words():
    words = list(reduced_words(2))
    assert len(words) == 1 + 4 + 12
    assert all(free_reduce(word) == word for word in words)


def test_zoo_suite():
    _assert_passed(zoo_suite(max_len=6))


def test_closure_suite():
    _assert_passed(closure_suite(trials=10))


def test_word_suites():
    _assert_passed(thue_morse_suite())
    _assert_passed(t_encoding_suite(trials=200))


def test_growth_suite():
    _assert_passed(growth_suite(6))


def test_failures_are_capped():
    result = SuiteResult("capped")
    for index in range(50):
        result.fail(f"failure {index}")
    assert not result.passed
    assert len(result.failures) == 20
    assert result.to_json() == {
        "suite": "capped",
        "passed": False,
        "checked": 0,
        "failures": [f"failure {index}" for index in range(20)],
    }


def test_word_generators():
    assert sum(1 for _ in all_words(2)) == 21
    assert list(all_strings("ba", 1)) == ["", "a", "b"]


def test_run_suites_by_name():
    (result,) = run_suites("thue-morse")
    assert result.name == "thue-morse"
    assert result.passed
    assert "all" not in SUITES


def test_run_suites_unknown_name():
    with pytest.raises(ValueError):
        run_suites("no-such-suite")
