"""Tests for the command line front end: output and exit codes of cli.run."""

import json

import pytest

import cli
from cli import run


@pytest.mark.parametrize(
    "argv,expected",
    [
        (["normalize", "a^4"], "ta^2t^-1\n"),
        (["normalize", "tt^-1"], "ε\n"),
        (["eval", "tat^-1"], '{"num":"2","dexp":0,"texp":0}\n'),
        (["reduce", "aa^-1tt^-1"], "ε\n"),
        (["length", "a^6"], "5\n"),
        (["spheres", "--radius", "2"], "0 1\n1 4\n2 12\n"),
        (["enumerate-nf", "--max-len", "1"], "ε\na\na^-1\nt\nt^-1\n"),
        (["thue-morse", "--i", "3"], "abcacbabcbac\n"),
        (["t-encode", "at^2a^2ta^3t^4at^-9at^2at^-1"], "(0,2,0,1,0,0,4,-9,2,-1)\n"),
    ],
)
def test_command_output(capsys, argv, expected):
    assert run(argv) == 0
    assert capsys.readouterr().out == expected


def test_nf_check(capsys):
    assert run(["nf-check", "ta^2t^-1"]) == 0
    assert capsys.readouterr().out == "accept\n"
    assert run(["nf-check", "t^2a^2t^-2a^-1"]) == 1
    assert capsys.readouterr().out == "reject\n"


@pytest.mark.parametrize(
    "argv",
    [
        ["normalize", "x"],
        ["t-encode", "aa^-1"],
        ["bogus"],
        ["zoo", "--emit", "nope"],
        ["ball", "--radius", "99"],
    ],
)
def test_usage_errors(capsys, argv):
    assert run(argv) == 2
    capsys.readouterr()


def test_ball(capsys, tmp_path):
    path = tmp_path / "ball.txt"
    assert run(["ball", "--radius", "2", "--out", str(path)]) == 0
    assert capsys.readouterr().out == "radius 2: 17 elements\n"
    assert path.read_text(encoding="utf-8").startswith("# radius 2\n")


def test_zoo_list(capsys):
    assert run(["zoo", "--list"]) == 0
    assert "pda_anbn: a^n b^n, pushdown" in capsys.readouterr().out.splitlines()


def test_zoo_emit_to_stdout(capsys):
    assert run(["zoo", "--emit", "c1_anbn"]) == 0
    assert json.loads(capsys.readouterr().out)["k"] == 1


def test_machine_files(capsys, tmp_path):
    counter_path = str(tmp_path / "anbn.json")
    pda_path = str(tmp_path / "anbn_pda.json")
    assert run(["zoo", "--emit", "c1_anbn", "--out", counter_path]) == 0
    assert run(["accept", "--machine", counter_path, "--word", "aabb"]) == 0
    assert run(["accept", "--machine", counter_path, "--word", "aab"]) == 1
    assert run(["counter-to-pda", "--in", counter_path, "--out", pda_path]) == 0
    assert run(["accept", "--machine", pda_path, "--word", "aabb"]) == 0
    assert run(["accept", "--machine", pda_path, "--word", "ε"]) == 0
    assert run(["counter-to-pda", "--in", pda_path, "--out", pda_path]) == 2
    capsys.readouterr()


def test_nf_acceptor_file(capsys, tmp_path):
    path = str(tmp_path / "nf.json")
    assert run(["build-nf-acceptor", "--out", path]) == 0
    assert run(["accept", "--machine", path, "--word", "ta^2t^-1"]) == 0
    assert run(["accept", "--machine", path, "--word", "tat^-1"]) == 1
    capsys.readouterr()


def test_swap_demo(capsys):
    assert run(["swap-demo", "--i", "2", "--s", "4", "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["geodesic_base"] is True
    assert report["variants_geodesic"] == []


def test_palindrome_demo(capsys):
    assert run(["palindrome-demo", "--i", "2"]) == 0
    assert "accepted: True" in capsys.readouterr().out.splitlines()


def test_verify(capsys):
    assert run(["verify", "--suite", "thue-morse"]) == 0
    assert capsys.readouterr().out.startswith("thue-morse: passed")
    assert run(["verify", "--suite", "t-encoding", "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["passed"] is True


def test_internal_errors_are_not_usage_errors(monkeypatch):
    def broken(word):
        raise AttributeError("broken normalizer")

    monkeypatch.setattr(cli, "normalize", broken)
    with pytest.raises(AttributeError):
        run(["normalize", "a"])
