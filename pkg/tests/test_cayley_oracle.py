"""Tests for cayley_oracle: balls, spheres, geodesics and ball files."""

import pytest

from cayley_oracle import (
    all_geodesics,
    bfs_ball,
    dump_ball,
    is_geodesic,
    load_ball,
    nf_sphere_sizes,
    sphere_sizes,
)
from group_core import IDENTITY, LETTER_ORDER, Letter, eval_word, multiply, parse_word
from normal_form import nf_of_element


def test_ball_of_radius_zero():
    assert bfs_ball(0).distances == {IDENTITY: 0}


def test_first_spheres():
    assert sphere_sizes(2) == [1, 4, 12]
    assert len(bfs_ball(2).sphere(1)) == 4


@pytest.mark.parametrize("radius", [-1, 15])
def test_radius_outside_cap(radius):
    with pytest.raises(ValueError):
        bfs_ball(radius)


def test_is_geodesic():
    ball = bfs_ball(5)
    assert is_geodesic((), ball)
    assert is_geodesic(parse_word("ta^3t^-1"), ball)
    assert not is_geodesic(parse_word("tat^-1"), ball)
    assert not is_geodesic(parse_word("a^6"), ball)


def test_query_outside_the_ball():
    with pytest.raises(ValueError):
        is_geodesic(parse_word("a^9"), bfs_ball(2))


def test_all_geodesics():
    ball = bfs_ball(4)
    assert all_geodesics(IDENTITY, ball) == {()}
    assert all_geodesics(eval_word(parse_word("a^2")), ball) == {parse_word("a^2")}
    assert all_geodesics(eval_word(parse_word("t^-1a")), ball) == {parse_word("t^-1a")}
    assert all_geodesics(eval_word(parse_word("at^-1")), ball) == {parse_word("at^-1")}
    assert all_geodesics(eval_word(parse_word("at")), ball) == {parse_word("at")}


def test_geodesics_evaluate_to_their_element():
    ball = bfs_ball(5)
    for g in ball.sphere(4):
        words = all_geodesics(g, ball)
        assert nf_of_element(g) in words
        assert all(len(word) == 4 and eval_word(word) == g for word in words)


def test_neighbours_differ_by_at_most_one():
    ball = bfs_ball(6)
    generators = [eval_word((letter,)) for letter in LETTER_ORDER]
    for g, distance in ball.distances.items():
        if distance >= 6:
            continue
        for s in generators:
            assert abs(ball.distances[multiply(g, s)] - distance) <= 1


def test_sphere_sizes_match_normal_form_counts():
    assert nf_sphere_sizes(7) == sphere_sizes(7)


def test_worker_count_does_not_change_the_ball():
    assert bfs_ball(4, workers=2).distances == bfs_ball(4, workers=0).distances


def test_ball_file(tmp_path):
    ball = bfs_ball(3)
    path = str(tmp_path / "ball.txt")
    dump_ball(ball, path)
    with open(path, encoding="utf-8") as ball_file:
        assert ball_file.readline() == "# radius 3\n"
        assert ball_file.readline() == "0 0 0 0\n"
    loaded = load_ball(path)
    assert loaded.radius == 3
    assert loaded.distances == ball.distances


def test_malformed_ball_file(tmp_path):
    path = tmp_path / "ball.txt"
    path.write_text("# radius 1\n0 0 0\n", encoding="utf-8")
    with pytest.raises(ValueError):
        load_ball(str(path))


def test_t_letters_are_single_steps():
    ball = bfs_ball(1)
    assert ball.distances[eval_word((Letter.T_POS,))] == 1
