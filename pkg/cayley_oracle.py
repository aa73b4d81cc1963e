"""
Breadth first search over the Cayley graph of BS(1,2) with generators
a, a^-1, t, t^-1: balls, spheres, word distances and all geodesics of an
element. The ground truth the normal form is checked against.
"""
import logging
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional, Sequence

from group_core import (
    IDENTITY,
    LETTER_ORDER,
    GroupElement,
    Letter,
    Word,
    canonical,
    eval_word,
    multiply,
)
from normal_form import enumerate_nf

logger = logging.getLogger(__name__)

BALL_CAP = int(os.environ.get("BS12_BALL_CAP", "14"))
WORKERS = int(os.environ.get("BS12_WORKERS", "0"))

# frontier slices handed to one worker process
_CHUNK = 4096


@dataclass(frozen=True)
class Ball:
    radius: int
    distances: dict[GroupElement, int]

    def sphere(self, n: int) -> list[GroupElement]:
        return [g for g, distance in self.distances.items() if distance == n]

    def sizes(self) -> list[int]:
        counts = Counter(self.distances.values())
        return [counts[n] for n in range(self.radius + 1)]


def _generator_elements(p: int) -> list[tuple[Letter, GroupElement]]:
    return [(letter, eval_word((letter,), p)) for letter in LETTER_ORDER]


def _expand_task(args):
    """Top-level worker (must be importable for ProcessPoolExecutor on Windows)."""
    frontier, p = args
    generators = _generator_elements(p)
    return [multiply(g, s, p) for g in frontier for _, s in generators]


def _expand(frontier: list[GroupElement], p: int, workers: int) -> list[GroupElement]:
    """right neighbours of every frontier element, in frontier order"""
    if workers <= 1 or len(frontier) < 2 * _CHUNK:
        return _expand_task((frontier, p))
    chunks = [(frontier[i : i + _CHUNK], p) for i in range(0, len(frontier), _CHUNK)]
    neighbours = []
    with ProcessPoolExecutor(max_workers=workers) as executor:
        for part in executor.map(_expand_task, chunks):
            neighbours.extend(part)
    return neighbours


def _bfs(radius: int, p: int, workers: int) -> Ball:
    distances = {IDENTITY: 0}
    frontier = [IDENTITY]
    for distance in range(1, radius + 1):
        layer = []
        for g in _expand(frontier, p, workers):
            if g not in distances:
                distances[g] = distance
                layer.append(g)
        frontier = layer
        logger.info("bfs radius %d: %d elements", distance, len(distances))
    return Ball(radius, distances)


def bfs_ball(radius: int, workers: Optional[int] = None) -> Ball:
    """
    exact word distance of every element within radius of the identity
    :param radius: 0 <= radius <= BS12_BALL_CAP
    :param workers: processes expanding each frontier, BS12_WORKERS by default
    :return: the ball; identical whatever the number of workers
    """
    if radius < 0 or radius > BALL_CAP:
        raise ValueError(f"radius {radius} outside 0..{BALL_CAP} (BS12_BALL_CAP)")
    return _bfs(radius, 2, WORKERS if workers is None else workers)


def _distance(ball: Ball, g: GroupElement) -> int:
    distance = ball.distances.get(g)
    if distance is None:
        raise ValueError(f"element {g} lies outside the ball of radius {ball.radius}")
    return distance


def is_geodesic(w: Sequence[Letter], ball: Ball) -> bool:
    return len(w) == _distance(ball, eval_word(w))


def all_geodesics(g: GroupElement, ball: Ball) -> set[Word]:
    """
    every shortest word for g, walking back through the BFS layers
    """
    target = _distance(ball, g)
    steps = [(letter, eval_word((letter.inverse,))) for letter in LETTER_ORDER]
    found: dict[GroupElement, set[Word]] = {IDENTITY: {()}}

    def geodesics(h: GroupElement, distance: int) -> set[Word]:
        if h not in found:
            words = set()
            for letter, back in steps:
                previous = multiply(h, back, 2)
                if ball.distances.get(previous) == distance - 1:
                    words.update(prefix + (letter,) for prefix in geodesics(previous, distance - 1))
            found[h] = words
        return found[h]

    return geodesics(g, target)


def sphere_sizes(radius: int, workers: Optional[int] = None) -> list[int]:
    return bfs_ball(radius, workers).sizes()


def nf_sphere_sizes(radius: int) -> list[int]:
    """number of normal form words of each length 0..radius"""
    counts = Counter(len(word) for word in enumerate_nf(radius))
    return [counts[n] for n in range(radius + 1)]


def dump_ball(ball: Ball, path: str):
    """one line per element: num dexp texp distance, nearest first"""
    records = sorted(
        ball.distances.items(), key=lambda item: (item[1], item[0].texp, item[0].dexp, item[0].num)
    )
    with open(path, "w", encoding="utf-8") as ball_file:
        ball_file.write(f"# radius {ball.radius}\n")
        for g, distance in records:
            ball_file.write(f"{g.num} {g.dexp} {g.texp} {distance}\n")
    logger.info("wrote %d elements to %s", len(records), path)


def load_ball(path: str) -> Ball:
    radius = 0
    distances = {}
    with open(path, encoding="utf-8") as ball_file:
        for number, line in enumerate(ball_file, start=1):
            line = line.strip()
            if line.startswith("# radius"):
                radius = int(line.split()[-1])
                continue
            if not line or line.startswith("#"):
                continue
            try:
                num, dexp, texp, distance = (int(field) for field in line.split())
            except ValueError:
                raise ValueError(f"Malformed ball record {line!r} on line {number}") from None
            distances[canonical(num, dexp, texp)] = distance
    return Ball(max(radius, max(distances.values(), default=0)), distances)
