"""Seeded random generators shared across the test modules."""

from __future__ import annotations

import random

from braidulam.freegroup import FreeWord, X, Y
from braidulam.fundamental import (
    KleinS1Elem,
    MAElem,
    Mat2,
    T3Elem,
)
from braidulam.param_braid import Bundle, ParamBraid
from braidulam.torus_braid import TorusBraid


def random_letters(rng: random.Random, max_len: int = 20) -> list[tuple[str, int]]:
    return [
        (rng.choice("xy"), rng.choice((1, -1)))
        for _ in range(rng.randint(0, max_len))
    ]


def random_word(rng: random.Random, max_len: int = 20) -> FreeWord:
    return FreeWord(random_letters(rng, max_len))


def random_balanced_word(rng: random.Random, max_len: int = 20) -> FreeWord:
    w = random_word(rng, max_len)
    ex, ey = w.exponent_sums()
    return w * X ** (-ex) * Y ** (-ey)


def random_braid(rng: random.Random, max_len: int = 10) -> TorusBraid:
    return TorusBraid(
        random_word(rng, max_len),
        rng.randint(-3, 3),
        rng.randint(-3, 3),
        rng.randint(0, 1),
    )


def random_param_braid(
    rng: random.Random, kind: Bundle, max_len: int = 8
) -> ParamBraid:
    return ParamBraid(random_braid(rng, max_len), rng.randint(-2, 2), kind)


def random_ma_elem(rng: random.Random, monodromy: Mat2) -> MAElem:
    return MAElem(
        rng.randint(-5, 5), rng.randint(-5, 5), rng.randint(-3, 3), monodromy
    )


def random_t3_elem(rng: random.Random) -> T3Elem:
    return T3Elem(rng.randint(-5, 5), rng.randint(-5, 5), rng.randint(-5, 5))


def random_klein_elem(rng: random.Random) -> KleinS1Elem:
    return KleinS1Elem(rng.randint(-5, 5), rng.randint(-5, 5), rng.randint(-5, 5))
