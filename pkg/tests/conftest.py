"""Shared fixtures: canonical slopes, a reference arc family, and seeded
generators for kneading words and admissible tails."""
import math
import random

import pytest

from tentplane import (
    KneadingSequence,
    LeftTail,
    RightSeq,
    is_admissible_tail,
    kneading_from_slope,
    validate_kneading,
)

GOLDEN = (1 + math.sqrt(5)) / 2

# twelve eventually periodic tails over the 101 pattern, labeled N1..N12
# in this order
FIGURE_HEADS = [
    "101101111",
    "101100111",
    "101101011",
    "101101001",
    "101100101",
    "101101101",
    "101101100",
    "101100100",
    "101101010",
    "100100110",
    "101100110",
    "101101110",
]


def figure_nu() -> KneadingSequence:
    # nine trusted symbols, arbitrary continuation beyond them
    return KneadingSequence(RightSeq("10011001", "0"), validated_depth=9.0)


def figure_tails():
    return [LeftTail("101", h) for h in FIGURE_HEADS]


def figure_labels():
    return {str(LeftTail("101", h)): f"N{i}" for i, h in enumerate(FIGURE_HEADS, 1)}


@pytest.fixture(scope="session")
def nu_full():
    return kneading_from_slope(2.0)


@pytest.fixture(scope="session")
def nu_golden():
    return kneading_from_slope(GOLDEN)


@pytest.fixture(scope="session")
def nu_sqrt2():
    return kneading_from_slope(math.sqrt(2.0))


def random_kneading(rng: random.Random, length: int = 10) -> KneadingSequence:
    """A window-validated truncated kneading sequence of the given length."""
    while True:
        word = "1" + "".join(rng.choice("01") for _ in range(length - 1))
        seq = RightSeq(word, "0")
        if validate_kneading(seq, length) is None:
            return KneadingSequence(seq, validated_depth=float(length))


def random_tail(rng: random.Random, nu: KneadingSequence, max_period: int = 4,
                max_head: int = 6, tries: int = 2000) -> LeftTail:
    """Some admissible left tail for nu, rejection sampled."""
    for _ in range(tries):
        p = "".join(rng.choice("01") for _ in range(rng.randint(1, max_period)))
        h = "".join(rng.choice("01") for _ in range(rng.randint(0, max_head)))
        tail = LeftTail(p, h)
        if is_admissible_tail(tail, nu):
            return tail
    raise AssertionError(f"no admissible tail found for {nu}")
