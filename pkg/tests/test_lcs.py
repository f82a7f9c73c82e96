from __future__ import annotations

from itertools import combinations

import pytest

from diffmine.lcs import SizeLimitError, lcs_length_oracle
from diffmine.tokens import sequence_from_lines

from conftest import seq


def brute_force_lcs(a: list[str], b: list[str]) -> int:
    """Enumerate subsequences of the shorter side; exponential but independent."""
    short, long_ = (a, b) if len(a) <= len(b) else (b, a)
    for length in range(len(short), 0, -1):
        for picks in combinations(short, length):
            it = iter(long_)
            if all(x in it for x in picks):
                return length
    return 0


def test_spec_example():
    old = seq(["A", "B", "C", "A", "B", "B", "A"])
    new = seq(["C", "B", "A", "B", "A", "C"])
    assert lcs_length_oracle(old, new) == 4


def test_identical_sequences():
    s = seq(["x", "y", "z"])
    assert lcs_length_oracle(s, s) == 3


def test_disjoint_alphabets():
    assert lcs_length_oracle(seq(["a", "b"]), seq(["c", "d"])) == 0


def test_empty_sides():
    assert lcs_length_oracle(seq([]), seq(["a"])) == 0
    assert lcs_length_oracle(seq([]), seq([])) == 0


def test_matches_brute_force_on_small_inputs():
    import random

    rng = random.Random(3)
    for _ in range(200):
        a = [rng.choice("abc") for _ in range(rng.randrange(0, 7))]
        b = [rng.choice("abc") for _ in range(rng.randrange(0, 7))]
        assert lcs_length_oracle(seq(a), seq(b)) == brute_force_lcs(a, b)


def test_size_bound_refusal():
    big = sequence_from_lines([b"%d" % i for i in range(1001)])
    other = sequence_from_lines([b"x%d" % i for i in range(1000)])
    with pytest.raises(SizeLimitError):
        lcs_length_oracle(big, other)
