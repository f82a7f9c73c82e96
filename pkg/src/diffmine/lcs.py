"""Quadratic dynamic-programming LCS length, used as an independent oracle."""

from __future__ import annotations

from .myers import intern_ids
from .tokens import Sequence

MAX_CELLS = 1_000_000


class SizeLimitError(Exception):
    """Raised when the DP table would exceed the oracle's size bound."""


def lcs_length_oracle(old: Sequence, new: Sequence) -> int:
    """Exact longest-common-subsequence length via the full DP table.

    Refuses inputs where ``len(old) * len(new)`` exceeds ``MAX_CELLS``; the
    table is quadratic by design so the result stays independent of any of
    the diff search strategies.
    """
    n, m = len(old.tokens), len(new.tokens)
    if n * m > MAX_CELLS:
        raise SizeLimitError(f"{n} x {m} exceeds the {MAX_CELLS}-cell oracle bound")
    if n == 0 or m == 0:
        return 0
    a, b = intern_ids(old, new)
    previous = [0] * (m + 1)
    for i in range(1, n + 1):
        current = [0] * (m + 1)
        ai = a[i - 1]
        for j in range(1, m + 1):
            if ai == b[j - 1]:
                current[j] = previous[j - 1] + 1
            else:
                up = previous[j]
                left = current[j - 1]
                current[j] = up if up >= left else left
        previous = current
    return previous[m]
