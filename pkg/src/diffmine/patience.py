"""Unique-common-line matcher (git's patience strategy)."""

from __future__ import annotations

from bisect import bisect_left

from .myers import intern_ids, match_pairs
from .script import EditScript, script_from_pairs
from .tokens import Sequence


def patience_diff(old: Sequence, new: Sequence) -> EditScript:
    """Diff by anchoring on lines that occur exactly once in both sequences.

    Each region is split on the longest increasing chain of unique common
    lines; the gaps between chain anchors are processed the same way, so
    lines that are not unique globally can still anchor a sub-region.
    Regions with no unique common line fall back to the shortest-edit-script
    matcher.
    """
    a, b = intern_ids(old, new)
    pairs: list[tuple[int, int]] = []
    regions = [(0, len(a), 0, len(b))]
    while regions:
        a_lo, a_hi, b_lo, b_hi = regions.pop()
        if a_lo == a_hi or b_lo == b_hi:
            continue
        chain = _unique_chain(a, b, a_lo, a_hi, b_lo, b_hi)
        if not chain:
            core = match_pairs(a[a_lo:a_hi], b[b_lo:b_hi])
            pairs.extend((i + a_lo, j + b_lo) for i, j in core)
            continue
        pairs.extend(chain)
        prev_i, prev_j = a_lo, b_lo
        for i, j in chain:
            regions.append((prev_i, i, prev_j, j))
            prev_i, prev_j = i + 1, j + 1
        regions.append((prev_i, a_hi, prev_j, b_hi))
    pairs.sort()
    return script_from_pairs(old, new, pairs)


def _unique_chain(
    a: list[int],
    b: list[int],
    a_lo: int,
    a_hi: int,
    b_lo: int,
    b_hi: int,
) -> list[tuple[int, int]]:
    """Longest increasing chain over lines unique in both halves of the region."""
    count_a: dict[int, int] = {}
    first_a: dict[int, int] = {}
    for index in range(a_lo, a_hi):
        ident = a[index]
        count_a[ident] = count_a.get(ident, 0) + 1
        if ident not in first_a:
            first_a[ident] = index
    count_b: dict[int, int] = {}
    first_b: dict[int, int] = {}
    for index in range(b_lo, b_hi):
        ident = b[index]
        count_b[ident] = count_b.get(ident, 0) + 1
        if ident not in first_b:
            first_b[ident] = index
    unique_pairs = sorted(
        (first_a[ident], first_b[ident])
        for ident, count in count_a.items()
        if count == 1 and count_b.get(ident) == 1
    )
    if not unique_pairs:
        return []
    # Patience sorting: stack pairs on piles by new-side index, linking each
    # placement to the current top of the previous pile.
    pile_tops_j: list[int] = []
    pile_tops: list[tuple[int, int]] = []
    previous: dict[tuple[int, int], tuple[int, int] | None] = {}
    for pair in unique_pairs:
        pile = bisect_left(pile_tops_j, pair[1])
        previous[pair] = pile_tops[pile - 1] if pile > 0 else None
        if pile == len(pile_tops_j):
            pile_tops_j.append(pair[1])
            pile_tops.append(pair)
        else:
            pile_tops_j[pile] = pair[1]
            pile_tops[pile] = pair
    chain: list[tuple[int, int]] = []
    current: tuple[int, int] | None = pile_tops[-1]
    while current is not None:
        chain.append(current)
        current = previous[current]
    chain.reverse()
    return chain
