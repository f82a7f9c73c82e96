"""Recursive low-occurrence separator matcher (git's histogram strategy)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .myers import intern_ids, match_pairs
from .script import EditScript, script_from_pairs
from .tokens import Sequence

DEFAULT_MAX_OCCURRENCE = 64


@dataclass(frozen=True, slots=True)
class SeparatorChoice:
    """One separator decision, reported through the instrumentation hook.

    Region bounds are 0-based half-open indexes into the full token lists;
    ``old_pos``/``new_pos`` are the 1-based positions of the chosen pair.
    ``occurrence_count`` is the old-side occurrence count of ``key`` inside
    the region at selection time.
    """

    old_lo: int
    old_hi: int
    new_lo: int
    new_hi: int
    old_pos: int
    new_pos: int
    key: bytes
    occurrence_count: int


SeparatorHook = Callable[[SeparatorChoice], None]


def histogram_diff(
    old: Sequence,
    new: Sequence,
    max_occurrence: int = DEFAULT_MAX_OCCURRENCE,
    on_separator: Optional[SeparatorHook] = None,
) -> EditScript:
    """Diff by recursively splitting on the lowest-occurrence common line.

    Within each region the common element with the lowest old-side occurrence
    count (ties broken by earliest old position) becomes the separator; the
    region splits around that pair and both halves are processed the same way.
    Regions with no common element occurring at most ``max_occurrence`` times
    on the old side fall back to the shortest-edit-script matcher.
    """
    if max_occurrence < 1:
        raise ValueError("max_occurrence must be at least 1")
    a, b = intern_ids(old, new)
    pairs: list[tuple[int, int]] = []
    regions = [(0, len(a), 0, len(b))]
    while regions:
        a_lo, a_hi, b_lo, b_hi = regions.pop()
        if a_lo == a_hi or b_lo == b_hi:
            continue
        chosen = _select_separator(a, b, a_lo, a_hi, b_lo, b_hi, max_occurrence)
        if chosen is None:
            core = match_pairs(a[a_lo:a_hi], b[b_lo:b_hi])
            pairs.extend((i + a_lo, j + b_lo) for i, j in core)
            continue
        i, j, count = chosen
        if on_separator is not None:
            on_separator(
                SeparatorChoice(
                    old_lo=a_lo,
                    old_hi=a_hi,
                    new_lo=b_lo,
                    new_hi=b_hi,
                    old_pos=i + 1,
                    new_pos=j + 1,
                    key=old.tokens[i].key,
                    occurrence_count=count,
                )
            )
        pairs.append((i, j))
        regions.append((a_lo, i, b_lo, j))
        regions.append((i + 1, a_hi, j + 1, b_hi))
    pairs.sort()
    return script_from_pairs(old, new, pairs)


def _select_separator(
    a: list[int],
    b: list[int],
    a_lo: int,
    a_hi: int,
    b_lo: int,
    b_hi: int,
    max_occurrence: int,
) -> tuple[int, int, int] | None:
    """Pick the separator pair for one region, or None to fall back.

    Returns ``(old_index, new_index, old_side_count)`` for the common element
    with the lowest old-side occurrence count; the pair joins its earliest
    occurrence on each side.
    """
    counts: dict[int, int] = {}
    first_a: dict[int, int] = {}
    for index in range(a_lo, a_hi):
        ident = a[index]
        counts[ident] = counts.get(ident, 0) + 1
        if ident not in first_a:
            first_a[ident] = index
    best: tuple[int, int] | None = None
    best_ident = -1
    best_b_index = -1
    seen_b: set[int] = set()
    for index in range(b_lo, b_hi):
        ident = b[index]
        if ident in seen_b:
            continue
        seen_b.add(ident)
        count = counts.get(ident)
        if count is None or count > max_occurrence:
            continue
        candidate = (count, first_a[ident])
        if best is None or candidate < best:
            best = candidate
            best_ident = ident
            best_b_index = index
    if best is None:
        return None
    return first_a[best_ident], best_b_index, best[0]
