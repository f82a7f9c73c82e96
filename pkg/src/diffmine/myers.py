"""Greedy shortest-edit-script line matcher and its exact Minimal alias."""

from __future__ import annotations

from .script import EditScript, script_from_pairs
from .tokens import Sequence


def intern_ids(old: Sequence, new: Sequence) -> tuple[list[int], list[int]]:
    """Map line keys of both sequences to small ints sharing one table."""
    table: dict[bytes, int] = {}
    a = [table.setdefault(token.key, len(table)) for token in old.tokens]
    b = [table.setdefault(token.key, len(table)) for token in new.tokens]
    return a, b


def match_pairs(a: list[int], b: list[int]) -> list[tuple[int, int]]:
    """Matched 0-based index pairs of one shortest edit script.

    Common prefix and suffix are paired first; the remaining core runs the
    greedy forward search.  Ties between equal-cost paths resolve toward
    consuming the old side, so deletions come before insertions inside a
    replacement block.
    """
    n, m = len(a), len(b)
    prefix = 0
    while prefix < n and prefix < m and a[prefix] == b[prefix]:
        prefix += 1
    suffix = 0
    while suffix < n - prefix and suffix < m - prefix and a[n - 1 - suffix] == b[m - 1 - suffix]:
        suffix += 1
    pairs = [(i, i) for i in range(prefix)]
    if prefix < n - suffix and prefix < m - suffix:
        core = _forward_pairs(a[prefix : n - suffix], b[prefix : m - suffix])
        pairs.extend((i + prefix, j + prefix) for i, j in core)
    pairs.extend((n - suffix + k, m - suffix + k) for k in range(suffix))
    return pairs


def _forward_pairs(a: list[int], b: list[int]) -> list[tuple[int, int]]:
    """Greedy forward search over the edit graph, O((n+m)*d) time.

    ``trace`` keeps the per-phase frontier so the chosen path can be walked
    backwards; snake diagonals on that path are the matched pairs.
    """
    n, m = len(a), len(b)
    if n == 0 or m == 0:
        return []
    frontier: dict[int, int] = {1: 0}
    trace: list[dict[int, int]] = []
    done = False
    for d in range(n + m + 1):
        level: dict[int, int] = {}
        trace.append(level)
        for k in range(-d, d + 1, 2):
            if k == -d or (k != d and frontier.get(k - 1, -1) < frontier.get(k + 1, -1)):
                x = frontier[k + 1]
            else:
                x = frontier[k - 1] + 1
            y = x - k
            while x < n and y < m and a[x] == b[y]:
                x += 1
                y += 1
            frontier[k] = x
            level[k] = x
            if x >= n and y >= m:
                done = True
                break
        if done:
            break
    pairs: list[tuple[int, int]] = []
    x, y = n, m
    for d in range(len(trace) - 1, 0, -1):
        prev = trace[d - 1]
        k = x - y
        if k == -d or (k != d and prev.get(k - 1, -1) < prev.get(k + 1, -1)):
            prev_k = k + 1
        else:
            prev_k = k - 1
        prev_x = prev[prev_k]
        prev_y = prev_x - prev_k
        if prev_k == k + 1:
            snake_x, snake_y = prev_x, prev_y + 1
        else:
            snake_x, snake_y = prev_x + 1, prev_y
        while x > snake_x and y > snake_y:
            x -= 1
            y -= 1
            pairs.append((x, y))
        x, y = prev_x, prev_y
    while x > 0 and y > 0:
        x -= 1
        y -= 1
        pairs.append((x, y))
    pairs.reverse()
    return pairs


def myers_diff(old: Sequence, new: Sequence) -> EditScript:
    """Shortest edit script: minimizes Delete+Insert count, deterministically."""
    a, b = intern_ids(old, new)
    return script_from_pairs(old, new, match_pairs(a, b))


def minimal_diff(old: Sequence, new: Sequence) -> EditScript:
    """Alias of :func:`myers_diff`; the search here is already exact."""
    return myers_diff(old, new)
