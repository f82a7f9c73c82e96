"""Hunk construction and textual diff rendering (unified and side-by-side)."""

from __future__ import annotations

from dataclasses import dataclass

from .script import Delete, EditScript, Equal, Insert, Record, ScriptError

DEFAULT_CONTEXT = 3

CONTEXT = "context"
DELETE = "delete"
INSERT = "insert"

_PREFIX = {CONTEXT: b" ", DELETE: b"-", INSERT: b"+"}
_NO_NEWLINE_MARKER = b"\\ No newline at end of file\n"


@dataclass(frozen=True, slots=True)
class HunkLine:
    """One rendered line; ``no_newline`` marks the final line of a side lacking a terminator."""

    kind: str
    old_pos: int | None
    new_pos: int | None
    text: bytes
    no_newline: bool = False


@dataclass(frozen=True, slots=True)
class Hunk:
    """A contiguous block of changes with flanking unchanged context.

    ``old_count`` equals the context plus delete lines in the body and
    ``new_count`` the context plus insert lines; hunks of one script are
    disjoint and ordered by ``old_start``.
    """

    old_start: int
    old_count: int
    new_start: int
    new_count: int
    body: tuple[HunkLine, ...]


def build_hunks(script: EditScript, context: int = DEFAULT_CONTEXT) -> list[Hunk]:
    """Group the script's change records into hunks.

    Change blocks separated by a run of at most ``2 * context`` Equal records
    merge into a single hunk; each hunk carries up to ``context`` Equal lines
    on both flanks.  Scripts filtered by ``suppress_blank_changes`` render on
    the records that remain, like git's own display-only output under
    ``--ignore-blank-lines``.
    """
    if context < 0:
        raise ValueError("context must be non-negative")
    records = script.records
    runs = _change_runs(records)
    if not runs:
        return []
    groups: list[tuple[int, int]] = [runs[0]]
    for start, end in runs[1:]:
        last_start, last_end = groups[-1]
        if start - last_end <= 2 * context:
            groups[-1] = (last_start, end)
        else:
            groups.append((start, end))
    hunks = []
    for start, end in groups:
        lead = max(start - context, 0)
        trail = min(end + context, len(records))
        hunks.append(_make_hunk(script, records, lead, trail))
    return hunks


def _change_runs(records: tuple[Record, ...]) -> list[tuple[int, int]]:
    """Index ranges of maximal runs of non-Equal records."""
    runs = []
    index = 0
    total = len(records)
    while index < total:
        if isinstance(records[index], Equal):
            index += 1
            continue
        start = index
        while index < total and not isinstance(records[index], Equal):
            index += 1
        runs.append((start, index))
    return runs


def _make_hunk(script: EditScript, records: tuple[Record, ...], start: int, end: int) -> Hunk:
    body: list[HunkLine] = []
    old_count = 0
    new_count = 0
    for record in records[start:end]:
        if isinstance(record, Equal):
            kind, old_pos, new_pos = CONTEXT, record.old_pos, record.new_pos
            old_count += 1
            new_count += 1
        elif isinstance(record, Delete):
            kind, old_pos, new_pos = DELETE, record.old_pos, None
            old_count += 1
        else:
            kind, old_pos, new_pos = INSERT, None, record.new_pos
            new_count += 1
        marker = (
            old_pos == script.old_len and script.old_missing_newline
        ) or (new_pos == script.new_len and script.new_missing_newline)
        body.append(HunkLine(kind, old_pos, new_pos, record.token.raw, marker))
    old_start = next((line.old_pos for line in body if line.old_pos is not None), None)
    if old_start is None:
        old_start = _position_before(records, start, old_side=True)
    new_start = next((line.new_pos for line in body if line.new_pos is not None), None)
    if new_start is None:
        new_start = _position_before(records, start, old_side=False)
    return Hunk(old_start, old_count, new_start, new_count, tuple(body))


def _position_before(records: tuple[Record, ...], start: int, old_side: bool) -> int:
    """Anchor for a hunk that touches no line on one side: the last position before it."""
    for index in range(start - 1, -1, -1):
        record = records[index]
        if old_side and isinstance(record, (Equal, Delete)):
            return record.old_pos
        if not old_side and isinstance(record, (Equal, Insert)):
            return record.new_pos
    return 0


def _range_text(start: int, count: int) -> bytes:
    if count == 1:
        return b"%d" % start
    return b"%d,%d" % (start, count)


def render_unified(hunks: list[Hunk], old_path: str, new_path: str) -> bytes:
    """Unified diff text: `---`/`+++` headers, then `@@` hunks.

    Header ranges follow the git grammar, omitting the count when it is 1.
    A ``\\ No newline at end of file`` marker follows the final line of any
    side lacking a terminator.
    """
    parts = [b"--- " + old_path.encode() + b"\n", b"+++ " + new_path.encode() + b"\n"]
    for hunk in hunks:
        parts.append(
            b"@@ -"
            + _range_text(hunk.old_start, hunk.old_count)
            + b" +"
            + _range_text(hunk.new_start, hunk.new_count)
            + b" @@\n"
        )
        for line in hunk.body:
            parts.append(_PREFIX[line.kind] + line.text + b"\n")
            if line.no_newline:
                parts.append(_NO_NEWLINE_MARKER)
    return b"".join(parts)


def render_side_by_side(script_a: EditScript, script_b: EditScript, width: int = 120) -> str:
    """Two-column view of how two scripts treat the same file pair.

    The left panel shows old lines, the right panel new lines.  Each line
    carries one status column per script (``-``/``+``/space) and a leading
    ``!`` wherever the two scripts pair the line differently; only lines some
    script changed or the scripts disagree on are shown.
    """
    if script_a.old_len != script_b.old_len or script_a.new_len != script_b.new_len:
        raise ScriptError("scripts describe sequences of different lengths")
    old_keys_a, new_keys_a, old_raw, new_raw = _side_content(script_a)
    old_keys_b, new_keys_b, old_raw_b, new_raw_b = _side_content(script_b)
    if old_keys_a is not None and old_keys_b is not None and old_keys_a != old_keys_b:
        raise ScriptError("scripts disagree on the old sequence content")
    if new_keys_a is not None and new_keys_b is not None and new_keys_a != new_keys_b:
        raise ScriptError("scripts disagree on the new sequence content")
    old_raw.update(old_raw_b)
    new_raw.update(new_raw_b)

    pairs_a = script_a.equal_pairs()
    pairs_b = script_b.equal_pairs()
    disputed = pairs_a ^ pairs_b
    marked_old = {old for old, _ in disputed}
    marked_new = {new for _, new in disputed}
    deleted_a = {r.old_pos for r in script_a.records if isinstance(r, Delete)}
    deleted_b = {r.old_pos for r in script_b.records if isinstance(r, Delete)}
    inserted_a = {r.new_pos for r in script_a.records if isinstance(r, Insert)}
    inserted_b = {r.new_pos for r in script_b.records if isinstance(r, Insert)}

    show_old = deleted_a | deleted_b | marked_old
    show_new = inserted_a | inserted_b | marked_new
    panel_width = max((width - 3) // 2, 16)
    rows = []
    for pos in range(1, max(script_a.old_len, script_a.new_len) + 1):
        left = right = ""
        if pos <= script_a.old_len and pos in show_old:
            left = _panel_line(pos, pos in marked_old, pos in deleted_a, pos in deleted_b, "-", old_raw.get(pos, b""), panel_width)
        if pos <= script_a.new_len and pos in show_new:
            right = _panel_line(pos, pos in marked_new, pos in inserted_a, pos in inserted_b, "+", new_raw.get(pos, b""), panel_width)
        if left or right:
            rows.append(f"{left:<{panel_width}} | {right}".rstrip())
    return "\n".join(rows) + ("\n" if rows else "")


def _panel_line(pos: int, marked: bool, changed_a: bool, changed_b: bool, symbol: str, raw: bytes, width: int) -> str:
    flags = ("!" if marked else " ") + (symbol if changed_a else " ") + (symbol if changed_b else " ")
    text = raw.decode("utf-8", "replace")
    line = f"{flags} {pos:>5} {text}"
    return line[:width]


def _side_content(script: EditScript):
    """Per-position raw text, plus full key lists when the script is complete."""
    old_raw: dict[int, bytes] = {}
    new_raw: dict[int, bytes] = {}
    old_key: dict[int, bytes] = {}
    new_key: dict[int, bytes] = {}
    for record in script.records:
        if isinstance(record, Equal):
            old_raw[record.old_pos] = record.token.raw
            new_raw[record.new_pos] = record.token.raw
            old_key[record.old_pos] = record.token.key
            new_key[record.new_pos] = record.token.key
        elif isinstance(record, Delete):
            old_raw[record.old_pos] = record.token.raw
            old_key[record.old_pos] = record.token.key
        else:
            new_raw[record.new_pos] = record.token.raw
            new_key[record.new_pos] = record.token.key
    old_keys = None
    new_keys = None
    if len(old_key) == script.old_len and len(new_key) == script.new_len:
        old_keys = [old_key[pos] for pos in sorted(old_key)]
        new_keys = [new_key[pos] for pos in sorted(new_key)]
    return old_keys, new_keys, old_raw, new_raw
