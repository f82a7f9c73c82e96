"""Edit scripts: ordered Equal/Delete/Insert records over tokenized lines."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Union

from .tokens import LineToken, Sequence


class ScriptError(Exception):
    """Structural inconsistency between a script and the sequences it refers to."""


@dataclass(frozen=True, slots=True)
class Equal:
    """A line kept as-is; ``token`` is the old-side token (keys match by construction)."""

    old_pos: int
    new_pos: int
    token: LineToken


@dataclass(frozen=True, slots=True)
class Delete:
    """A line removed from the old sequence."""

    old_pos: int
    token: LineToken


@dataclass(frozen=True, slots=True)
class Insert:
    """A line added by the new sequence; the token is embedded so scripts apply standalone."""

    new_pos: int
    token: LineToken


Record = Union[Equal, Delete, Insert]


@dataclass(frozen=True, slots=True)
class EditScript:
    """Ordered list of Equal/Delete/Insert records mapping an old sequence to a new one.

    Scripts produced by the diff algorithms are *complete*: old positions over
    Equal and Delete records enumerate ``1..old_len`` exactly once in
    increasing order, and likewise new positions over Equal and Insert.
    :func:`suppress_blank_changes` returns a reporting view that intentionally
    drops records and therefore no longer covers every position.
    """

    records: tuple[Record, ...]
    old_len: int
    new_len: int
    old_missing_newline: bool = False
    new_missing_newline: bool = False

    def __iter__(self) -> Iterator[Record]:
        return iter(self.records)

    def __len__(self) -> int:
        return len(self.records)

    @property
    def insert_count(self) -> int:
        return sum(1 for record in self.records if isinstance(record, Insert))

    @property
    def delete_count(self) -> int:
        return sum(1 for record in self.records if isinstance(record, Delete))

    @property
    def edit_count(self) -> int:
        return sum(1 for record in self.records if not isinstance(record, Equal))

    @property
    def has_changes(self) -> bool:
        return any(not isinstance(record, Equal) for record in self.records)

    def equal_pairs(self) -> set[tuple[int, int]]:
        return {(r.old_pos, r.new_pos) for r in self.records if isinstance(r, Equal)}

    def is_complete(self) -> bool:
        """Whether the records cover every old and new position exactly once."""
        try:
            validate_script(self)
        except ScriptError:
            return False
        return True


def validate_script(script: EditScript) -> None:
    """Raise :class:`ScriptError` unless the script covers both sequences exactly.

    Checks the position invariants: old positions over Equal and Delete
    records enumerate ``1..old_len`` in increasing order, new positions over
    Equal and Insert enumerate ``1..new_len`` likewise.
    """
    old_cursor = 0
    new_cursor = 0
    for record in script.records:
        if isinstance(record, (Equal, Delete)):
            if record.old_pos != old_cursor + 1:
                raise ScriptError(
                    f"old position {record.old_pos} out of order (expected {old_cursor + 1})"
                )
            old_cursor += 1
        if isinstance(record, (Equal, Insert)):
            if record.new_pos != new_cursor + 1:
                raise ScriptError(
                    f"new position {record.new_pos} out of order (expected {new_cursor + 1})"
                )
            new_cursor += 1
    if old_cursor != script.old_len:
        raise ScriptError(f"old positions cover {old_cursor} of {script.old_len} lines")
    if new_cursor != script.new_len:
        raise ScriptError(f"new positions cover {new_cursor} of {script.new_len} lines")


def script_from_pairs(old: Sequence, new: Sequence, pairs: list[tuple[int, int]]) -> EditScript:
    """Build a complete script from matched 0-based index pairs.

    ``pairs`` must be strictly increasing in both coordinates and pair lines
    with identical keys.  Unmatched old lines become Delete records and
    unmatched new lines Insert records; within each gap deletions precede
    insertions.
    """
    records: list[Record] = []
    old_tokens = old.tokens
    new_tokens = new.tokens
    old_cursor = 0
    new_cursor = 0
    for i, j in pairs:
        if old_tokens[i].key != new_tokens[j].key:
            raise ScriptError(f"pair ({i}, {j}) joins lines with different keys")
        for k in range(old_cursor, i):
            records.append(Delete(k + 1, old_tokens[k]))
        for k in range(new_cursor, j):
            records.append(Insert(k + 1, new_tokens[k]))
        records.append(Equal(i + 1, j + 1, old_tokens[i]))
        old_cursor = i + 1
        new_cursor = j + 1
    for k in range(old_cursor, len(old_tokens)):
        records.append(Delete(k + 1, old_tokens[k]))
    for k in range(new_cursor, len(new_tokens)):
        records.append(Insert(k + 1, new_tokens[k]))
    return EditScript(
        records=tuple(records),
        old_len=len(old_tokens),
        new_len=len(new_tokens),
        old_missing_newline=old.missing_trailing_newline,
        new_missing_newline=new.missing_trailing_newline,
    )


def apply_script(old: Sequence, script: EditScript) -> Sequence:
    """Reconstruct the new sequence from the old one and a complete script.

    Equal records copy the old token, Insert records use the token embedded in
    the script.  Position inconsistencies raise :class:`ScriptError`.
    """
    if script.old_len != len(old.tokens):
        raise ScriptError(
            f"script describes an old sequence of {script.old_len} lines, got {len(old.tokens)}"
        )
    out: list[LineToken] = []
    old_cursor = 1
    new_cursor = 1
    for record in script.records:
        if isinstance(record, Equal):
            if record.old_pos != old_cursor or record.new_pos != new_cursor:
                raise ScriptError(f"equal record at ({record.old_pos}, {record.new_pos}) breaks position order")
            token = old.tokens[old_cursor - 1]
            if token.key != record.token.key:
                raise ScriptError(f"equal record at old position {old_cursor} does not match the sequence")
            out.append(LineToken(token.raw, token.key, new_cursor))
            old_cursor += 1
            new_cursor += 1
        elif isinstance(record, Delete):
            if record.old_pos != old_cursor:
                raise ScriptError(f"delete record at {record.old_pos} breaks position order")
            old_cursor += 1
        else:
            if record.new_pos != new_cursor:
                raise ScriptError(f"insert record at {record.new_pos} breaks position order")
            out.append(LineToken(record.token.raw, record.token.key, new_cursor))
            new_cursor += 1
    if old_cursor != script.old_len + 1:
        raise ScriptError("script does not consume the whole old sequence")
    if new_cursor != script.new_len + 1:
        raise ScriptError("script does not produce the whole new sequence")
    return Sequence(tokens=tuple(out), missing_trailing_newline=script.new_missing_newline)


def suppress_blank_changes(script: EditScript) -> EditScript:
    """Drop change blocks whose deleted and inserted lines are all blank.

    This is the effect of git's ``--ignore-blank-lines``: blank lines still
    participate in matching, but a contiguous run of Delete/Insert records in
    which every token has an empty key is removed and the surrounding Equal
    runs become adjacent.  The result is a reporting view; position coverage
    and conservation only hold for the records that remain.
    """
    records = script.records
    out: list[Record] = []
    index = 0
    dropped = False
    total = len(records)
    while index < total:
        record = records[index]
        if isinstance(record, Equal):
            out.append(record)
            index += 1
            continue
        end = index
        all_blank = True
        while end < total and not isinstance(records[end], Equal):
            if records[end].token.key != b"":
                all_blank = False
            end += 1
        if all_blank:
            dropped = True
        else:
            out.extend(records[index:end])
        index = end
    if not dropped:
        return script
    return EditScript(
        records=tuple(out),
        old_len=script.old_len,
        new_len=script.new_len,
        old_missing_newline=script.old_missing_newline,
        new_missing_newline=script.new_missing_newline,
    )
