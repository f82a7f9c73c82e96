"""Line tokenization with git-style normalization flags."""

from __future__ import annotations

import re
from dataclasses import dataclass

_WS_RE = re.compile(rb"\s+")


@dataclass(frozen=True, slots=True)
class NormalizationFlags:
    """Content-identity switches mirroring git's ``-w`` and ``--ignore-blank-lines``.

    The two flags are independent; ``ignore_whitespace`` changes how line keys
    are computed at tokenization time, while ``ignore_blank_lines`` is honored
    later by :func:`diffmine.script.suppress_blank_changes`.
    """

    ignore_whitespace: bool = False
    ignore_blank_lines: bool = False


class LineToken:
    """One line of a file, compared by its normalized key.

    ``raw`` keeps the original bytes with the terminator excluded; ``key`` is
    what equality means under the active normalization flags.  ``pos`` is the
    1-based position inside the owning sequence and never participates in
    equality or hashing.
    """

    __slots__ = ("raw", "key", "pos")

    def __init__(self, raw: bytes, key: bytes, pos: int) -> None:
        self.raw = raw
        self.key = key
        self.pos = pos

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LineToken):
            return NotImplemented
        return self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        return f"LineToken(pos={self.pos}, raw={self.raw!r})"

    @property
    def is_blank(self) -> bool:
        return self.key == b""


@dataclass(frozen=True, slots=True)
class Sequence:
    """Tokenized file content; token positions are 1-based and contiguous."""

    tokens: tuple[LineToken, ...]
    missing_trailing_newline: bool = False

    def __len__(self) -> int:
        return len(self.tokens)

    def keys(self) -> list[bytes]:
        return [token.key for token in self.tokens]

    def raws(self) -> list[bytes]:
        return [token.raw for token in self.tokens]


def normalize_key(raw: bytes, flags: NormalizationFlags) -> bytes:
    """Content identity of a line under the given flags."""
    if flags.ignore_whitespace:
        return _WS_RE.sub(b"", raw)
    return raw


def _incomplete_key(key: bytes, flags: NormalizationFlags) -> bytes:
    # A final line without a terminator is a different line from its
    # terminated twin (as in git), unless whitespace is ignored entirely.
    # Line content can never contain "\n", so the suffix cannot collide.
    if flags.ignore_whitespace:
        return key
    return key + b"\n"


def split_lines(content: bytes, flags: NormalizationFlags = NormalizationFlags()) -> Sequence:
    """Tokenize file content into lines, excluding LF/CRLF terminators.

    Empty content yields an empty sequence.  ``missing_trailing_newline`` is
    set when non-empty content does not end with a line terminator; the final
    token of such content compares unequal to a terminated line with the same
    bytes, matching how git reports terminator changes.
    """
    if not content:
        return Sequence(tokens=())
    parts = content.split(b"\n")
    missing = parts[-1] != b""
    if not missing:
        parts.pop()
    tokens = []
    for index, part in enumerate(parts):
        raw = part[:-1] if part.endswith(b"\r") else part
        key = normalize_key(raw, flags)
        if missing and index == len(parts) - 1:
            key = _incomplete_key(key, flags)
        tokens.append(LineToken(raw, key, index + 1))
    return Sequence(tokens=tuple(tokens), missing_trailing_newline=missing)


def sequence_from_lines(
    lines: list[bytes],
    flags: NormalizationFlags = NormalizationFlags(),
    missing_trailing_newline: bool = False,
) -> Sequence:
    """Build a sequence directly from raw line contents (terminators excluded)."""
    tokens = []
    for index, raw in enumerate(lines):
        key = normalize_key(raw, flags)
        if missing_trailing_newline and index == len(lines) - 1:
            key = _incomplete_key(key, flags)
        tokens.append(LineToken(raw, key, index + 1))
    return Sequence(tokens=tuple(tokens), missing_trailing_newline=missing_trailing_newline)
