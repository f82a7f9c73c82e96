from __future__ import annotations

import pytest

from diffmine.tokens import NormalizationFlags, Sequence, sequence_from_lines


def seq(lines: list[str] | list[bytes], flags: NormalizationFlags | None = None, missing_newline: bool = False) -> Sequence:
    """Build a sequence from str or bytes line contents."""
    raw = [line.encode() if isinstance(line, str) else line for line in lines]
    return sequence_from_lines(raw, flags or NormalizationFlags(), missing_newline)


@pytest.fixture
def make_seq():
    return seq
