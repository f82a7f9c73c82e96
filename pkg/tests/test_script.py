from __future__ import annotations

import pytest

from diffmine.diff import AlgorithmId, diff
from diffmine.script import (
    Delete,
    EditScript,
    Equal,
    Insert,
    ScriptError,
    apply_script,
    suppress_blank_changes,
    validate_script,
)
from diffmine.tokens import LineToken

from conftest import seq


def tok(text: bytes, pos: int = 1) -> LineToken:
    return LineToken(text, text, pos)


def test_apply_round_trip_every_algorithm():
    old = seq(["A", "B", "C", "A", "B", "B", "A"])
    new = seq(["C", "B", "A", "B", "A", "C"])
    for algorithm in AlgorithmId:
        script = diff(old, new, algorithm)
        rebuilt = apply_script(old, script)
        assert [t.raw for t in rebuilt.tokens] == [t.raw for t in new.tokens]


def test_apply_all_equal_returns_old():
    old = seq(["x", "y"])
    script = diff(old, old)
    rebuilt = apply_script(old, script)
    assert [t.raw for t in rebuilt.tokens] == [b"x", b"y"]


def test_apply_delete_then_insert():
    old = seq(["a"])
    script = EditScript(
        records=(Delete(1, tok(b"a")), Insert(1, tok(b"b"))),
        old_len=1,
        new_len=1,
    )
    rebuilt = apply_script(old, script)
    assert [t.raw for t in rebuilt.tokens] == [b"b"]


def test_apply_rejects_wrong_length():
    old = seq(["a", "b"])
    script = EditScript(records=(Delete(1, tok(b"a")),), old_len=1, new_len=0)
    with pytest.raises(ScriptError):
        apply_script(old, script)


def test_apply_rejects_position_gap():
    old = seq(["a", "b"])
    script = EditScript(records=(Delete(2, tok(b"b")),), old_len=2, new_len=0)
    with pytest.raises(ScriptError):
        apply_script(old, script)


def test_validate_accepts_algorithm_output():
    old = seq(["a", "b", "c"])
    new = seq(["a", "x", "c", "d"])
    for algorithm in AlgorithmId:
        validate_script(diff(old, new, algorithm))


def test_validate_rejects_duplicate_old_position():
    script = EditScript(
        records=(Delete(1, tok(b"a")), Delete(1, tok(b"a"))),
        old_len=2,
        new_len=0,
    )
    with pytest.raises(ScriptError):
        validate_script(script)


def test_conservation_on_algorithm_output():
    old = seq(["a", "b", "c"])
    new = seq(["b", "q", "c", "z", "w"])
    for algorithm in AlgorithmId:
        script = diff(old, new, algorithm)
        assert script.insert_count - script.delete_count == len(new.tokens) - len(old.tokens)


def test_suppress_drops_all_blank_block():
    old = seq(["a", "", "b"])
    new = seq(["a", "b"])
    script = diff(old, new)
    suppressed = suppress_blank_changes(script)
    assert suppressed.delete_count == 0
    assert suppressed.insert_count == 0
    assert not suppressed.has_changes


def test_suppress_keeps_mixed_block():
    old = seq(["a", "", "x", "b"])
    new = seq(["a", "b"])
    script = diff(old, new)
    suppressed = suppress_blank_changes(script)
    # the blank delete is part of a block that also removes "x", so it stays
    assert suppressed.delete_count == 2


def test_suppress_no_blank_changes_is_identity():
    old = seq(["a", "b"])
    new = seq(["a", "c"])
    script = diff(old, new)
    assert suppress_blank_changes(script) is script


def test_suppressed_script_is_not_complete():
    old = seq(["a", "", "b"])
    new = seq(["a", "b"])
    suppressed = suppress_blank_changes(diff(old, new))
    assert not suppressed.is_complete()


def test_equal_pairs_helper():
    old = seq(["a", "b"])
    new = seq(["a", "b"])
    script = diff(old, new)
    assert script.equal_pairs() == {(1, 1), (2, 2)}
