from __future__ import annotations

from diffmine.histogram import histogram_diff
from diffmine.myers import myers_diff
from diffmine.patience import patience_diff
from diffmine.script import Equal, apply_script

from conftest import seq


def test_single_unique_anchor_matches_histogram():
    old = seq(["a", "U", "b"])
    new = seq(["c", "U", "d"])
    assert patience_diff(old, new) == histogram_diff(old, new)


def test_identical_sequences_all_equal():
    s = seq(["p", "q"])
    assert not patience_diff(s, seq(["p", "q"])).has_changes


def test_no_unique_common_line_falls_back_to_myers():
    old = seq(["A", "A"])
    new = seq(["A"])
    assert patience_diff(old, new) == myers_diff(old, new)


def test_longest_chain_wins():
    # Q, R, S form the longest increasing chain; P is reported moved.
    old = seq(["P", "Q", "R", "S"])
    new = seq(["Q", "R", "S", "P"])
    script = patience_diff(old, new)
    assert script.edit_count == 2
    assert {(2, 1), (3, 2), (4, 3)} <= script.equal_pairs()


def test_recursion_finds_locally_unique_lines():
    # "x" repeats globally but is unique between the U/V anchors
    old = seq(["x", "U", "x", "q", "V", "x"])
    new = seq(["U", "x", "w", "V"])
    script = patience_diff(old, new)
    pairs = script.equal_pairs()
    assert (2, 1) in pairs  # U
    assert (5, 4) in pairs  # V
    assert (3, 2) in pairs  # the inner x, unique within the anchored gap


def test_round_trip():
    old = seq(["m", "n", "m", "o", "p"])
    new = seq(["n", "m", "p", "m"])
    rebuilt = apply_script(old, patience_diff(old, new))
    assert [t.raw for t in rebuilt.tokens] == [t.raw for t in new.tokens]


def test_crossing_unique_pairs_keep_order_consistency():
    old = seq(["A", "B"])
    new = seq(["B", "A"])
    script = patience_diff(old, new)
    # only one of the two unique pairs can anchor; result stays a valid script
    assert script.edit_count == 2
    equal_keys = {r.token.key for r in script.records if isinstance(r, Equal)}
    assert len(equal_keys) == 1
