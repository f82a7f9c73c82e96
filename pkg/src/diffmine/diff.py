"""Algorithm selection and the single diff entry point."""

from __future__ import annotations

import enum

from .histogram import histogram_diff
from .myers import minimal_diff, myers_diff
from .patience import patience_diff
from .script import EditScript
from .tokens import Sequence


class AlgorithmId(enum.Enum):
    """The four line-diff algorithms, named as git spells them."""

    MYERS = "myers"
    MINIMAL = "minimal"
    PATIENCE = "patience"
    HISTOGRAM = "histogram"

    @classmethod
    def from_name(cls, name: str) -> "AlgorithmId":
        try:
            return cls(name.lower())
        except ValueError:
            valid = ", ".join(member.value for member in cls)
            raise ValueError(f"unknown algorithm {name!r}; expected one of: {valid}") from None


_DISPATCH = {
    AlgorithmId.MYERS: myers_diff,
    AlgorithmId.MINIMAL: minimal_diff,
    AlgorithmId.PATIENCE: patience_diff,
    AlgorithmId.HISTOGRAM: histogram_diff,
}


def diff(old: Sequence, new: Sequence, algorithm: AlgorithmId = AlgorithmId.MYERS) -> EditScript:
    """Diff two sequences with the selected algorithm.

    Both sequences must have been tokenized with identical normalization
    flags; the result is a complete edit script.
    """
    return _DISPATCH[algorithm](old, new)
