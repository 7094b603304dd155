"""Shared test plumbing: cached enumerations and a fixed hypothesis profile."""

from functools import lru_cache

import hypothesis

from picodes.families import FamilySpec, enumerate_family
from picodes.words import SuffixMode

hypothesis.settings.register_profile(
    "suite", derandomize=True, max_examples=150, deadline=None)
hypothesis.settings.load_profile("suite")

DESK_SIZES = ((4, 4), (4, 5), (5, 4), (5, 5))


@lru_cache(maxsize=None)
def members(family: str, m: int, n: int, mode: SuffixMode = SuffixMode.ANY) -> tuple:
    """Enumerate a family once per size and share the tuple across tests."""
    return tuple(enumerate_family(FamilySpec(family, m, n, mode)))
