"""Property-suite acceptance gate: one test per criterion, default seed."""

import pytest

from symbidisc.suite import CRITERIA, DEFAULT_CONFIG


@pytest.mark.parametrize("criterion", CRITERIA, ids=lambda c: c.__name__)
def test_criterion(criterion):
    result = criterion(DEFAULT_CONFIG)
    assert result.passed, f"criterion {result.number} ({result.name}): {result.detail}"
