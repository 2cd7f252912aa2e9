"""Acceptance grid: one test per criterion.

Each criterion's PASS/FAIL line is printed live under ``-s`` and repeated
in the terminal summary.
"""

import pytest

from genshift.relations import DEFAULT_BUDGET
from genshift.verification import CRITERIA, check_budget, run_criterion

from conftest import ACCEPTANCE_LINES

SEED = 0


def test_grid_fits_default_budget():
    check_budget(DEFAULT_BUDGET)


@pytest.mark.parametrize("number", [c[0] for c in CRITERIA], ids=[f"criterion{c[0]}" for c in CRITERIA])
def test_criterion(number):
    result = run_criterion(number, seed=SEED)
    print(result.line())
    ACCEPTANCE_LINES.append(result.line())
    assert result.passed, result.line()
