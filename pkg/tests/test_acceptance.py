"""Acceptance gate: every top-level criterion, one pass/fail line each.

Run with -s (or read the captured output) to see the per-criterion lines.
Criterion 4 is expected to fail: the pair of cyclic groups of order two
yields a rank-one kernel on which both generators act as negation, so the
induced map cannot be injective.  The failure is reported, not suppressed.
"""

import pytest

from monodromy.verify import CRITERIA


@pytest.mark.parametrize("name,fn", CRITERIA, ids=[name for name, _ in CRITERIA])
def test_criterion(name, fn, capsys):
    ok, detail = fn(seed=0)
    with capsys.disabled():
        print(f"{'PASS' if ok else 'FAIL'} {name}: {detail}")
    assert ok, f"{name}: {detail}"
