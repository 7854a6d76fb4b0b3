"""Acceptance suite: every criterion at its stated tolerance (exact), with
one printed pass/fail line per criterion."""

import pytest

from chevloops.acceptance import CRITERIA, DEFAULT_SEED


def _report(rec):
    status = "PASS" if rec["passed"] else "FAIL"
    line = (f"ACCEPTANCE {rec['criterion']}: {status} "
            f"[{rec['seconds']:.2f}s / budget {rec['budget_seconds']:.0f}s] "
            f"{rec['name']}")
    print(line)
    return line


@pytest.mark.parametrize("index", range(1, len(CRITERIA) + 1),
                         ids=[f"criterion_{k}" for k in
                              range(1, len(CRITERIA) + 1)])
def test_acceptance_criterion(index, capsys):
    rec = CRITERIA[index - 1](DEFAULT_SEED)
    rec["criterion"] = index
    with capsys.disabled():
        _report(rec)
    assert rec["passed"], rec["details"]
