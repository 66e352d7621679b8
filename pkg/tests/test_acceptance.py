"""Acceptance gate: each numbered check re-derives a recorded result from
scratch and compares.  One line of output per criterion; every one of them
must pass.  The CLI's verify-paper subcommand runs exactly the same
functions."""

import pytest

from trelliskit import reproduction


@pytest.fixture(scope="module")
def results():
    return {r.number: r for r in reproduction.run_all()}


@pytest.mark.parametrize("number", range(1, 11), ids=lambda k: f"criterion_{k:02d}")
def test_criterion(results, number):
    r = results[number]
    print(r.line)
    assert r.passed, "\n".join([r.line, *r.details])


def test_nothing_is_skipped(results):
    assert sorted(results) == list(range(1, 11))
