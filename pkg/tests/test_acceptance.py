"""The eleven acceptance criteria, one test each.

Every criterion prints one ``PASS``/``FAIL`` line; the lines are collected
into the terminal summary.  Run this file directly to get only the table.
"""
import sys

import pytest

from polyinv.replay import CHECKS, Context, run_check

RESULTS = {}


@pytest.fixture(scope="module")
def ctx():
    return Context()


@pytest.mark.parametrize("number", [n for n, _, _ in CHECKS], ids=[f"criterion_{n}" for n, _, _ in CHECKS])
def test_criterion(number, ctx):
    row = run_check(number, ctx, stable=True)
    line = f"{row['status']} criterion {number}: {row['name']} | {row['detail']}"
    RESULTS[number] = line
    print(line)
    assert row["status"] == "PASS", row["detail"]


def test_mutation_is_detected():
    # a corrupted coefficient in family B must turn criterion 6 red
    row = run_check(6, Context(mutate=True), stable=True)
    assert row["status"] == "FAIL"


def main():
    ctx = Context()
    failed = 0
    for n, _, _ in CHECKS:
        row = run_check(n, ctx, stable=True)
        failed += row["status"] != "PASS"
        print(f"{row['status']} criterion {n}: {row['name']} | {row['detail']}", flush=True)
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
