"""Acceptance suite: one test per criterion, exact equality throughout.

Each test prints a single PASS/FAIL line with the criterion's detail string
so the run log doubles as the acceptance report.
"""

import pytest

from splitfields import acceptance


def _run(name):
    fn = dict(acceptance.CRITERIA)[name]
    passed, detail = fn(seed=0)
    print(f"{'PASS' if passed else 'FAIL'} {name}: {detail}")
    assert passed, detail


def test_criterion_1_matrix_ground_truth():
    _run("matrix-ground-truth")


def test_criterion_2_theta_dimension():
    _run("theta-dimension")


def test_criterion_3_simplicity_descent():
    _run("simplicity-descent")


def test_criterion_4_split_radical():
    _run("split-radical")


def test_criterion_5_splitting_fields():
    _run("splitting-fields")


def test_criterion_6_chain_theorem():
    _run("chain-theorem")


def test_criterion_7_oracle_compare():
    _run("oracle-compare")


def test_criterion_8_split_dimension_count():
    _run("split-dimension-count")
