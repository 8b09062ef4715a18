"""Shared builders for the standard small algebras, constructed by hand so the
tests do not depend on the packaged fixture files."""

from __future__ import annotations

import pytest

from usym import FinAlgebra, QQ


def dual_numbers(field) -> FinAlgebra:
    """k[X]/(X^2): basis {1, t} with t^2 = 0."""
    one = field.one
    return FinAlgebra(
        field,
        2,
        {(0, 0, 0): one, (0, 1, 1): one, (1, 0, 1): one},
        ("1", "t"),
    )


def triangular(field) -> FinAlgebra:
    """Upper-triangular 2x2 matrices: basis {e1=I, e2, e3} with
    e2 e3 = e2, e3 e3 = e3, e2 e2 = e3 e2 = 0."""
    one = field.one
    tau = {}
    for j in range(3):
        tau[(0, j, j)] = one
        tau[(j, 0, j)] = one
    tau[(1, 2, 1)] = one
    tau[(2, 2, 2)] = one
    return FinAlgebra(field, 3, tau, ("e1", "e2", "e3"))


def ground_field(field) -> FinAlgebra:
    """The base field as a one-dimensional algebra."""
    return FinAlgebra(field, 1, {(0, 0, 0): field.one}, ("1",))


@pytest.fixture
def dual_q():
    return dual_numbers(QQ)


@pytest.fixture
def triangular_q():
    return triangular(QQ)


def truncated_cubic(field) -> FinAlgebra:
    """k[X]/(X^3): basis {1, x, x^2} with x*x = x^2 and x*x^2 = 0."""
    one = field.one
    tau = {}
    for j in range(3):
        tau[(0, j, j)] = one
        tau[(j, 0, j)] = one
    tau[(1, 1, 2)] = one
    return FinAlgebra(field, 3, tau, ("1", "x", "x2"))
