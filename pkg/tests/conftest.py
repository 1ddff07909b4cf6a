"""Shared fixtures and exact helpers for the test suite."""

from __future__ import annotations

from fractions import Fraction

import pytest

from perazzo import (
    HomogeneousPoly,
    PerazzoForm,
    apply_monomial_op,
    binary_variables,
    perazzo_variables,
)


@pytest.fixture(scope="session")
def uv():
    return binary_variables()


@pytest.fixture(scope="session")
def u(uv):
    return HomogeneousPoly.variable(uv, 0)


@pytest.fixture(scope="session")
def v(uv):
    return HomogeneousPoly.variable(uv, 1)


@pytest.fixture(scope="session")
def xring():
    return perazzo_variables()


def apolar_apply(op: HomogeneousPoly, f: HomogeneousPoly) -> HomogeneousPoly:
    """Apply an operator polynomial (dual ring) to f, term by term."""
    if f.degree < op.degree:
        return HomogeneousPoly.zero(f.vars, 0)
    acc = HomogeneousPoly.zero(f.vars, f.degree - op.degree)
    for exps, coeff in op.terms.items():
        acc = acc + apply_monomial_op(exps, f).scale(coeff)
    return acc


def subst_binary(p: HomogeneousPoly, m) -> HomogeneousPoly:
    """p(a u + b v, c u + d v) for m = ((a, b), (c, d))."""
    ring = p.vars
    (a, b), (c, d) = m
    img_u = HomogeneousPoly(ring, 1, {(1, 0): Fraction(a), (0, 1): Fraction(b)})
    img_v = HomogeneousPoly(ring, 1, {(1, 0): Fraction(c), (0, 1): Fraction(d)})
    acc = HomogeneousPoly.zero(ring, p.degree)
    for (eu, ev), coeff in p.terms.items():
        acc = acc + (img_u**eu * img_v**ev).scale(coeff)
    return acc


def change_uv(pf: PerazzoForm, m) -> PerazzoForm:
    """The Perazzo form with u, v replaced by the invertible combination m."""
    return PerazzoForm(
        subst_binary(pf.p0, m),
        subst_binary(pf.p1, m),
        subst_binary(pf.p2, m),
        subst_binary(pf.g, m),
    )
