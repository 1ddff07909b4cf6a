"""Exact arithmetic for binary forms: gcd, squarefree tests, linear factors.

A binary form of degree e lives in a two-variable ring as a HomogeneousPoly;
its plain coefficient vector (q_0, ..., q_e) lists the coefficient of
u^{e-i} v^i at position i.  Factorization questions reduce to univariate ones
by dehomogenizing at v = 1, which forgets exactly the power of v dividing the
form; that power is tracked separately.  Everything stays over the rationals:
gcds via the Euclidean algorithm, roots via the rational root theorem, no
floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd
from math import isqrt

from .poly import HomogeneousPoly, coeff_vector

__all__ = [
    "normalize_binary",
    "binary_partials",
    "binary_gcd",
    "binary_divides",
    "is_squarefree",
    "linear_factors",
    "rational_roots",
]


# Univariate layer: dense ascending coefficient lists over Fraction.


def _trim(p: list[Fraction]) -> list[Fraction]:
    while p and not p[-1]:
        p.pop()
    return p


def _udivmod(a: list[Fraction], b: list[Fraction]):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    q = [Fraction(0)] * max(0, len(r) - len(b) + 1)
    while len(r) >= len(b):
        factor = r[-1] / b[-1]
        shift = len(r) - len(b)
        q[shift] = factor
        for i, bc in enumerate(b):
            r[shift + i] -= factor * bc
        r.pop()
        _trim(r)
        if not r:
            break
    return _trim(q), r


def _ugcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _udivmod(a, b)[1]
    if a:
        lead = a[-1]
        a = [c / lead for c in a]
    return a


def _uderiv(p: list[Fraction]) -> list[Fraction]:
    return _trim([p[j] * j for j in range(1, len(p))])


def _ueval(p: list[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    for k in range(1, isqrt(n) + 1):
        if n % k == 0:
            small.append(k)
            if k != n // k:
                large.append(n // k)
    return small + large[::-1]


def _integerize(p: list[Fraction]) -> list[int]:
    lcm = 1
    for c in p:
        lcm = lcm * c.denominator // int_gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in p]
    g = 0
    for c in ints:
        g = int_gcd(g, abs(c))
    return [c // g for c in ints] if g else ints


def _urational_roots(p: list[Fraction]):
    """All rational roots with multiplicity, plus the rootless cofactor."""
    p = _trim(list(p))
    roots: list[tuple[Fraction, int]] = []
    zero_mult = 0
    while p and not p[0]:
        p = p[1:]
        zero_mult += 1
    if zero_mult:
        roots.append((Fraction(0), zero_mult))
    if len(p) > 1:
        ints = _integerize(p)
        candidates = []
        for num in _divisors(ints[0]):
            for den in _divisors(ints[-1]):
                candidates.extend((Fraction(num, den), Fraction(-num, den)))
        seen = set()
        for cand in candidates:
            if cand in seen:
                continue
            seen.add(cand)
            mult = 0
            while len(p) > 1 and not _ueval(p, cand):
                p = _udivmod(p, [-cand, Fraction(1)])[0]
                mult += 1
            if mult:
                roots.append((cand, mult))
            if len(p) <= 1:
                break
    return roots, p


# Binary layer.


def _binary_check(p: HomogeneousPoly) -> None:
    if len(p.vars) != 2:
        raise ValueError("expected a binary form")


def _vvaluation(coeffs) -> int:
    for i, c in enumerate(coeffs):
        if c:
            return i
    return len(coeffs)


def _from_univariate(ring, uni: list[Fraction], v_power: int) -> HomogeneousPoly:
    k = len(uni) - 1
    terms = {(j, k - j + v_power): c for j, c in enumerate(uni) if c}
    return HomogeneousPoly(ring, k + v_power, terms)


def normalize_binary(p: HomogeneousPoly) -> HomogeneousPoly:
    """Scale to coprime integer coefficients with positive leading one."""
    _binary_check(p)
    if p.is_zero():
        return p
    lcm = 1
    for c in p.terms.values():
        lcm = lcm * c.denominator // int_gcd(lcm, c.denominator)
    g = 0
    for c in p.terms.values():
        g = int_gcd(g, abs(int(c * lcm)))
    scaled = p.scale(Fraction(lcm, g))
    if scaled.terms[scaled.leading_monomial()] < 0:
        scaled = -scaled
    return scaled


def binary_partials(p: HomogeneousPoly):
    """Both first partial derivatives, as forms of one degree less."""
    _binary_check(p)
    if p.degree == 0:
        raise ValueError("cannot differentiate a degree-0 form meaningfully")
    ring = p.vars
    pu: dict = {}
    pv: dict = {}
    for (a, b), c in p.terms.items():
        if a:
            pu[(a - 1, b)] = pu.get((a - 1, b), Fraction(0)) + a * c
        if b:
            pv[(a, b - 1)] = pv.get((a, b - 1), Fraction(0)) + b * c
    d = p.degree - 1
    return HomogeneousPoly(ring, d, pu), HomogeneousPoly(ring, d, pv)


def binary_gcd(p: HomogeneousPoly, q: HomogeneousPoly) -> HomogeneousPoly:
    """Greatest common divisor, normalized to primitive integer form."""
    _binary_check(p)
    _binary_check(q)
    if p.is_zero() and q.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    if p.is_zero():
        return normalize_binary(q)
    if q.is_zero():
        return normalize_binary(p)
    cp = coeff_vector(p, descale=False)
    cq = coeff_vector(q, descale=False)
    sp, sq = _vvaluation(cp), _vvaluation(cq)
    up = _trim(list(reversed(cp)))
    uq = _trim(list(reversed(cq)))
    g = _ugcd(up, uq)
    return normalize_binary(_from_univariate(p.vars, g, min(sp, sq)))


def binary_divides(q: HomogeneousPoly, p: HomogeneousPoly) -> bool:
    """Whether q divides p in the binary polynomial ring."""
    _binary_check(p)
    _binary_check(q)
    if q.is_zero():
        raise ValueError("division by the zero form")
    if p.is_zero():
        return True
    if q.degree > p.degree:
        return False
    cp = coeff_vector(p, descale=False)
    cq = coeff_vector(q, descale=False)
    if _vvaluation(cq) > _vvaluation(cp):
        return False
    up = _trim(list(reversed(cp)))
    uq = _trim(list(reversed(cq)))
    return not _udivmod(up, uq)[1]


def is_squarefree(p: HomogeneousPoly) -> bool:
    """No repeated root over the algebraic closure (constants count as yes)."""
    _binary_check(p)
    if p.is_zero():
        raise ValueError("squarefreeness of the zero form is undefined")
    if p.degree <= 1:
        return True
    pu, pv = binary_partials(p)
    return binary_gcd(pu, pv).degree == 0


def linear_factors(p: HomogeneousPoly):
    """Split off every rational linear factor.

    Returns (scalar, factors, remainder): factors is a list of
    (primitive linear form, multiplicity) pairs with distinct forms,
    remainder is the rootless cofactor of degree >= 2 or None, and
    p = scalar * prod(form^mult) * remainder exactly.
    """
    _binary_check(p)
    if p.is_zero():
        raise ValueError("cannot factor the zero form")
    ring = p.vars
    if p.degree == 0:
        return p.terms[(0, 0)], [], None
    coeffs = coeff_vector(p, descale=False)
    s = _vvaluation(coeffs)
    factors: list[tuple[HomogeneousPoly, int]] = []
    if s:
        factors.append((HomogeneousPoly.variable(ring, 1), s))
    uni = _trim(list(reversed(coeffs)))
    roots, cofactor = _urational_roots(uni)
    for root, mult in roots:
        num, den = root.numerator, root.denominator
        form = HomogeneousPoly(
            ring, 1, {(1, 0): Fraction(den), (0, 1): Fraction(-num)}
        )
        factors.append((form, mult))
    remainder = None
    if len(cofactor) > 1:
        remainder = normalize_binary(_from_univariate(ring, cofactor, 0))
    product = HomogeneousPoly(ring, 0, {(0, 0): Fraction(1)})
    for form, mult in factors:
        product = product * (form**mult)
    if remainder is not None:
        product = product * remainder
    lead = product.leading_monomial()
    scalar = p.coefficient(lead) / product.coefficient(lead)
    return scalar, factors, remainder


def rational_roots(p: HomogeneousPoly) -> list[tuple[tuple[int, int], int]] | None:
    """Projective rational roots (a, b) with multiplicity, or None.

    Returns the full root list only when p splits completely into rational
    linear factors; each root is normalized with positive first nonzero
    coordinate and satisfies p(a, b) = 0.
    """
    _, factors, remainder = linear_factors(p)
    if remainder is not None:
        return None
    roots = []
    for form, mult in factors:
        fu = form.coefficient((1, 0))
        fv = form.coefficient((0, 1))
        a, b = -fv, fu
        g = int_gcd(int(a), int(b)) if a.denominator == 1 == b.denominator else 0
        if g:
            a, b = int(a) // g, int(b) // g
        if a < 0 or (a == 0 and b < 0):
            a, b = -a, -b
        roots.append(((int(a), int(b)), mult))
    return roots
