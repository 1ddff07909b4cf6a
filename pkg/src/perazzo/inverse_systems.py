"""Macaulay inverse systems: catalecticant maps, h-vectors, annihilators.

For a nonzero form f of degree d, the degree-t catalecticant is the linear map
S_t -> R_{d-t} sending a differential operator w to w(f).  Its rank is the
Hilbert function value h_t of the Artinian Gorenstein quotient A_f = S/Ann(f),
and its kernel is the degree-t graded piece of the annihilator ideal.

Also here: the binomial expansion behind Macaulay's growth bound, the derived
upper/lower bound operators, the O-sequence test, and the Green restriction
bound for general linear sections.

Computations refuse forms past the desk-scale guard (degree > 32 or more than
8 variables) unless the caller raises the limits explicitly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import GuardError, InternalError
from .linalg import RationalMatrix
from .poly import HomogeneousPoly, VariableSet, apply_monomial_op, monomials

__all__ = [
    "DEFAULT_MAX_DEGREE",
    "DEFAULT_MAX_VARS",
    "ensure_desk_scale",
    "CatalecticantMap",
    "catalecticant",
    "HVector",
    "h_vector",
    "ann_basis",
    "binomial_expansion",
    "macaulay_upper",
    "macaulay_lower",
    "is_osequence",
    "green_bound",
]

DEFAULT_MAX_DEGREE = 32
DEFAULT_MAX_VARS = 8


def ensure_desk_scale(
    f: HomogeneousPoly,
    max_degree: int | None = None,
    max_vars: int | None = None,
) -> None:
    """Refuse inputs past the guard unless limits are raised explicitly."""
    limit_d = DEFAULT_MAX_DEGREE if max_degree is None else max_degree
    limit_v = DEFAULT_MAX_VARS if max_vars is None else max_vars
    if f.degree > limit_d:
        raise GuardError(
            f"degree {f.degree} exceeds the guard ({limit_d}); "
            "raise max_degree to proceed"
        )
    if len(f.vars) > limit_v:
        raise GuardError(
            f"{len(f.vars)} variables exceed the guard ({limit_v}); "
            "raise max_vars to proceed"
        )


@dataclass(frozen=True)
class CatalecticantMap:
    """The matrix of S_t -> R_{d-t}, w -> w(f), in graded-lex monomial bases.

    Rows are indexed by `row_monomials` (degree d-t in R), columns by
    `col_monomials` (degree t operators in S).
    """

    source_degree: int
    matrix: RationalMatrix
    row_monomials: tuple[tuple[int, ...], ...]
    col_monomials: tuple[tuple[int, ...], ...]

    def rank(self) -> int:
        return self.matrix.rank()


def catalecticant(
    f: HomogeneousPoly,
    t: int,
    max_degree: int | None = None,
    max_vars: int | None = None,
) -> CatalecticantMap:
    """Catalecticant map of f in operator degree t (0 <= t <= deg f)."""
    ensure_desk_scale(f, max_degree, max_vars)
    if not 0 <= t <= f.degree:
        raise ValueError(f"operator degree {t} outside 0..{f.degree}")
    n = len(f.vars)
    cols = monomials(n, t)
    rows = monomials(n, f.degree - t)
    row_index = {e: i for i, e in enumerate(rows)}
    data = [[Fraction(0)] * len(cols) for _ in rows]
    for j, op in enumerate(cols):
        image = apply_monomial_op(op, f)
        for e, c in image.terms.items():
            data[row_index[e]][j] = c
    return CatalecticantMap(
        t, RationalMatrix(data, ncols=len(cols)), tuple(rows), tuple(cols)
    )


@dataclass(frozen=True, eq=False)
class HVector:
    """Hilbert function of an Artinian graded algebra, as a finite tuple."""

    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", tuple(int(e) for e in self.entries))
        if not self.entries:
            raise ValueError("empty h-vector")
        if any(e < 0 for e in self.entries):
            raise ValueError("negative h-vector entry")

    @property
    def socle_degree(self) -> int:
        return len(self.entries) - 1

    def is_symmetric(self) -> bool:
        return self.entries == self.entries[::-1]

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, i: int) -> int:
        return self.entries[i]

    def __eq__(self, other) -> bool:
        if isinstance(other, HVector):
            return self.entries == other.entries
        if isinstance(other, (tuple, list)):
            return self.entries == tuple(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        return f"HVector{self.entries}"


def h_vector(
    f: HomogeneousPoly,
    max_degree: int | None = None,
    max_vars: int | None = None,
) -> HVector:
    """Hilbert function of A_f = S/Ann(f) for a nonzero form f.

    Catalecticant ranks are computed for t <= d/2 and mirrored; the rank
    symmetry rank(cat_t) = rank(cat_{d-t}) holds for every f because A_f is
    Gorenstein with socle degree d.
    """
    ensure_desk_scale(f, max_degree, max_vars)
    if f.is_zero():
        raise ValueError("h-vector of the zero polynomial is undefined")
    d = f.degree
    half = [
        catalecticant(f, t, max_degree, max_vars).rank() for t in range(d // 2 + 1)
    ]
    entries = half + [half[d - t] for t in range(d // 2 + 1, d + 1)]
    hv = HVector(tuple(entries))
    if not hv.is_symmetric():
        raise InternalError(f"h-vector {hv} is not symmetric")
    if not is_osequence(hv):
        raise InternalError(f"h-vector {hv} fails the O-sequence growth test")
    return hv


def ann_basis(
    f: HomogeneousPoly,
    t: int,
    max_degree: int | None = None,
    max_vars: int | None = None,
) -> list[HomogeneousPoly]:
    """Basis of the degree-t graded piece of Ann(f), as operator polynomials.

    Deterministic: kernel vectors of the catalecticant, content-normalized
    with positive leading coefficient.  For t > deg f this is all of S_t.
    """
    ensure_desk_scale(f, max_degree, max_vars)
    dual = f.vars.dual()
    if t < 0:
        raise ValueError("operator degree must be nonnegative")
    if t > f.degree:
        return [
            HomogeneousPoly.monomial(dual, e) for e in monomials(len(f.vars), t)
        ]
    cat = catalecticant(f, t, max_degree, max_vars)
    basis = []
    for vec in cat.matrix.kernel_basis():
        terms = {e: c for e, c in zip(cat.col_monomials, vec) if c}
        p = HomogeneousPoly(dual, t, terms)
        lead = p.terms[p.leading_monomial()]
        if lead < 0:
            p = -p
        basis.append(p)
    return basis


# -- Macaulay growth machinery ------------------------------------------------


def binomial_expansion(n: int, d: int) -> list[tuple[int, int]]:
    """The unique expansion n = C(a_d,d) + C(a_{d-1},d-1) + ... + C(a_e,e)
    with a_d > a_{d-1} > ... > a_e >= e >= 1, as (a_j, j) pairs."""
    if n < 1 or d < 1:
        raise ValueError("binomial expansion needs n >= 1 and d >= 1")
    out = []
    j = d
    rest = n
    while rest > 0:
        a = j
        while math.comb(a + 1, j) <= rest:
            a += 1
        out.append((a, j))
        rest -= math.comb(a, j)
        j -= 1
    return out


def macaulay_upper(n: int, d: int) -> int:
    """Macaulay bound n^<d>: shift both expansion rows up by one."""
    return sum(math.comb(a + 1, j + 1) for a, j in binomial_expansion(n, d))


def macaulay_lower(n: int, d: int) -> int:
    """The companion lower shift n_<d>: drop the expansion tops by one."""
    return sum(math.comb(a - 1, j) for a, j in binomial_expansion(n, d))


def is_osequence(h: HVector | Sequence[int]) -> bool:
    """True iff h starts at 1 and obeys Macaulay growth h_{t+1} <= h_t^<t>."""
    entries = tuple(h)
    if not entries or entries[0] != 1:
        return False
    if any(e < 0 for e in entries):
        return False
    for t in range(1, len(entries) - 1):
        cur, nxt = entries[t], entries[t + 1]
        bound = macaulay_upper(cur, t) if cur else 0
        if nxt > bound:
            return False
    return True


def green_bound(h_t: int, t: int) -> int:
    """Green's restriction bound: a general linear section of a component of
    dimension h_t in degree t has dimension at most (h_t)_<t>."""
    return macaulay_lower(h_t, t)
