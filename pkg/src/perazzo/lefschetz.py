"""Lefschetz properties of Artinian Gorenstein algebras A_f = S/Ann(f).

The degree-t piece [A_f]_t is coordinatized through the catalecticant: a
monomial basis is chosen greedily in graded-lex order among operators whose
images w(f) are linearly independent.  The t-th relative Hessian of f is the
matrix ((w_i w_j)(f)) over that basis; its determinant vanishing or not is
basis-independent and decides the strong Lefschetz property (the classical
higher-Hessian criterion: L = sum a_i y_i is strong-Lefschetz exactly when no
Hessian determinant vanishes at a, so identical vanishing for t <= d/2 kills
every candidate).

The weak Lefschetz property asks for maximal rank of multiplication
x L : [A]_i -> [A]_{i+1} for one general linear form.  "General" is decided
exactly: the map's matrix over the function field Q(a_0..a_n) in the
coefficients of L has a generic rank, computed by fraction-free elimination.
A fast path first tries explicit random rational forms, whose achieved rank
is a certificate of generic maximality; only stages that stay deficient after
three attempts escalate to the symbolic computation.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .inverse_systems import ensure_desk_scale, h_vector
from .linalg import PolyMatrix, RationalMatrix, det_poly, generic_rank
from .poly import HomogeneousPoly, VariableSet, apply_monomial_op, monomials

__all__ = [
    "monomial_basis_of_A",
    "HessianReport",
    "hessian",
    "LefschetzVerdict",
    "has_slp",
    "has_wlp",
    "mult_map_matrix",
    "check_lefschetz_element",
    "CERT_GENERIC_RANK_MAXIMAL",
    "CERT_ALL_SPECIALIZATIONS_DEFICIENT",
    "CERT_HESSIAN_VANISHES",
    "CERT_HESSIAN_NONZERO",
]

CERT_GENERIC_RANK_MAXIMAL = "generic-rank-maximal"
CERT_ALL_SPECIALIZATIONS_DEFICIENT = "all-specializations-deficient"
CERT_HESSIAN_VANISHES = "hessian-vanishes"
CERT_HESSIAN_NONZERO = "hessian-nonzero"

_WLP_COEFF_RANGE = (1, 997)
_WLP_ATTEMPTS = 3


def monomial_basis_of_A(
    f: HomogeneousPoly,
    t: int,
    reverse: bool = False,
    max_degree: int | None = None,
) -> list[tuple[int, ...]]:
    """Monomial operators of degree t representing a basis of [A_f]_t.

    Greedy: walk S_t monomials in graded-lex order (reversed when asked, for
    basis-independence checks) and keep each one whose image under the
    catalecticant increases the rank.  Deterministic for fixed inputs.
    """
    ensure_desk_scale(f, max_degree)
    if f.is_zero():
        raise ValueError("zero polynomial has no quotient algebra basis")
    if not 0 <= t <= f.degree:
        raise ValueError(f"degree {t} outside 0..{f.degree}")
    n = len(f.vars)
    order = monomials(n, t)
    if reverse:
        order = order[::-1]
    row_index = {e: i for i, e in enumerate(monomials(n, f.degree - t))}
    reduced: list[tuple[int, list[Fraction]]] = []  # (pivot position, vector)
    basis: list[tuple[int, ...]] = []
    for op in order:
        image = apply_monomial_op(op, f)
        vec = [Fraction(0)] * len(row_index)
        for e, c in image.terms.items():
            vec[row_index[e]] = c
        for piv, rvec in reduced:
            if vec[piv]:
                factor = vec[piv] / rvec[piv]
                vec = [a - factor * b for a, b in zip(vec, rvec)]
        piv = next((i for i, x in enumerate(vec) if x), None)
        if piv is not None:
            reduced.append((piv, vec))
            basis.append(op)
    return basis


@dataclass(frozen=True)
class HessianReport:
    """The degree-t Hessian of f over a monomial basis of [A_f]_t."""

    t: int
    basis: tuple[tuple[int, ...], ...]
    matrix: PolyMatrix
    determinant: HomogeneousPoly
    vanishes: bool


def hessian(
    f: HomogeneousPoly,
    t: int,
    reverse: bool = False,
    max_degree: int | None = None,
) -> HessianReport:
    """Relative t-th Hessian: entries (w_i w_j)(f), degree d-2t forms.

    `vanishes` reports identical vanishing of the determinant, which does not
    depend on the basis choice.
    """
    ensure_desk_scale(f, max_degree)
    if not 1 <= t <= f.degree // 2:
        raise ValueError(f"Hessian order {t} outside 1..{f.degree // 2}")
    basis = monomial_basis_of_A(f, t, reverse=reverse, max_degree=max_degree)
    rows = []
    for wi in basis:
        row = []
        for wj in basis:
            combined = tuple(a + b for a, b in zip(wi, wj))
            row.append(apply_monomial_op(combined, f))
        rows.append(row)
    matrix = PolyMatrix(f.vars, rows, ncols=len(basis))
    det = det_poly(matrix)
    return HessianReport(t, tuple(basis), matrix, det, det.is_zero())


@dataclass(frozen=True)
class LefschetzVerdict:
    """Outcome of a weak/strong Lefschetz test with its certificate kind."""

    property: str  # "WLP" | "SLP"
    holds: bool
    failing_degree: int | None
    certificate: str
    witness: HomogeneousPoly | None = None
    vanishing_orders: tuple[int, ...] = ()


def has_slp(
    f: HomogeneousPoly,
    full: bool = False,
    max_degree: int | None = None,
) -> LefschetzVerdict:
    """Strong Lefschetz property via the Hessian criterion.

    Holds iff no Hessian determinant of order t = 1..floor(d/2) vanishes
    identically.  `full=True` keeps going past the first vanishing order so
    the report lists all of them.
    """
    ensure_desk_scale(f, max_degree)
    if f.is_zero():
        raise ValueError("zero polynomial")
    vanishing = []
    for t in range(1, f.degree // 2 + 1):
        if hessian(f, t, max_degree=max_degree).vanishes:
            vanishing.append(t)
            if not full:
                break
    if vanishing:
        return LefschetzVerdict(
            "SLP",
            False,
            vanishing[0],
            CERT_HESSIAN_VANISHES,
            vanishing_orders=tuple(vanishing),
        )
    return LefschetzVerdict("SLP", True, None, CERT_HESSIAN_NONZERO)


class _CoordSystem:
    """Coordinates on [A_f]_j: solve w(f)-vectors against a pivot square."""

    __slots__ = ("basis", "row_index", "sel", "w_inv")

    def __init__(self, f: HomogeneousPoly, j: int, max_degree: int | None):
        self.basis = monomial_basis_of_A(f, j, max_degree=max_degree)
        self.row_index = {
            e: i for i, e in enumerate(monomials(len(f.vars), f.degree - j))
        }
        columns = []
        for b in self.basis:
            vec = [Fraction(0)] * len(self.row_index)
            for e, c in apply_monomial_op(b, f).terms.items():
                vec[self.row_index[e]] = c
            columns.append(vec)
        v = RationalMatrix(columns, ncols=len(self.row_index))  # rows = columns of V
        _, piv = v.rref()  # pivot columns of V^T = independent rows of V
        self.sel = piv
        w = RationalMatrix(
            [[columns[c][r] for c in range(len(self.basis))] for r in self.sel],
            ncols=len(self.basis),
        )
        self.w_inv = w.inverse()

    def coords(self, image: HomogeneousPoly) -> list[Fraction]:
        vec = [Fraction(0)] * len(self.row_index)
        for e, c in image.terms.items():
            vec[self.row_index[e]] = c
        return self.w_inv.apply_to_vector([vec[r] for r in self.sel])


def _parameter_variables(n: int) -> VariableSet:
    return VariableSet(tuple(f"a{i}" for i in range(n)))


def mult_map_matrix(
    f: HomogeneousPoly,
    i: int,
    L: HomogeneousPoly | None = None,
    max_degree: int | None = None,
) -> RationalMatrix | PolyMatrix:
    """Matrix of multiplication by L from [A_f]_i to [A_f]_{i+1}.

    Bases are the greedy monomial bases of both graded pieces.  With a
    concrete linear operator L the entries are rational; with L=None the map
    is taken with symbolic coefficients a_0..a_n and the entries are linear
    forms in those parameters.
    """
    ensure_desk_scale(f, max_degree)
    if not 0 <= i < f.degree:
        raise ValueError(f"degree {i} outside 0..{f.degree - 1}")
    dual = f.vars.dual()
    if L is not None:
        if L.vars != dual:
            raise ValueError("L must be an operator over the dual variables")
        if L.degree != 1:
            raise ValueError("L must be linear")
    src = monomial_basis_of_A(f, i, max_degree=max_degree)
    dst = _CoordSystem(f, i + 1, max_degree)
    n = len(f.vars)
    if L is not None:
        cols = []
        for w in src:
            image = HomogeneousPoly.zero(f.vars, f.degree - i - 1)
            for le, lc in L.terms.items():
                combined = tuple(a + b for a, b in zip(le, w))
                image = image + apply_monomial_op(combined, f).scale(lc)
            cols.append(dst.coords(image))
        return RationalMatrix(
            [[cols[c][r] for c in range(len(src))] for r in range(len(dst.basis))],
            ncols=len(src),
        )
    params = _parameter_variables(n)
    unit = [tuple(1 if k == m else 0 for m in range(n)) for k in range(n)]
    cols = []
    for w in src:
        per_param = []
        for k in range(n):
            combined = tuple(a + b for a, b in zip(unit[k], w))
            per_param.append(dst.coords(apply_monomial_op(combined, f)))
        entries = []
        for r in range(len(dst.basis)):
            terms = {unit[k]: per_param[k][r] for k in range(n) if per_param[k][r]}
            entries.append(HomogeneousPoly(params, 1, terms))
        cols.append(entries)
    return PolyMatrix(
        params,
        [[cols[c][r] for c in range(len(src))] for r in range(len(dst.basis))],
        ncols=len(src),
    )


def check_lefschetz_element(
    f: HomogeneousPoly,
    L: HomogeneousPoly,
    max_degree: int | None = None,
) -> list[tuple[int, int]]:
    """Per-stage (achieved rank, maximal possible rank) for this concrete L."""
    ensure_desk_scale(f, max_degree)
    h = h_vector(f, max_degree)
    out = []
    for i in range(f.degree):
        m = mult_map_matrix(f, i, L, max_degree=max_degree)
        out.append((m.rank(), min(h[i], h[i + 1])))
    return out


def has_wlp(
    f: HomogeneousPoly,
    seed: int = 0,
    max_degree: int | None = None,
) -> LefschetzVerdict:
    """Weak Lefschetz property for a general linear form, decided exactly.

    Every stage i needs generic rank min(h_i, h_{i+1}) for
    x L : [A]_i -> [A]_{i+1}.  Random integer forms (coefficients in
    [1, 997], derived from `seed`) are tried three times as witnesses; any
    stage still deficient is settled symbolically over the function field in
    the coefficients of L, which is a proof either way.
    """
    ensure_desk_scale(f, max_degree)
    h = h_vector(f, max_degree)
    d = f.degree
    dual = f.vars.dual()
    n = len(f.vars)
    targets = {i: min(h[i], h[i + 1]) for i in range(d)}
    undecided = set(targets)
    witness: HomogeneousPoly | None = None
    rng = random.Random(seed)
    unit = [tuple(1 if k == m else 0 for m in range(n)) for k in range(n)]
    for _ in range(_WLP_ATTEMPTS):
        if not undecided:
            break
        coeffs = [rng.randint(*_WLP_COEFF_RANGE) for _ in range(n)]
        L = HomogeneousPoly(dual, 1, {unit[k]: coeffs[k] for k in range(n)})
        certified = set()
        for i in targets:
            if mult_map_matrix(f, i, L, max_degree=max_degree).rank() == targets[i]:
                certified.add(i)
        if certified == set(targets):
            witness = L
        undecided -= certified
    failing = []
    for i in sorted(undecided):
        if generic_rank(mult_map_matrix(f, i, None, max_degree=max_degree)) < targets[i]:
            failing.append(i)
    if failing:
        return LefschetzVerdict(
            "WLP", False, failing[0] + 1, CERT_ALL_SPECIALIZATIONS_DEFICIENT
        )
    return LefschetzVerdict(
        "WLP", True, None, CERT_GENERIC_RANK_MAXIMAL, witness=witness
    )
