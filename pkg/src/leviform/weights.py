"""Newton supports, quasihomogeneous weights, and semiquasihomogeneous splits.

Weights are normalized so the quasihomogeneous degree is 1: a weight system
is a positive rational vector alpha with <alpha, k> = 1 for every support
point k.  When the support does not pin alpha down uniquely the result is
flagged ambiguous and completed by a fixed deterministic rule (see
find_weights) rather than guessing intent.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    NotInMaximalIdealError,
    NotQuasihomogeneousError,
    NotSemiquasihomogeneousError,
    ZeroInputError,
)
from .poly import Poly, term_sort_key
from .localbasis import DEFAULT_DEGREE_CAP, is_isolated_singularity

__all__ = [
    "WeightSystem",
    "SemiQhDecomposition",
    "newton_support",
    "find_weights",
    "weighted_degree",
    "semiqh_split",
]


def newton_support(f: Poly) -> frozenset[tuple[int, ...]]:
    """Exponent set of the nonzero terms."""
    return f.support()


@dataclass(frozen=True)
class WeightSystem:
    """Positive rational weights alpha, normalized to degree d = 1.

    ``ambiguous`` records that the defining support admitted more than one
    weight system and a deterministic completion was applied.
    """

    alpha: tuple[Fraction, ...]
    ambiguous: bool = False

    @property
    def nvars(self) -> int:
        return len(self.alpha)


def weighted_degree(exps: tuple[int, ...], weights: WeightSystem) -> Fraction:
    if len(exps) != weights.nvars:
        raise ValueError("exponent length does not match the weight system")
    return sum((a * e for a, e in zip(weights.alpha, exps)), Fraction(0))


# ---------------------------------------------------------------------------
# exact linear algebra over Fraction
# ---------------------------------------------------------------------------

def _row_reduce(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (matrix, pivot column indices)."""
    rows = [row[:] for row in rows]
    pivots: list[int] = []
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        pivot = next((k for k in range(r, len(rows)) if rows[k][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for k in range(len(rows)):
            if k != r and rows[k][c] != 0:
                f = rows[k][c]
                rows[k] = [x - f * y for x, y in zip(rows[k], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def _solve_affine(matrix: list[list[Fraction]], rhs: list[Fraction]):
    """Solve A x = b exactly; returns (particular solution, free columns) or None."""
    ncols = len(matrix[0])
    aug = [row + [b] for row, b in zip(matrix, rhs)]
    reduced, pivots = _row_reduce(aug)
    pivots = [c for c in pivots if c < ncols]
    for row in reduced:
        if all(x == 0 for x in row[:ncols]) and row[ncols] != 0:
            return None
    solution = [Fraction(0)] * ncols
    for r, c in enumerate(pivots):
        solution[c] = reduced[r][ncols]
    free = [c for c in range(ncols) if c not in pivots]
    return solution, free


def _independent_rows(matrix: list[list[Fraction]]) -> list[list[Fraction]]:
    kept: list[list[Fraction]] = []
    for row in matrix:
        trial = kept + [row]
        _, pivots = _row_reduce(trial)
        if len(pivots) == len(trial):
            kept.append(row)
    return kept


def _minimum_norm_solution(matrix: list[list[Fraction]], rhs_value: Fraction) -> list[Fraction]:
    """Least-norm solution of A x = rhs via x = A^T (A A^T)^{-1} rhs.

    Rows must be linearly independent; the Gram matrix is then invertible.
    """
    rows = matrix
    m = len(rows)
    gram = [[sum(a * b for a, b in zip(rows[i], rows[j])) for j in range(m)] for i in range(m)]
    aug = [gram[i] + [rhs_value] for i in range(m)]
    reduced, pivots = _row_reduce(aug)
    lam = [Fraction(0)] * m
    for r, c in enumerate(pivots):
        lam[c] = reduced[r][m]
    ncols = len(rows[0])
    return [sum(lam[i] * rows[i][c] for i in range(m)) for c in range(ncols)]


# ---------------------------------------------------------------------------
# weight detection
# ---------------------------------------------------------------------------

def find_weights(support) -> WeightSystem:
    """Positive rational alpha with every support point at weighted degree 1.

    Resolution order when the linear system does not force a unique answer:

    * support concentrated in one total degree k: alpha = (1/k, ..., 1/k),
      so the weighted filtration agrees with the usual one;
    * otherwise solve on the variables that actually occur; if still
      underdetermined take the minimum-norm solution of that subsystem;
    * variables absent from every support point get the smallest weight used
      by the present ones.

    Any completed answer is verified positive, and flagged ambiguous whenever
    the system had more than one solution.
    """
    points = [tuple(p) for p in support]
    if not points:
        raise ZeroInputError("cannot find weights for an empty support")
    nvars = len(points[0])
    if any(sum(p) == 0 for p in points):
        raise NotQuasihomogeneousError(
            "a constant term can never sit on a weighted diagonal"
        )

    matrix = [[Fraction(e) for e in p] for p in points]
    rhs = [Fraction(1)] * len(points)
    solved = _solve_affine(matrix, rhs)
    if solved is None:
        raise NotQuasihomogeneousError("the support admits no weight system")
    solution, free = solved

    degrees = {sum(p) for p in points}
    if len(degrees) == 1:
        k = degrees.pop()
        alpha = tuple([Fraction(1, k)] * nvars)
        return WeightSystem(alpha, ambiguous=bool(free))

    if not free:
        alpha = tuple(solution)
        _require_positive(alpha)
        return WeightSystem(alpha, ambiguous=False)

    used = [i for i in range(nvars) if any(p[i] for p in points)]
    sub = [[row[i] for i in used] for row in matrix]
    sub_solved = _solve_affine(sub, rhs)
    assert sub_solved is not None
    sub_solution, sub_free = sub_solved
    if sub_free:
        independent = _independent_rows(sub)
        sub_solution = _minimum_norm_solution(independent, Fraction(1))
    alpha_list = [Fraction(0)] * nvars
    for pos, i in enumerate(used):
        alpha_list[i] = sub_solution[pos]
    positive_used = [alpha_list[i] for i in used if alpha_list[i] > 0]
    if len(positive_used) != len(used):
        raise NotQuasihomogeneousError("no positive weight system found for the support")
    fill = min(positive_used) if positive_used else Fraction(1)
    for i in range(nvars):
        if i not in used:
            alpha_list[i] = fill
    alpha = tuple(alpha_list)
    _require_positive(alpha)
    return WeightSystem(alpha, ambiguous=True)


def _require_positive(alpha: tuple[Fraction, ...]):
    if any(a <= 0 for a in alpha):
        raise NotQuasihomogeneousError("no positive weight system found for the support")


# ---------------------------------------------------------------------------
# semiquasihomogeneous decomposition
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SemiQhDecomposition:
    """f = principal + tail with the principal part on the weighted diagonal."""

    principal: Poly
    tail: Poly
    weights: WeightSystem


def _diagonal_candidate(f: Poly) -> tuple[frozenset, WeightSystem]:
    """Grow a diagonal support from the lowest-degree terms until stable.

    Starting from the terms of least total degree, repeatedly recompute the
    weight system of the candidate: terms falling below the diagonal are
    absorbed, terms landing exactly on it join, and when the system stays
    underdetermined the smallest remaining support point that fits is
    absorbed to pin the weights down.  The candidate strictly grows, so this
    stops after at most one pass per support point.
    """
    support = sorted(f.support(), key=term_sort_key)
    min_deg = sum(support[0])
    candidate = {p for p in support if sum(p) == min_deg}
    while True:
        ws = find_weights(candidate)
        below = {p for p in support if weighted_degree(p, ws) < 1}
        if below:
            candidate |= below
            continue
        # every candidate point has weighted degree exactly 1 by construction,
        # so the on-diagonal set can only extend the candidate
        on_diagonal = {p for p in support if weighted_degree(p, ws) == 1}
        if on_diagonal != candidate:
            candidate = on_diagonal
            continue
        if ws.ambiguous:
            absorbed = False
            for p in support:
                if p in candidate:
                    continue
                try:
                    trial = find_weights(candidate | {p})
                except NotQuasihomogeneousError:
                    continue
                if all(weighted_degree(q, trial) >= 1 for q in support):
                    candidate |= {p}
                    absorbed = True
                    break
            if absorbed:
                continue
        return frozenset(candidate), ws


def semiqh_split(f: Poly, degree_cap: int = DEFAULT_DEGREE_CAP) -> SemiQhDecomposition:
    """Split f into a finite-multiplicity diagonal part and a strictly higher tail."""
    if f.is_zero():
        raise ZeroInputError("cannot split the zero polynomial")
    if f.constant_term():
        raise NotInMaximalIdealError("the germ must vanish at the origin")
    try:
        diagonal, ws = _diagonal_candidate(f)
    except NotQuasihomogeneousError as exc:
        raise NotSemiquasihomogeneousError(
            f"no weight system puts a principal part on the diagonal: {exc}",
            reason="NO_WEIGHTS",
        ) from exc
    principal = Poly(f.nvars, {e: c for e, c in f.items() if e in diagonal})
    tail = f - principal
    if not is_isolated_singularity(principal, degree_cap):
        raise NotSemiquasihomogeneousError(
            "the diagonal part has a non-isolated singularity (infinite multiplicity)",
            reason="NON_ISOLATED",
        )
    return SemiQhDecomposition(principal, tail, ws)
